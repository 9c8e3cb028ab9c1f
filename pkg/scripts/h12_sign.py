#!/usr/bin/env python3
"""The H12 datum with one tame place: unramified characteristics of every
irreducible and of its psi_2 image, and the resulting symplectic J'."""
from galjacobi.chartab import adams, char_table, frobenius_schur
from galjacobi.corpus import h12_symplectic_datum
from galjacobi.globalext import equivariant_symplectic_J, global_y


def main():
    data = h12_symplectic_datum()
    table = char_table(data.group)
    print(f"{'chi':5} {'deg':>3} {'FS':>3} {'y(chi)':>8} {'y(psi2 chi)':>12}")
    for lab, chi in zip(table.labels, table):
        y1 = global_y(data, chi).render().split(";")[0]
        y2 = global_y(data, adams(chi, 2)).render().split(";")[0]
        print(f"{lab:5} {table.degrees[table.index(chi)]:>3} {frobenius_schur(chi):>3} {y1:>8} {y2:>12}")
    J = equivariant_symplectic_J(data)
    print("J' =", [int(c.to_fraction()) for c in J.coeffs], "order", J.order())


if __name__ == "__main__":
    main()

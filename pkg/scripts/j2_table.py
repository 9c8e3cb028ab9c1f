#!/usr/bin/env python3
"""Print J2 for the totally ramified cyclic tame data C_e over F_q, e | q - 1."""
import argparse

from galjacobi.center import is_rational_equivariant
from galjacobi.corpus import CorpusConfig, tame_abelian_data
from galjacobi.gauss import equivariant_J2


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-q", type=int, default=13)
    args = ap.parse_args()
    for d in tame_abelian_data(CorpusConfig(max_q=args.max_q)):
        G = d.base.group
        if G.size != d.e:
            continue
        J = equivariant_J2(d)
        coeffs = ", ".join(c.render().replace("; order=1", "") for c in J.coeffs)
        print(f"q={d.residue.q:<3} e={d.e:<3} rational={is_rational_equivariant(J)!s:5} J2 = [{coeffs}]")


if __name__ == "__main__":
    main()

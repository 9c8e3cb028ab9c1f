import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from galjacobi.center import (
    CentralElement,
    central_induce,
    from_group_algebra,
    is_rational_equivariant,
    is_symplectic_positive,
    to_group_algebra,
    twist_endo,
)
from galjacobi.chartab import adams, char_table, induce, restrict
from galjacobi.cyclo import ONE, Cyclotomic
from galjacobi.errors import InputError
from galjacobi.groups import group_cyclic, group_dihedral, group_quaternion, subgroup_generated

z = Cyclotomic.zeta


def convolve(G, a, b):
    out = [Fraction(0)] * G.size
    for g, x in enumerate(a):
        if x:
            for h, y in enumerate(b):
                if y:
                    out[G.mul[g][h]] += x * y
    return out


def class_sums(G):
    return [[Fraction(1) if g in cls else Fraction(0) for g in range(G.size)] for cls in G.conjugacy.classes]


@pytest.mark.parametrize("G", [group_dihedral(8), group_quaternion(12), group_cyclic(5)])
def test_idempotent_basis_is_multiplicative(G):
    sums = class_sums(G)
    for a in sums:
        for b in sums:
            prod = from_group_algebra(G, convolve(G, a, b))
            assert prod == from_group_algebra(G, a) * from_group_algebra(G, b)


@pytest.mark.parametrize("G", [group_dihedral(10), group_quaternion(8)])
def test_group_algebra_roundtrip(G):
    for a in class_sums(G):
        assert [c.to_fraction() for c in to_group_algebra(from_group_algebra(G, a))] == a


def test_norm_element_coordinates():
    G = group_quaternion(8)
    N = subgroup_generated(G, [1])
    e = [Fraction(1, 4) if g in N else 0 for g in range(8)]
    x = from_group_algebra(G, e)
    # e_N is 1 exactly on the characters trivial on N
    trivial_on_N = [all(chi.at(g) == chi.degree for g in N.elements) for chi in char_table(G)]
    assert [c == ONE for c in x.coeffs] == trivial_on_N
    assert all(c == 1 or c == 0 for c in x.coeffs)


def test_non_central_rejected():
    G = group_dihedral(6)
    with pytest.raises(InputError):
        from_group_algebra(G, {1: 1})
    with pytest.raises(InputError):
        from_group_algebra(G, {G.id: 0}, unit=True)


def test_twist_endo_examples():
    G = group_cyclic(4)
    x = CentralElement(G, [1, -1, z(4), -z(4)])
    # m + n psi_k at chi is x_chi^m x_{chi^k}^n
    tab = char_table(G)
    y = twist_endo(x, 1, -1, 2)
    for i, chi in enumerate(tab):
        assert y.coeffs[i] == x.coeffs[i] / x[adams(chi, 2)]


@given(st.lists(st.integers(1, 11), min_size=4, max_size=4),
       st.lists(st.integers(1, 11), min_size=4, max_size=4),
       st.integers(-3, 3), st.integers(-3, 3), st.integers(1, 9))
def test_twist_endo_is_a_homomorphism(a, b, m, n, k):
    G = group_quaternion(8)
    x, y = CentralElement(G, a + [a[0]]), CentralElement(G, b + [b[1]])
    assert twist_endo(x * y, m, n, k) == twist_endo(x, m, n, k) * twist_endo(y, m, n, k)


def test_central_induce_transitive():
    G = group_cyclic(8)
    H4 = subgroup_generated(G, [2])
    K_in_H = subgroup_generated(H4.group, [2])
    K_in_G = subgroup_generated(G, [4])
    x1 = CentralElement(K_in_H.group, [3, Fraction(-1, 2)])
    x2 = CentralElement(K_in_G.group, [3, Fraction(-1, 2)])
    assert central_induce(central_induce(x1, K_in_H), H4) == central_induce(x2, K_in_G)


def test_central_induce_evaluates_restriction():
    G = group_quaternion(12)
    J = subgroup_generated(G, [2])
    x = CentralElement(J.group, [2, z(3), z(3, 2)])
    y = central_induce(x, J)
    for chi in char_table(G):
        assert y[chi] == x.evaluate(restrict(chi, J))


def test_central_induce_frobenius_on_induced():
    G = group_dihedral(12)
    J = subgroup_generated(G, [1])
    x = CentralElement(J.group, list(range(2, 8)))
    y = central_induce(x, J)
    for phi in char_table(J.group):
        ind = induce(phi, J)
        assert y.evaluate(ind) == math.prod((x.coeffs[i] ** c for i, c in
                                             enumerate(char_table(J.group).integral_decomposition(restrict(ind, J)))), start=ONE)


def test_rationality():
    G = group_cyclic(3)
    assert is_rational_equivariant(CentralElement(G, [1, z(3), z(3, 2)]))
    assert not is_rational_equivariant(CentralElement(G, [1, z(3), z(3)]))
    assert is_rational_equivariant(CentralElement(G, [5, 7, 7]))
    assert not is_rational_equivariant(CentralElement(G, [5, 7, 8]))


def test_symplectic_positivity():
    G = group_quaternion(8)
    symp = [i for i, chi in enumerate(char_table(G)) if chi.degree == 2][0]
    coeffs = [1] * 5
    assert is_symplectic_positive(CentralElement(G, coeffs))
    coeffs[symp] = -1
    assert not is_symplectic_positive(CentralElement(G, coeffs))
    coeffs[symp] = z(5) + z(5, 4)
    assert is_symplectic_positive(CentralElement(G, coeffs))


def test_order_and_identity():
    G = group_cyclic(2)
    x = CentralElement(G, [1, -1])
    assert x.order() == 2 and (x * x).is_identity()
    assert CentralElement(G, [2, 1]).order() == 0

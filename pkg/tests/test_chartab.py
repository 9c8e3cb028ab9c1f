import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from galjacobi.chartab import (
    adams,
    char_table,
    det_char,
    frobenius_schur,
    from_element_function,
    induce,
    inflate,
    inner_product,
    restrict,
    symplectic_chars,
    trivial_character,
)
from galjacobi.cyclo import ONE, ZERO, Cyclotomic
from galjacobi.errors import InputError
from galjacobi.groups import (
    all_subgroups,
    group_cyclic,
    group_dihedral,
    group_direct_product,
    group_metacyclic,
    group_quaternion,
    normal_subgroups,
    quotient,
    subgroup_generated,
)
from galjacobi.verify import brute_force_indicator, h8_induction_defect

z = Cyclotomic.zeta


# 2x2 matrices over Q(zeta) as nested tuples

def mat_mul(A, B):
    return tuple(tuple(sum((A[i][k] * B[k][j] for k in range(2)), ZERO) for j in range(2)) for i in range(2))


def mat_pow(A, k):
    R = ((ONE, ZERO), (ZERO, ONE))
    for _ in range(k):
        R = mat_mul(R, A)
    return R


def quaternion_rep(order):
    """x -> diag(w, w^-1), y -> [[0, -1], [1, 0]] with w a primitive (order/2)-th root."""
    n = order // 2
    w = z(n)
    X = ((w, ZERO), (ZERO, w.inverse()))
    Y = ((ZERO, -ONE), (ONE, ZERO))
    return n, {a + n * b: mat_mul(mat_pow(X, a), mat_pow(Y, b)) for a in range(n) for b in range(2)}


@pytest.mark.parametrize("order", [8, 12, 16])
def test_quaternion_faithful_rep_matches_table(order):
    G = group_quaternion(order)
    n, rho = quaternion_rep(order)
    # the matrices really form a representation of the table
    for g in range(G.size):
        for h in (1, n):
            assert mat_mul(rho[g], rho[h]) == rho[G.mul[g][h]]
    chi = from_element_function(G, lambda g: rho[g][0][0] + rho[g][1][1])
    det = from_element_function(G, lambda g: rho[g][0][0] * rho[g][1][1] - rho[g][0][1] * rho[g][1][0])
    table = char_table(G)
    assert table.is_irreducible(chi)
    assert inner_product(chi, chi) == 1
    assert det_char(chi) == det
    assert frobenius_schur(chi) == -1
    assert brute_force_indicator(chi) == -1


def test_h8_degrees_and_symplectic():
    table = char_table(group_quaternion(8))
    assert sorted(table.degrees) == [1, 1, 1, 1, 2]
    assert len(symplectic_chars(table.group)) == 1


def test_d8_has_same_degrees_but_no_symplectic():
    G = group_dihedral(8)
    assert sorted(char_table(G).degrees) == [1, 1, 1, 1, 2]
    assert symplectic_chars(G) == []


def test_h12_symplectic_count():
    G = group_quaternion(12)
    assert sorted(char_table(G).degrees) == [1, 1, 1, 1, 2, 2]
    # one degree-2 character is faithful and symplectic, the other factors through S3
    assert len(symplectic_chars(G)) == 1


def test_metacyclic_21():
    G = group_metacyclic(7, 3, 2)
    table = char_table(G)
    assert sorted(table.degrees) == [1, 1, 1, 3, 3]
    assert {frobenius_schur(c) for c in table} == {0, 1}


@pytest.mark.parametrize("G", [
    group_cyclic(12), group_dihedral(10), group_quaternion(16),
    group_metacyclic(7, 3, 2), group_direct_product(group_cyclic(2), group_dihedral(6)),
])
def test_orthogonality(G):
    table = char_table(G)
    table.verify()
    for i, a in enumerate(table):
        for j, b in enumerate(table):
            assert inner_product(a, b) == (1 if i == j else 0)


def test_cyclic_table_oracle():
    n = 9
    G = group_cyclic(n)
    expected = {tuple(z(n, a * g) for g in range(n)) for a in range(n)}
    got = {tuple(chi.at(g) for g in range(n)) for chi in char_table(G)}
    assert got == expected


def test_dixon_prime_recorded():
    table = char_table(group_quaternion(8))
    p = table.dixon_prime
    assert (p - 1) % table.exponent == 0 and p * p > 4 * 8


def test_induced_trivial_is_permutation_character():
    G = group_dihedral(12)
    H = subgroup_generated(G, [6])
    ind = induce(trivial_character(H.group), H)
    # number of fixed cosets gH with g x in gH
    cosets = {frozenset(G.mul[g][h] for h in H.elements) for g in range(G.size)}
    perm = from_element_function(G, lambda x: sum(1 for c in cosets if {G.mul[x][g] for g in c} == c))
    assert ind == perm


@pytest.mark.parametrize("G", [group_dihedral(8), group_quaternion(12), group_metacyclic(7, 3, 2)])
def test_frobenius_reciprocity(G):
    for H in all_subgroups(G):
        for chi in char_table(G):
            for phi in char_table(H.group):
                assert inner_product(induce(phi, H), chi) == inner_product(phi, restrict(chi, H))


def test_inflation_of_quotient_characters():
    G = group_quaternion(8)
    N = next(N for N in normal_subgroups(G) if N.order == 2)
    Q = quotient(G, N)
    lifted = [inflate(chi, G, N) for chi in char_table(Q)]
    assert all(char_table(G).is_irreducible(c) for c in lifted)
    assert all(c.at(g) == c.degree for c in lifted for g in N.elements)


def test_adams_examples():
    G = group_quaternion(8)
    chi = symplectic_chars(G)[0]
    psi2 = adams(chi, 2)
    # chi(g^2) is 2 on the centre and -2 elsewhere, so psi_2 chi is the sum of the
    # nontrivial linear characters minus the trivial one
    table = char_table(G)
    linear = [c for c in table if c.degree == ONE and c != trivial_character(G)]
    assert psi2 == sum(linear[1:], linear[0]) - trivial_character(G)
    with pytest.raises(InputError):
        adams(chi, 0)


def test_h8_induction_counterexample():
    ok, witness = h8_induction_defect()
    assert ok, witness


def test_det_is_multiplicative_on_sums():
    G = group_dihedral(10)
    a, b = char_table(G)[2], char_table(G)[3]
    assert det_char(a + b) == det_char(a) * det_char(b)
    assert det_char(a - b) == det_char(a) * det_char(b) ** -1


def test_non_virtual_rejected():
    G = group_cyclic(3)
    half = trivial_character(G) * Fraction(1, 2)
    with pytest.raises(InputError):
        char_table(G).integral_decomposition(half)


@given(st.sampled_from([8, 12, 16, 20]), st.integers(1, 20))
def test_adams_det_power(order, k):
    G = group_quaternion(order)
    for chi in char_table(G):
        assert det_char(adams(chi, k)) == det_char(chi) ** k


@given(st.integers(3, 21).filter(lambda n: n % 2), st.integers(1, 30))
def test_adams_permutes_irreducibles_for_units(n, k):
    G = group_dihedral(2 * n)
    if math.gcd(k, G.size) != 1:
        return
    table = char_table(G)
    images = [table.index(adams(chi, k)) for chi in table]
    assert sorted(images) == list(range(len(table)))

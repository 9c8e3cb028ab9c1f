import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from galjacobi.errors import InputError
from galjacobi.groups import (
    FiniteGroup,
    GroupTableError,
    Subgroup,
    all_subgroups,
    conjugacy,
    group_cyclic,
    group_dihedral,
    group_direct_product,
    group_metacyclic,
    group_quaternion,
    is_cyclic,
    is_normal,
    normal_subgroups,
    quotient,
    subgroup_generated,
)


def classes_by_orbits(G):
    seen, out = set(), []
    for g in range(G.size):
        if g in seen:
            continue
        orbit = {G.conj(g, x) for x in range(G.size)}
        seen |= orbit
        out.append(orbit)
    return out


@pytest.mark.parametrize("G, count", [
    (group_cyclic(7), 7),
    (group_dihedral(8), 5),
    (group_dihedral(6), 3),
    (group_quaternion(8), 5),
    (group_quaternion(12), 6),
    (group_metacyclic(7, 3, 2), 5),
])
def test_class_counts(G, count):
    assert len(conjugacy(G)) == count


@pytest.mark.parametrize("G", [group_dihedral(12), group_quaternion(16), group_metacyclic(7, 3, 2)])
def test_classes_are_conjugation_orbits(G):
    got = sorted(sorted(c) for c in conjugacy(G).classes)
    assert got == sorted(sorted(o) for o in classes_by_orbits(G))
    assert conjugacy(G).classes[0] == (G.id,)


def test_quaternion_relations():
    G = group_quaternion(12)
    x, y = 1, 6
    assert G.element_order(x) == 6
    assert G.mul[y][y] == G.power(x, 3)
    assert G.conj(x, y) == G.inv[x]
    # the unique involution is central
    invols = [g for g in range(G.size) if G.element_order(g) == 2]
    assert invols == [3]


def test_h8_has_one_involution_d8_has_five():
    H8, D8 = group_quaternion(8), group_dihedral(8)
    assert sum(H8.element_order(g) == 2 for g in range(8)) == 1
    assert sum(D8.element_order(g) == 2 for g in range(8)) == 5


def test_bad_tables_rejected():
    with pytest.raises(GroupTableError):
        FiniteGroup([[0, 1], [1, 1]])
    with pytest.raises(GroupTableError):
        FiniteGroup([[0, 1, 2], [1, 0, 2], [2, 2, 0]])
    with pytest.raises(GroupTableError):
        FiniteGroup([[0, 5], [1, 0]])
    with pytest.raises(InputError):
        group_metacyclic(7, 3, 3)


def test_non_associative_latin_square_rejected():
    # a loop of order 5 which is not a group
    table = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(GroupTableError, match="associativity"):
        FiniteGroup(table)


def test_direct_product_indices():
    A, B = group_cyclic(2), group_cyclic(3)
    P = group_direct_product(A, B)
    assert P.label == "C2xC3"
    for i, j in itertools.product(range(6), repeat=2):
        a1, b1, a2, b2 = i // 3, i % 3, j // 3, j % 3
        assert P.mul[i][j] == ((a1 + a2) % 2) * 3 + (b1 + b2) % 3
    assert is_cyclic(P)


def test_normal_subgroups_and_quotient():
    G = group_quaternion(8)
    N = subgroup_generated(G, [1])
    assert N.order == 4 and is_normal(N)
    Q = quotient(G, N)
    assert Q.size == 2
    # every subgroup of H8 is normal
    assert all(is_normal(H) for H in all_subgroups(G))
    assert len(normal_subgroups(G)) == 6
    D = group_dihedral(8)
    assert not is_normal(subgroup_generated(D, [4]))


def test_subgroup_local_numbering():
    G = group_dihedral(12)
    H = subgroup_generated(G, [2])
    assert H.order == 3
    for g in H.elements:
        for h in H.elements:
            li, lj = H.local_index[g], H.local_index[h]
            assert H.elements[H.group.mul[li][lj]] == G.mul[g][h]


def test_subgroup_must_be_closed():
    with pytest.raises(InputError):
        Subgroup(group_cyclic(4), [0, 1])


@given(st.integers(1, 30))
def test_cyclic_is_cyclic(n):
    G = group_cyclic(n)
    assert is_cyclic(G) and G.exponent == n and len(conjugacy(G)) == n


@given(st.integers(2, 15))
def test_dihedral_class_count(n):
    # n odd: (n+3)/2 classes; n even: n/2 + 3
    expected = (n + 3) // 2 if n % 2 else n // 2 + 3
    assert len(conjugacy(group_dihedral(2 * n))) == expected


def subgroups_by_subsets(G):
    """Every subset containing 1 and closed under multiplication (finite, so a subgroup)."""
    out = set()
    others = [g for g in range(G.size) if g != G.id]
    for mask in range(1 << len(others)):
        S = {G.id} | {g for i, g in enumerate(others) if mask >> i & 1}
        if all(G.mul[a][b] in S for a in S for b in S):
            out.add(tuple(sorted(S)))
    return out


@pytest.mark.parametrize("G", [
    group_direct_product(group_direct_product(group_cyclic(2), group_cyclic(2)), group_cyclic(2)),
    group_dihedral(8), group_quaternion(8), group_dihedral(6), group_cyclic(8),
])
def test_all_subgroups_matches_subset_search(G):
    assert {H.elements for H in all_subgroups(G)} == subgroups_by_subsets(G)


@pytest.mark.parametrize("G, count", [
    (group_dihedral(12), 16), (group_quaternion(12), 8), (group_cyclic(12), 6),
    (group_metacyclic(7, 3, 2), 10), (group_quaternion(16), 11),
])
def test_subgroup_counts(G, count):
    assert len(all_subgroups(G)) == count

"""Deterministic corpora of groups and local/global data used by the verification suites."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .gauss import TameAbelianLocalDatum, finite_field
from .globalext import GlobalExtensionData, PlaceRecord
from .groups import (
    FiniteGroup,
    Subgroup,
    cosets,
    group_cyclic,
    group_dihedral,
    group_direct_product,
    group_metacyclic,
    group_quaternion,
    is_cyclic,
    normal_subgroups,
    quotient,
    subgroup_generated,
)
from .localext import LocalExtensionData


@dataclass(frozen=True)
class CorpusConfig:
    max_order: int = 24
    primes: tuple[int, ...] = (2, 3, 5, 7)
    max_chain_multiplicity: int = 2
    max_q: int = 49


@lru_cache(maxsize=None)
def _cyclic(n: int) -> FiniteGroup:
    return group_cyclic(n)


@lru_cache(maxsize=None)
def _product(*orders: int) -> FiniteGroup:
    G = _cyclic(orders[0])
    for n in orders[1:]:
        G = group_direct_product(G, _cyclic(n))
    return G


@lru_cache(maxsize=None)
def adams_groups() -> tuple[FiniteGroup, ...]:
    """Cyclic <= 12, dihedral <= 16, H8, H12, the order-21 group and small abelian products."""
    out = [group_cyclic(n) for n in range(1, 13)]
    out += [group_dihedral(n) for n in range(4, 17, 2)]
    out += [group_quaternion(8), group_quaternion(12), group_metacyclic(7, 3, 2)]
    out += [_product(2, 2), _product(2, 4), _product(3, 3), _product(2, 6), _product(2, 2, 2)]
    return tuple(out)


@lru_cache(maxsize=None)
def small_groups(max_order: int = 24) -> tuple[FiniteGroup, ...]:
    """A fixed list of groups of order <= max_order, one per isomorphism type we can build."""
    out = [group_cyclic(n) for n in range(1, max_order + 1)]
    out += [group_dihedral(n) for n in range(6, max_order + 1, 2)]
    out += [group_quaternion(n) for n in range(8, max_order + 1, 4)]
    if max_order >= 21:
        out.append(group_metacyclic(7, 3, 2))
    for orders in [(2, 2), (2, 4), (2, 2, 2), (3, 3), (2, 6), (2, 8), (4, 4), (2, 2, 4), (2, 10), (2, 12), (3, 6), (2, 2, 6)]:
        n = 1
        for o in orders:
            n *= o
        if n <= max_order:
            out.append(_product(*orders))
    return tuple(out)


def _sylow_of(H: Subgroup, p: int) -> Optional[Subgroup]:
    """The normal Sylow p-subgroup of H if it is unique, else None."""
    G = H.parent
    pk = 1
    while H.order % (pk * p) == 0:
        pk *= p
    els = [g for g in H.elements if pk % G.element_order(g) == 0]
    if len(els) != pk:
        return None
    return Subgroup(G, els)


def _subgroup_in(H: Subgroup, big: Subgroup) -> Subgroup:
    return Subgroup(big.group, [big.local_index[g] for g in H.elements])


def frobenius_choices(G: FiniteGroup, I: Subgroup, all_cosets: bool = False) -> list[int]:
    """Least element of each coset gI generating G/I (or just the first one)."""
    out = []
    for coset in cosets(G, I):
        g = coset[0]
        if subgroup_generated(G, (g,) + I.elements).order == G.size:
            out.append(g)
            if not all_cosets:
                break
    return out


def _chains(W: Subgroup, normals: list[Subgroup], mult: int) -> Iterator[list[Subgroup]]:
    """Filtrations G_1 = W >= G_2 >= ...: strict chains of normal subgroups, each term repeated."""
    below = [N for N in normals if N.order < W.order and N <= W and not N.is_trivial()]

    def strict(top):
        yield [top]
        for N in below:
            if N.order < top.order and N <= top:
                for rest in strict(N):
                    yield [top] + rest

    if W.is_trivial():
        yield []
        return
    for chain in strict(W):
        for reps in itertools.product(range(1, mult + 1), repeat=len(chain)):
            yield [N for N, r in zip(chain, reps) for _ in range(r)]


def local_data(config: CorpusConfig = CorpusConfig(), all_frobenius: bool = False) -> Iterator[LocalExtensionData]:
    """All valid filtrations on the small-group corpus, one Frobenius lift per datum by default."""
    for G in small_groups(config.max_order):
        normals = normal_subgroups(G)
        for p in config.primes:
            for I in normals:
                if not is_cyclic(quotient(G, I)):
                    continue
                W = _sylow_of(I, p)
                if W is None or not is_cyclic(quotient(I.group, _subgroup_in(W, I))):
                    continue
                sigmas = frobenius_choices(G, I, all_frobenius)
                for chain in _chains(W, normals, config.max_chain_multiplicity):
                    for s in sigmas:
                        yield LocalExtensionData(G, p, (I, *chain), s)


def closed_form_data(config: CorpusConfig = CorpusConfig(max_order=24)) -> Iterator[LocalExtensionData]:
    """Local data meeting the closed-form hypotheses, every Frobenius coset, tame filtrations."""
    for G in small_groups(config.max_order):
        if not (G.is_abelian() or G.size % 2):
            continue
        for I in normal_subgroups(G):
            if I.order % 2 == 0 or not is_cyclic(I.group) or not is_cyclic(quotient(G, I)):
                continue
            p = next(q for q in (2, 3, 5, 7, 11, 13) if I.order % q)
            for s in frobenius_choices(G, I, all_cosets=True):
                yield LocalExtensionData(G, p, (I,), s)


def tame_abelian_data(config: CorpusConfig = CorpusConfig()) -> Iterator[TameAbelianLocalDatum]:
    """Tame abelian data with e | q - 1 for every prime power q <= max_q.

    For each (q, e) with e > 1: the totally ramified C_e, and for e <= 12 also
    C_e x C_2 and C_2e with a degree-2 unramified part.
    """
    for p, f in _prime_powers(config.max_q):
        k = finite_field(p, f)
        for e in range(2, k.q):
            if (k.q - 1) % e:
                continue
            # (group, inertia generator, Frobenius lift)
            shapes = [(_cyclic(e), 1, 0)]
            if e <= 12:
                shapes.append((_product(e, 2), 2, 1))  # (1, 0) has index 2, (0, 1) index 1
                shapes.append((_cyclic(2 * e), 2, 1))
            for G, gen, frob in shapes:
                I = subgroup_generated(G, [gen])
                yield TameAbelianLocalDatum(LocalExtensionData(G, p, (I,), frob, f), k, gen)


def _prime_powers(bound: int) -> list[tuple[int, int]]:
    out = []
    for p in range(2, bound + 1):
        if all(p % d for d in range(2, int(p ** 0.5) + 1)):
            f = 1
            while p ** f <= bound:
                out.append((p, f))
                f += 1
    return sorted(out, key=lambda pf: pf[0] ** pf[1])


# --- global fixtures -----------------------------------------------------


def _place(G: FiniteGroup, label: str, decomp, p: int, filtration, frobenius: int,
           residue_f: Optional[int] = None) -> PlaceRecord:
    H = subgroup_generated(G, decomp)
    subs = tuple(Subgroup(H.group, [H.local_index[g] for g in subgroup_generated(G, els).elements])
                 for els in filtration)
    local = LocalExtensionData(H.group, p, subs, H.local_index[frobenius])
    tame = None
    if residue_f is not None:
        I = local.inertia
        gen = next(g for g in I.elements if local.group.element_order(g) == I.order)
        tame = TameAbelianLocalDatum(local, finite_field(p, residue_f), gen)
    return PlaceRecord(label, H, local, tame)


def global_fixtures() -> list[tuple[str, GlobalExtensionData]]:
    """Ten hand-picked global data mixing tame, wild and unramified-Frobenius places.

    Filtration and decomposition groups are given by generators in the
    numbering of G.
    """
    C6 = group_cyclic(6)
    D6 = group_dihedral(6)
    H8 = group_quaternion(8)
    H12 = group_quaternion(12)
    M21 = group_metacyclic(7, 3, 2)
    D8 = group_dihedral(8)
    V4 = _product(2, 2)
    D10 = group_dihedral(10)
    C4 = group_cyclic(4)
    C3xC3 = _product(3, 3)
    return [
        ("C6 tame + unramified", GlobalExtensionData(C6, (
            _place(C6, "v1", [1], 7, [[2]], 3),
            _place(C6, "v2", [3], 5, [[]], 3),
        ))),
        ("S3 two places", GlobalExtensionData(D6, (
            _place(D6, "v1", [1], 7, [[1]], 0),
            _place(D6, "v2", [3], 5, [[]], 3),
            _place(D6, "v3", [1, 3], 13, [[1]], 3),
        ))),
        ("H8 wild + tame", GlobalExtensionData(H8, (
            _place(H8, "v2", [1, 4], 2, [[1, 4], [1, 4], [2]], 0),
            _place(H8, "v3", [1], 3, [[2]], 1),
        ))),
        ("H12 tame", GlobalExtensionData(H12, (
            _place(H12, "v7", [1, 6], 7, [[2]], 6),
            _place(H12, "v5", [6], 5, [[]], 6),
        ))),
        ("M21 tame", GlobalExtensionData(M21, (
            _place(M21, "v29", [1, 7], 29, [[1]], 7),
            _place(M21, "v2", [7], 2, [[]], 7),
        ))),
        ("D8 mixed", GlobalExtensionData(D8, (
            _place(D8, "v1", [1], 5, [[2]], 1),
            _place(D8, "v2", [1, 4], 2, [[1, 4], [1, 4], [2]], 0),
        ))),
        ("V4 three quadratic places", GlobalExtensionData(V4, (
            _place(V4, "a", [1], 3, [[1]], 0),
            _place(V4, "b", [2], 5, [[2]], 0),
            _place(V4, "c", [3], 7, [[3]], 0),
        ))),
        ("D10 tame", GlobalExtensionData(D10, (
            _place(D10, "v11", [1], 11, [[1]], 0),
            _place(D10, "v3", [1, 5], 3, [[1]], 5),
        ))),
        ("C4 wild", GlobalExtensionData(C4, (
            _place(C4, "v2", [1], 2, [[1], [1], [2]], 0),
        ))),
        ("C3xC3 tame", GlobalExtensionData(C3xC3, (
            _place(C3xC3, "a", [1, 3], 7, [[1]], 3),
            _place(C3xC3, "b", [3], 13, [[3]], 3),
            _place(C3xC3, "c", [4], 2, [[]], 4),
        ))),
    ]


def h12_symplectic_datum() -> GlobalExtensionData:
    """H12 with a single tame place: decomposition group G, inertia C3 = <x^2>, Frobenius y."""
    G = group_quaternion(12)
    return GlobalExtensionData(G, (_place(G, "v", [1, 6], 7, [[2]], 6),))


def odd_order_data() -> list[GlobalExtensionData]:
    out = []
    M21 = group_metacyclic(7, 3, 2)
    out.append(GlobalExtensionData(M21, (_place(M21, "v", [1, 7], 29, [[1]], 7),)))
    out.append(GlobalExtensionData(M21, (_place(M21, "v", [7], 2, [[7]], 7),)))
    for n in (3, 5, 9, 15):
        G = group_cyclic(n)
        out.append(GlobalExtensionData(G, (_place(G, "v", [1], 2, [[1]], 0),)))
    G = _product(3, 3)
    out.append(GlobalExtensionData(G, (_place(G, "v", [1, 3], 7, [[1]], 3),)))
    return out


def j2_global_fixtures() -> list[tuple[str, GlobalExtensionData]]:
    """Global data whose places all carry a tame abelian realization."""
    C2 = _cyclic(2)
    D6 = group_dihedral(6)
    C6 = _cyclic(6)
    V4 = _product(2, 2)
    return [
        ("C2 over p=3", GlobalExtensionData(C2, (_place(C2, "v3", [1], 3, [[1]], 0, residue_f=1),))),
        ("S3 with C3 over p=7", GlobalExtensionData(D6, (_place(D6, "v7", [1], 7, [[1]], 0, residue_f=1),))),
        ("C6 two places", GlobalExtensionData(C6, (
            _place(C6, "v7", [1], 7, [[2]], 3, residue_f=1),
            _place(C6, "v5", [3], 5, [[3]], 0, residue_f=1),
        ))),
        ("V4 three places", GlobalExtensionData(V4, (
            _place(V4, "a", [1], 3, [[1]], 0, residue_f=1),
            _place(V4, "b", [2], 5, [[2]], 0, residue_f=1),
            _place(V4, "c", [3], 3, [[3]], 0, residue_f=2),
        ))),
    ]

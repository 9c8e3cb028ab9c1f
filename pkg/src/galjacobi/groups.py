"""Finite groups given by explicit multiplication tables.

Elements are the integers ``0 .. N-1``.  Family constructors number elements by
the normal form ``x^a y^b`` of their standard presentation, index ``a + n*b``,
so fixtures are reproducible.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import InputError

FULL_CHECK_LIMIT = 512


class GroupTableError(InputError):
    """The supplied table violates a group axiom; ``witness`` names the failure."""

    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = witness


class FiniteGroup:
    """A finite group as a Cayley table.

    Hashing and equality are by identity, which lets character tables and
    conjugacy data be cached per group object.
    """

    def __init__(self, table: Sequence[Sequence[int]], label: str = "", check: bool = True):
        self.mul = tuple(tuple(int(v) for v in row) for row in table)
        self.size = len(self.mul)
        self.label = label
        if check:
            self._validate()
        self.id = self._find_identity()
        self.inv = tuple(next(b for b in range(self.size) if self.mul[a][b] == self.id)
                         for a in range(self.size))

    def _find_identity(self) -> int:
        for e in range(self.size):
            if all(self.mul[e][a] == a and self.mul[a][e] == a for a in range(self.size)):
                return e
        raise GroupTableError("table has no identity element")

    def _validate(self) -> None:
        n = self.size
        if n == 0:
            raise GroupTableError("empty table")
        for a, row in enumerate(self.mul):
            if len(row) != n:
                raise GroupTableError(f"row {a} has length {len(row)}, expected {n}", (a,))
            for v in row:
                if not 0 <= v < n:
                    raise GroupTableError(f"entry {v} in row {a} is out of range", (a, v))
        e = self._find_identity()
        for a in range(n):
            if e not in self.mul[a]:
                raise GroupTableError(f"element {a} has no inverse", (a,))
        M = np.array(self.mul, dtype=np.int64)
        if n <= FULL_CHECK_LIMIT:
            rows = range(n)
        else:
            rows = random.Random(0).sample(range(n), 64)
        for a in rows:
            # (a*b)*c versus a*(b*c) for all b, c at once
            bad = np.argwhere(M[M[a]] != M[a][M])
            if len(bad):
                b, c = (int(v) for v in bad[0])
                raise GroupTableError(f"associativity fails for ({a}, {b}, {c})", (a, b, c))

    def __repr__(self):
        return f"FiniteGroup(order={self.size}, label={self.label!r})"

    # --- elementary queries -------------------------------------------
    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv[g], -k
        result, base = self.id, g
        while k:
            if k & 1:
                result = self.mul[result][base]
            base = self.mul[base][base]
            k >>= 1
        return result

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.id:
            x = self.mul[x][g]
            k += 1
        return k

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*(self.element_order(g) for g in range(self.size)))

    def conj(self, g: int, x: int) -> int:
        """x g x^-1."""
        return self.mul[self.mul[x][g]][self.inv[x]]

    def is_abelian(self) -> bool:
        m = self.mul
        return all(m[a][b] == m[b][a] for a in range(self.size) for b in range(a))

    @cached_property
    def conjugacy(self) -> "ConjugacyData":
        return conjugacy(self)


@dataclass(frozen=True)
class ConjugacyData:
    """Class 0 is the identity; the rest are ordered by least element."""

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    exponent: int
    # power_table[c][k % exponent] = class of g^k for g in class c
    power_table: tuple[tuple[int, ...], ...]

    @property
    def reps(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.classes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def __len__(self):
        return len(self.classes)

    def power_class(self, c: int, k: int) -> int:
        return self.power_table[c][k % self.exponent]


def conjugacy(G: FiniteGroup) -> ConjugacyData:
    found = []
    done = set()
    for g in [G.id] + [g for g in range(G.size) if g != G.id]:
        if g in done:
            continue
        orbit = tuple(sorted({G.conj(g, x) for x in range(G.size)}))
        done.update(orbit)
        found.append(orbit)
    classes = found
    class_of = [0] * G.size
    for i, orbit in enumerate(classes):
        for h in orbit:
            class_of[h] = i
    e = G.exponent
    power_table = tuple(
        tuple(class_of[G.power(cls[0], k)] for k in range(e)) for cls in classes
    )
    return ConjugacyData(tuple(classes), tuple(class_of), e, power_table)


# --- subgroups and quotients ---------------------------------------------
class Subgroup:
    """A subgroup of ``parent`` together with its own re-indexed table.

    ``group`` numbers the elements ``0 .. |H|-1`` following the sorted order of
    ``elements``; ``embed[i]`` is the parent index of local element ``i``.
    """

    def __init__(self, parent: FiniteGroup, elements: Iterable[int]):
        els = tuple(sorted(set(elements)))
        pos = {g: i for i, g in enumerate(els)}
        if parent.id not in pos:
            raise InputError("subgroup must contain the identity")
        table = []
        for a in els:
            row = []
            for b in els:
                c = parent.mul[a][b]
                if c not in pos:
                    raise InputError(f"elements {els} are not closed: {a}*{b}={c}")
                row.append(pos[c])
            table.append(row)
        self.parent = parent
        self.elements = els
        self.embed = els
        self.local_index = pos
        self.group = FiniteGroup(table, label=f"sub{len(els)}({parent.label})", check=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: int) -> bool:
        return g in self.local_index

    def __le__(self, other: "Subgroup") -> bool:
        return set(self.elements) <= set(other.elements)

    def __eq__(self, other):
        return isinstance(other, Subgroup) and other.parent is self.parent and other.elements == self.elements

    def __hash__(self):
        return hash((id(self.parent), self.elements))

    def __repr__(self):
        return f"Subgroup(order={self.order}, of={self.parent!r})"

    def is_normal(self) -> bool:
        return is_normal(self)

    def is_trivial(self) -> bool:
        return self.order == 1


def subgroup_generated(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    gens = list(gens)
    for g in gens:
        if not 0 <= g < G.size:
            raise InputError(f"generator {g} is not an element of a group of order {G.size}")
    seen = {G.id}
    frontier = [G.id]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = G.mul[a][g]
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return Subgroup(G, seen)


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, [G.id])


def whole_group(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, range(G.size))


def is_normal(H: Subgroup) -> bool:
    G = H.parent
    return all(G.conj(h, x) in H for h in H.elements for x in range(G.size))


def cosets(G: FiniteGroup, N: Subgroup) -> list[tuple[int, ...]]:
    """Left cosets gN, ordered by least element."""
    seen = set()
    out = []
    for g in range(G.size):
        if g in seen:
            continue
        c = tuple(sorted(G.mul[g][n] for n in N.elements))
        seen.update(c)
        out.append(c)
    return out


def coset_projection(G: FiniteGroup, N: Subgroup) -> tuple[int, ...]:
    """Map each element of G to the index of its coset in :func:`quotient`."""
    proj = [0] * G.size
    for i, c in enumerate(cosets(G, N)):
        for g in c:
            proj[g] = i
    return tuple(proj)


def quotient(G: FiniteGroup, N: Subgroup) -> FiniteGroup:
    if N.parent is not G:
        raise InputError("subgroup belongs to a different group")
    if not is_normal(N):
        raise InputError(f"cannot form a quotient by a non-normal subgroup of order {N.order}")
    cs = cosets(G, N)
    proj = coset_projection(G, N)
    table = [[proj[G.mul[a[0]][b[0]]] for b in cs] for a in cs]
    return FiniteGroup(table, label=f"{G.label}/{N.order}", check=False)


def normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """All normal subgroups, as unions of classes closed under multiplication."""
    seen = {}
    cd = G.conjugacy
    # every normal subgroup is generated by normal closures of single classes
    closures = {}
    for c in cd.classes:
        H = subgroup_generated(G, c)
        closures[H.elements] = H
    frontier = list(closures.values())
    for H in frontier:
        seen[H.elements] = H
    while frontier:
        nxt = []
        for A in frontier:
            for B in closures.values():
                C = subgroup_generated(G, A.elements + B.elements)
                if C.elements not in seen:
                    seen[C.elements] = C
                    nxt.append(C)
        frontier = nxt
    return sorted(seen.values(), key=lambda H: (H.order, H.elements))


def all_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Every subgroup of G, as joins of cyclic subgroups, ordered by (order, elements)."""
    seen: dict[tuple, Subgroup] = {}
    gens = []
    for g in range(G.size):
        H = subgroup_generated(G, [g])
        if H.elements not in seen:
            seen[H.elements] = H
            gens.append(g)
    frontier = list(seen.values())
    while frontier:
        nxt = []
        for H in frontier:
            for g in gens:
                if g in H:
                    continue
                K = subgroup_generated(G, [*H.elements, g])
                if K.elements not in seen:
                    seen[K.elements] = K
                    nxt.append(K)
        frontier = nxt
    return sorted(seen.values(), key=lambda H: (H.order, H.elements))


def is_p_group(H: Subgroup, p: int) -> bool:
    n = H.order
    while n % p == 0:
        n //= p
    return n == 1


def is_cyclic(G: FiniteGroup) -> bool:
    return any(G.element_order(g) == G.size for g in range(G.size))


def find_element(G: FiniteGroup, order: int) -> Optional[int]:
    return next((g for g in range(G.size) if G.element_order(g) == order), None)


# --- family constructors -------------------------------------------------
def _from_normal_forms(n: int, m: int, rule, label: str) -> FiniteGroup:
    """Build a table on words x^a y^b (0 <= a < n, 0 <= b < m), index a + n*b."""
    size = n * m
    table = [[0] * size for _ in range(size)]
    for b1 in range(m):
        for a1 in range(n):
            for b2 in range(m):
                for a2 in range(n):
                    a, b = rule(a1, b1, a2, b2)
                    table[a1 + n * b1][a2 + n * b2] = (a % n) + n * (b % m)
    return FiniteGroup(table, label=label)


def group_cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise InputError(f"cyclic group order must be positive, got {n}")
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)], label=f"C{n}")


def group_dihedral(order: int) -> FiniteGroup:
    """Dihedral group of the given order 2n: <x, y | x^n = y^2 = 1, y x y^-1 = x^-1>."""
    if order < 2 or order % 2:
        raise InputError(f"dihedral group order must be even and >= 2, got {order}")
    n = order // 2

    def rule(a1, b1, a2, b2):
        return a1 + (-a2 if b1 else a2), b1 + b2

    return _from_normal_forms(n, 2, rule, f"D{order}")


def group_quaternion(order: int) -> FiniteGroup:
    """Generalised quaternion H_{4m}: <x, y | x^{2m} = 1, y^2 = x^m, y x y^-1 = x^-1>."""
    if order < 4 or order % 4:
        raise InputError(f"quaternion group order must be a positive multiple of 4, got {order}")
    m = order // 4
    n = 2 * m

    def rule(a1, b1, a2, b2):
        a = a1 + (-a2 if b1 else a2)
        b = b1 + b2
        if b >= 2:
            a += m
            b -= 2
        return a, b

    return _from_normal_forms(n, 2, rule, f"H{order}")


def group_metacyclic(p: int, q: int, r: int) -> FiniteGroup:
    """C_p x| C_q: <x, y | x^p = y^q = 1, y x y^-1 = x^r>, requiring r^q = 1 mod p."""
    if p < 1 or q < 1:
        raise InputError("metacyclic parameters must be positive")
    if pow(r, q, p) != 1 % p:
        raise InputError(f"r^q must be 1 mod p: {r}^{q} mod {p} = {pow(r, q, p)}")

    def rule(a1, b1, a2, b2):
        return a1 + pow(r, b1, p) * a2, b1 + b2

    return _from_normal_forms(p, q, rule, f"M({p},{q},{r})")


def group_direct_product(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    """Element (a, b) has index a * |B| + b."""
    nb = B.size
    table = [
        [A.mul[i // nb][j // nb] * nb + B.mul[i % nb][j % nb] for j in range(A.size * nb)]
        for i in range(A.size * nb)
    ]
    return FiniteGroup(table, label=f"{A.label}x{B.label}", check=False)


FAMILIES = {
    "cyclic": lambda n: group_cyclic(n),
    "dihedral": lambda order: group_dihedral(order),
    "quaternion": lambda order: group_quaternion(order),
    "metacyclic": lambda p, q, r: group_metacyclic(p, q, r),
}

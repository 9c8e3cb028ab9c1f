"""Central elements of Q^c[G] written in the idempotent basis.

A central element is ``sum_chi e_chi * x_chi``; we store the family
``(x_chi)`` in the fixed character order of :func:`char_table`.  Evaluation at a
virtual character ``sum c_i chi_i`` is multiplicative: ``prod x_{chi_i}^{c_i}``.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping, Sequence, Union

from .chartab import CharacterTable, ClassFunction, adams, char_table, restrict
from .cyclo import ONE, ZERO, Cyclotomic, DEFAULT_PRECISION_CAP
from .errors import InputError
from .groups import FiniteGroup, Subgroup


class CentralElement:
    """Immutable coefficient family ``(x_chi)`` of a central element."""

    __slots__ = ("table", "coeffs")

    def __init__(self, G: Union[FiniteGroup, CharacterTable], coeffs: Sequence):
        table = G if isinstance(G, CharacterTable) else char_table(G)
        coeffs = tuple(c if isinstance(c, Cyclotomic) else Cyclotomic.rational(c) for c in coeffs)
        if len(coeffs) != len(table):
            raise InputError(f"expected {len(table)} coefficients, got {len(coeffs)}")
        self.table = table
        self.coeffs = coeffs

    @classmethod
    def ones(cls, G: FiniteGroup) -> "CentralElement":
        return cls(G, [ONE] * len(char_table(G)))

    @classmethod
    def from_function(cls, G: FiniteGroup, f: Callable[[ClassFunction], object]) -> "CentralElement":
        return cls(G, [f(chi) for chi in char_table(G)])

    @property
    def group(self) -> FiniteGroup:
        return self.table.group

    def __getitem__(self, chi: Union[int, ClassFunction]) -> Cyclotomic:
        if isinstance(chi, ClassFunction):
            i = self.table.index(chi)
            if i < 0:
                raise InputError("indexing a central element by a non-irreducible class function")
            return self.coeffs[i]
        return self.coeffs[chi]

    def is_unit(self) -> bool:
        return all(not c.is_zero() for c in self.coeffs)

    def _check(self, other: "CentralElement"):
        if other.table is not self.table:
            raise InputError("central elements of different groups")

    def __mul__(self, other):
        if isinstance(other, CentralElement):
            self._check(other)
            return CentralElement(self.table, [a * b for a, b in zip(self.coeffs, other.coeffs)])
        return CentralElement(self.table, [a * other for a in self.coeffs])

    __rmul__ = __mul__

    def __add__(self, other: "CentralElement"):
        self._check(other)
        return CentralElement(self.table, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "CentralElement"):
        self._check(other)
        return CentralElement(self.table, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def inverse(self) -> "CentralElement":
        if not self.is_unit():
            raise ZeroDivisionError("central element is not a unit")
        return CentralElement(self.table, [c.inverse() for c in self.coeffs])

    def __truediv__(self, other: "CentralElement"):
        return self * other.inverse()

    def __pow__(self, k: int):
        return CentralElement(self.table, [c ** k for c in self.coeffs])

    def __eq__(self, other):
        return isinstance(other, CentralElement) and other.table is self.table and other.coeffs == self.coeffs

    def __hash__(self):
        return hash((id(self.table), self.coeffs))

    def is_identity(self) -> bool:
        return all(c == ONE for c in self.coeffs)

    def order(self, limit: int = 64) -> int:
        """Multiplicative order, or 0 if it exceeds ``limit``."""
        y = self
        for k in range(1, limit + 1):
            if y.is_identity():
                return k
            y = y * self
        return 0

    def evaluate(self, f: ClassFunction) -> Cyclotomic:
        """x_f for a virtual character f, extended multiplicatively."""
        if f.group is not self.group:
            raise InputError("virtual character lives on a different group")
        value = ONE
        for c, x in zip(self.table.integral_decomposition(f), self.coeffs):
            if c:
                value = value * x ** c
        return value

    def render(self) -> str:
        return "\n".join(f"{label} : {c.render()}" for label, c in zip(self.table.labels, self.coeffs))

    def __repr__(self):
        return f"CentralElement({self.group!r}, [{', '.join(c.render() for c in self.coeffs)}])"


def _as_element_values(G: FiniteGroup, a) -> list[Cyclotomic]:
    if isinstance(a, Mapping):
        vals = [a.get(g, 0) for g in range(G.size)]
    else:
        vals = list(a)
        if len(vals) != G.size:
            raise InputError(f"group-algebra element needs {G.size} coordinates")
    return [v if isinstance(v, Cyclotomic) else Cyclotomic.rational(v) for v in vals]


def from_group_algebra(G: FiniteGroup, a, unit: bool = False) -> CentralElement:
    """Scalars by which a central group-algebra element acts on each irreducible.

    ``a`` maps element indices to coordinates (missing entries are 0).
    """
    vals = _as_element_values(G, a)
    cd = G.conjugacy
    for cls in cd.classes:
        for g in cls[1:]:
            if vals[g] != vals[cls[0]]:
                raise InputError(f"group-algebra element is not central: differs at {cls[0]} and {g}")
    table = char_table(G)
    coeffs = []
    for chi in table:
        total = ZERO
        for cls, v in zip(cd.classes, chi.values):
            if not vals[cls[0]].is_zero():
                total = total + len(cls) * vals[cls[0]] * v
        coeffs.append(total / chi.degree)
    x = CentralElement(table, coeffs)
    if unit and not x.is_unit():
        bad = next(lab for lab, c in zip(table.labels, coeffs) if c.is_zero())
        raise InputError(f"element is not a unit: coefficient at {bad} vanishes")
    return x


def to_group_algebra(x: CentralElement) -> list[Cyclotomic]:
    """Coordinates of sum_chi e_chi x_chi on the group basis."""
    G = x.group
    cd = G.conjugacy
    out = []
    for g in range(G.size):
        ginv_cls = cd.class_of[G.inv[g]]
        total = ZERO
        for chi, c in zip(x.table, x.coeffs):
            total = total + c * chi.degree * chi.values[ginv_cls]
        out.append(total * Fraction(1, G.size))
    return out


def idempotent(G: FiniteGroup, N: Subgroup) -> list[Fraction]:
    """e_N = |N|^-1 sum_{n in N} n as group-algebra coordinates."""
    return [Fraction(1, N.order) if g in N else Fraction(0) for g in range(G.size)]


@lru_cache(maxsize=None)
def adams_decomposition(table: CharacterTable, k: int) -> tuple[tuple[int, ...], ...]:
    """Integral decomposition of psi_k(chi) for every irreducible chi."""
    return tuple(tuple(table.integral_decomposition(adams(chi, k))) for chi in table)


def twist_endo(x: CentralElement, m: int, n: int, k: int) -> CentralElement:
    """The endomorphism m + n*psi_k: x_chi -> x_chi^m * x_{psi_k(chi)}^n."""
    decs = adams_decomposition(x.table, k)
    out = []
    for c, dec in zip(x.coeffs, decs):
        value = c ** m if m else ONE
        if n:
            twisted = ONE
            for e, xc in zip(dec, x.coeffs):
                if e:
                    twisted = twisted * xc ** e
            value = value * twisted ** n
        out.append(value)
    return CentralElement(x.table, out)


@lru_cache(maxsize=None)
def restriction_matrix(J: Subgroup) -> tuple[tuple[int, ...], ...]:
    """Row chi of G: multiplicities <res chi, phi>_J over Irr(J)."""
    tJ = char_table(J.group)
    return tuple(tuple(tJ.integral_decomposition(restrict(chi, J))) for chi in char_table(J.parent))


def central_induce(x: CentralElement, J: Subgroup) -> CentralElement:
    if x.group is not J.group:
        raise InputError("central element is not defined on the given subgroup")
    out = []
    for row in restriction_matrix(J):
        value = ONE
        for e, xc in zip(row, x.coeffs):
            if e:
                value = value * xc ** e
        out.append(value)
    return CentralElement(J.parent, out)


@lru_cache(maxsize=None)
def _galois_perm(table: CharacterTable, k: int) -> tuple[int, ...]:
    return table.galois_perm(k)


def is_rational_equivariant(x: CentralElement) -> bool:
    """True iff x_{chi^w} = w(x_chi) for every w in Gal(Q^c/Q)."""
    table = x.table
    e = table.exponent
    M = math.lcm(e, *(c.order for c in x.coeffs))
    for k in range(1, M + 1):
        if math.gcd(k, M) != 1:
            continue
        perm = _galois_perm(table, k % e if e > 1 else 1)
        for i, c in enumerate(x.coeffs):
            if x.coeffs[perm[i]] != c.galois_act(k):
                return False
    return True


def symplectic_positivity_diagnostics(x: CentralElement, precision_cap: int = DEFAULT_PRECISION_CAP) -> list[str]:
    """Violations of conj-equivariance and of positivity on symplectic characters."""
    from .chartab import frobenius_schur

    table = x.table
    issues = []
    for i, j in enumerate(table.conjugation_perm):
        if x.coeffs[j] != x.coeffs[i].conjugate():
            issues.append(f"{table.labels[j]} is not the conjugate of {table.labels[i]}")
    for i, chi in enumerate(table):
        if frobenius_schur(chi) != -1:
            continue
        c = x.coeffs[i]
        if not c.is_real():
            issues.append(f"symplectic coordinate at {table.labels[i]} is not real: {c.render()}")
        elif c.sign(precision_cap) <= 0:
            issues.append(f"symplectic coordinate at {table.labels[i]} is not positive: {c.render()}")
    return issues


def is_symplectic_positive(x: CentralElement, precision_cap: int = DEFAULT_PRECISION_CAP) -> bool:
    return not symplectic_positivity_diagnostics(x, precision_cap)

"""Finite-field Gauss sums and tame abelian Galois-Gauss and Jacobi sums.

Normalisation: the additive character is x -> zeta_p^Tr(x), the multiplicative
character with exponent a sends generator^j to zeta_{q-1}^(a*j), and tau is set
to 1 on unramified characters.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .center import CentralElement, twist_endo
from .chartab import ClassFunction, char_table
from .cyclo import ONE, Cyclotomic, prime_factors
from .errors import InputError
from .localext import LocalExtensionData, equivariant_y, is_unramified


@dataclass(frozen=True)
class FiniteFieldData:
    """F_q = F_p[x]/(modulus); elements are encoded as sum c_i p^i."""

    p: int
    f: int
    modulus: tuple[int, ...]  # monic, lowest degree first
    generator: int

    @property
    def q(self) -> int:
        return self.p ** self.f

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.f):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def encode(self, digits) -> int:
        return sum(c * self.p ** i for i, c in enumerate(digits))

    def mul(self, a: int, b: int) -> int:
        return self.encode(_polymulmod(self.digits(a), self.digits(b), self.modulus, self.p))

    def power(self, a: int, k: int) -> int:
        result = 1
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def trace(self, a: int) -> int:
        total, x = 0, a
        for _ in range(self.f):
            total = self.add(total, x)
            x = self.power(x, self.p)
        digits = self.digits(total)
        assert not any(digits[1:]), "trace must lie in the prime field"
        return digits[0]

    def add(self, a: int, b: int) -> int:
        return self.encode((x + y) % self.p for x, y in zip(self.digits(a), self.digits(b)))

    @cached_property
    def powers(self) -> tuple[int, ...]:
        """generator^j for 0 <= j < q-1."""
        out, x = [], 1
        for _ in range(self.q - 1):
            out.append(x)
            x = self.mul(x, self.generator)
        return tuple(out)

    def describe(self) -> dict:
        return {"p": self.p, "f": self.f, "modulus": list(self.modulus), "generator": self.generator}


def _polymulmod(a, b, mod, p):
    f = len(mod) - 1
    prod = [0] * (2 * f)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    for k in range(len(prod) - 1, f - 1, -1):
        c = prod[k] % p
        if c:
            for j in range(f + 1):
                prod[k - f + j] -= c * mod[j]
    return [c % p for c in prod[:f]]


def _is_irreducible(mod: tuple[int, ...], p: int) -> bool:
    f = len(mod) - 1
    for deg in range(1, f // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            divisor = list(low) + [1]
            if _polyrem(list(mod), divisor, p) == [0] * deg:
                return False
    return True


def _polyrem(a, b, p):
    a = [c % p for c in a]
    db = len(b) - 1
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c:
            for j in range(db + 1):
                a[k - db + j] = (a[k - db + j] - c * b[j]) % p
    return a[:db]


@lru_cache(maxsize=None)
def finite_field(p: int, f: int = 1) -> FiniteFieldData:
    """Least monic irreducible modulus (by encoded lower coefficients), least primitive element."""
    if p < 2 or prime_factors(p) != (p,):
        raise InputError(f"residue characteristic must be prime, got {p}")
    if f < 1:
        raise InputError(f"field degree must be positive, got {f}")
    modulus = None
    for code in range(p ** f):
        low = [(code // p ** i) % p for i in range(f)]
        cand = tuple(low) + (1,)
        if (f == 1 or low[0] != 0) and _is_irreducible(cand, p):
            modulus = cand
            break
    q = p ** f
    probe = FiniteFieldData(p, f, modulus, 1)
    qs = prime_factors(q - 1) if q > 2 else ()
    gen = next(a for a in range(1, q) if all(probe.power(a, (q - 1) // r) != 1 for r in qs))
    return FiniteFieldData(p, f, modulus, gen)


def gauss_sum(k: FiniteFieldData, chi_exp: int) -> Cyclotomic:
    """sum over x in k^* of chi(x) zeta_p^Tr(x), chi(generator^j) = zeta_{q-1}^(chi_exp*j)."""
    q = k.q
    if not 0 <= chi_exp < q - 1:
        raise InputError(f"character exponent must lie in [0, {q - 2}], got {chi_exp}")
    return _gauss_sum(k, chi_exp)


@lru_cache(maxsize=None)
def _gauss_sum(k: FiniteFieldData, chi_exp: int) -> Cyclotomic:
    q, p = k.q, k.p
    N = p * (q - 1)
    vec = [0] * N
    for j, x in enumerate(k.powers):
        vec[(chi_exp * j * p + k.trace(x) * (q - 1)) % N] += 1
    return Cyclotomic._raw(N, vec)


# --- tame abelian local data ---------------------------------------------


@dataclass(frozen=True, eq=False)
class TameAbelianLocalDatum:
    base: LocalExtensionData
    residue: FiniteFieldData
    inertia_generator: int

    def __post_init__(self):
        G, I = self.base.group, self.base.inertia
        if not G.is_abelian():
            raise InputError("tame abelian datum needs an abelian Galois group")
        if not self.base.is_tame:
            raise InputError("tame abelian datum needs G_1 trivial")
        if self.residue.p != self.base.p:
            raise InputError("residue field characteristic differs from the datum's p")
        e = I.order
        if (self.residue.q - 1) % e:
            raise InputError(f"ramification degree {e} does not divide q - 1 = {self.residue.q - 1}")
        if self.inertia_generator not in I or G.element_order(self.inertia_generator) != e:
            raise InputError("inertia_generator does not generate G_0")

    @property
    def e(self) -> int:
        return self.base.inertia.order


def tame_abelian_datum(base: LocalExtensionData, residue_degree: int | None = None,
                       inertia_generator: int | None = None) -> TameAbelianLocalDatum:
    f = residue_degree if residue_degree is not None else base.f_abs
    k = finite_field(base.p, f)
    I = base.inertia
    if inertia_generator is None:
        inertia_generator = next(g for g in I.elements if base.group.element_order(g) == I.order)
    return TameAbelianLocalDatum(base, k, inertia_generator)


def residue_exponent(d: TameAbelianLocalDatum, chi: ClassFunction) -> int:
    """Exponent of the residue character attached to a linear chi through G_0 ~ mu_e."""
    e = d.e
    value = chi.at(d.inertia_generator)
    a = next((a for a in range(e) if Cyclotomic.zeta(e, a) == value), None)
    if a is None:
        raise InputError("character value on the inertia generator is not an e-th root of unity")
    return a * (d.residue.q - 1) // e


def tame_tau(d: TameAbelianLocalDatum, chi: ClassFunction) -> Cyclotomic:
    if chi.degree != ONE:
        raise InputError("tame Galois-Gauss sums are defined here for linear characters only")
    if is_unramified(chi, d.base):
        return ONE
    return gauss_sum(d.residue, residue_exponent(d, chi))


def equivariant_tau(d: TameAbelianLocalDatum) -> CentralElement:
    return CentralElement(d.base.group, [tame_tau(d, chi) for chi in char_table(d.base.group)])


def modified_tau(d: TameAbelianLocalDatum) -> CentralElement:
    return equivariant_tau(d) * equivariant_y(d.base).inverse()


def equivariant_J2(d: TameAbelianLocalDatum) -> CentralElement:
    """(psi_2,* - 2) applied to tau: coefficient tau(chi^2) tau(chi)^-2."""
    return twist_endo(equivariant_tau(d), -2, 1, 2)

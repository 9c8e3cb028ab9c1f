"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored in the power basis ``1, z, ..., z^(phi(n)-1)`` of
``Q(zeta_n)`` reduced modulo the n-th cyclotomic polynomial, with integer
numerators over a common positive denominator.  Every element is moved to the
smallest cyclotomic field containing it on construction (orders are never
``2 mod 4``), so equality and hashing are purely syntactic.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

import numpy as np
from mpmath.ctx_iv import MPIntervalContext

from .errors import DomainError, InvalidAutomorphismError, PrecisionExhaustedError

Number = Union[int, Fraction]

DEFAULT_PRECISION_CAP = 4096


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    r = n
    for p in prime_factors(n):
        r = r // p * (p - 1)
    return r


def _poly_divexact(a: list[int], b: list[int]) -> list[int]:
    # exact division of integer polynomials, b monic; coefficients low -> high
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    assert not any(a), "non-exact polynomial division"
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row e holds the power-basis coordinates of z^e, for 0 <= e < n."""
    phi = euler_phi(n)
    cp = cyclotomic_polynomial(n)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(phi):
                cur[i] -= top * cp[i]
    return tuple(rows)


@lru_cache(maxsize=None)
def _reduction_array(n: int) -> tuple[np.ndarray, int]:
    """Rows phi..n-1 of the reduction table as int64, with their largest entry."""
    phi = euler_phi(n)
    arr = np.array(_reduction_table(n)[phi:], dtype=np.int64).reshape(n - phi, phi)
    return arr, int(np.abs(arr).max()) if arr.size else 0


def _reduce(n: int, vec: Sequence[int]) -> list[int]:
    """Reduce an exponent vector (indices taken mod n) into the power basis."""
    phi = euler_phi(n)
    folded = list(vec[:n]) + [0] * max(0, n - len(vec))
    for e in range(n, len(vec)):
        if vec[e]:
            folded[e % n] += vec[e]
    out = folded[:phi]
    high = folded[phi:]
    if not any(high):
        return out
    arr, top = _reduction_array(n)
    bound = sum(abs(c) for c in high) * top
    if bound < 2 ** 62:
        red = np.asarray(high, dtype=np.int64) @ arr
        return [a + int(b) for a, b in zip(out, red)]
    table = _reduction_table(n)
    for e, c in enumerate(high, phi):
        if c:
            for i, r in enumerate(table[e]):
                if r:
                    out[i] += c * r
    return out


def _kron_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Product of integer polynomials by packing both into one big integer each."""
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    if not bound:
        return [0] * (len(a) + len(b) - 1)
    bits = bound.bit_length() + 2
    A = sum(c << (bits * i) for i, c in enumerate(a) if c)
    B = sum(c << (bits * i) for i, c in enumerate(b) if c)
    C = A * B
    mask, half, full = (1 << bits) - 1, 1 << (bits - 1), 1 << bits
    out = []
    for _ in range(len(a) + len(b) - 1):
        r = C & mask
        if r >= half:
            r -= full
        out.append(r)
        C = (C - r) >> bits
    return out


def _embed(num: Sequence[int], n: int, big: int) -> list[int]:
    step = big // n
    vec = [0] * big
    for i, c in enumerate(num):
        if c:
            vec[i * step] = c
    return _reduce(big, vec)


def _try_descend(n: int, num: list[int], p: int):
    """Rewrite an element of Q(zeta_n) over Q(zeta_{n/p}) if it lies there.

    Returns ``(numerator, extra_denominator)`` or ``None``.
    """
    m = n // p
    if m % p == 0:
        # Phi_n(x) = Phi_m(x^p): the subfield is spanned by exponents divisible by p
        if any(c for i, c in enumerate(num) if i % p):
            return None
        return num[::p], 1
    # p exactly divides n: average over Gal(Q(zeta_n)/Q(zeta_m)) via the trace
    pinv = pow(p, -1, m) if m > 1 else 0
    minv = pow(m, -1, p)
    acc = [0] * m
    for i, c in enumerate(num):
        if not c:
            continue
        s = (i * pinv) % m if m > 1 else 0
        t = (i * minv) % p
        acc[s] += c * (p - 1) if t == 0 else -c
    cand = _reduce(m, acc)
    scale = p - 1
    back = _embed(cand, m, n)
    if any(back[i] != scale * num[i] for i in range(len(num))):
        return None
    return cand, scale


def _canonical(n: int, num: list[int], den: int):
    while n > 1:
        for p in prime_factors(n):
            res = _try_descend(n, num, p)
            if res is not None:
                num, extra = res
                den *= extra
                n //= p
                break
        else:
            break
    g = den
    for c in num:
        if g == 1:
            break
        g = math.gcd(g, c)
    if not any(num):
        return 1, (0,), 1
    if g != 1:
        num = [c // g for c in num]
        den //= g
    return n, tuple(num), den


def _poly_trim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        k = len(a) - len(b)
        q[k] = c
        for j, bj in enumerate(b):
            a[k + j] -= c * bj
        a.pop()
        _poly_trim(a)
    return q, a


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _poly_trim(out)


class Cyclotomic:
    """An exact element of a cyclotomic field, immutable and hashable."""

    __slots__ = ("_order", "_num", "_den", "_hash")

    def __init__(self, order: int, coeffs: Iterable[Number] = ()):
        if order < 1:
            raise DomainError(f"cyclotomic order must be positive, got {order}")
        coeffs = [Fraction(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        vec = [int(c * den) for c in coeffs]
        self._set(*_canonical(order, _reduce(order, vec), den))

    def _set(self, order, num, den):
        self._order = order
        self._num = num
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, order: int, vec: Sequence[int], den: int = 1) -> "Cyclotomic":
        """Build from an integer exponent vector over ``den`` (indices mod order)."""
        obj = cls.__new__(cls)
        obj._set(*_canonical(order, _reduce(order, vec), den))
        return obj

    @classmethod
    def rational(cls, q: Number) -> "Cyclotomic":
        q = Fraction(q)
        obj = cls.__new__(cls)
        obj._set(*_canonical(1, [q.numerator], q.denominator))
        return obj

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "Cyclotomic":
        vec = [0] * n
        vec[k % n] = 1
        return cls._raw(n, vec)

    @classmethod
    def from_exponents(cls, n: int, terms: Mapping[int, Number]) -> "Cyclotomic":
        """Sum of ``c * zeta_n**e`` over the given ``{e: c}`` mapping."""
        vec: list[Fraction] = [Fraction(0)] * n
        for e, c in terms.items():
            vec[e % n] += Fraction(c)
        den = 1
        for c in vec:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return cls._raw(n, [int(c * den) for c in vec], den)

    # --- accessors -----------------------------------------------------
    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    def is_zero(self) -> bool:
        return self._order == 1 and self._num[0] == 0

    def is_rational(self) -> bool:
        return self._order == 1

    def to_fraction(self) -> Fraction:
        if self._order != 1:
            raise DomainError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def is_integral_rational(self) -> bool:
        return self._order == 1 and self._den == 1

    def is_algebraic_integer(self) -> bool:
        # the power basis of Q(zeta_n) is an integral basis of Z[zeta_n]
        return self._den == 1

    def sort_key(self):
        # 1 sorts before -1 so trivial characters come first in tables
        return (self._order, tuple(-c for c in self.coeffs))

    # --- arithmetic ----------------------------------------------------
    @staticmethod
    def _coerce(x) -> "Cyclotomic":
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.rational(x)
        return NotImplemented

    def _lifted(self, other: "Cyclotomic"):
        n = math.lcm(self._order, other._order)
        a = self._num if self._order == n else _embed(self._num, self._order, n)
        b = other._num if other._order == n else _embed(other._num, other._order, n)
        return n, a, b

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n, a, b = self._lifted(other)
        da, db = self._den, other._den
        vec = [x * db + y * da for x, y in zip(a, b)]
        return Cyclotomic._raw(n, vec, da * db)

    __radd__ = __add__

    def __neg__(self):
        obj = Cyclotomic.__new__(Cyclotomic)
        obj._set(self._order, tuple(-c for c in self._num), self._den)
        return obj

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other._order == 1:
            c = other._num[0]
            obj = Cyclotomic.__new__(Cyclotomic)
            num = [x * c for x in self._num]
            obj._set(*_canonical(self._order, num, self._den * other._den))
            return obj
        if self._order == 1:
            return other * self
        n, a, b = self._lifted(other)
        return Cyclotomic._raw(n, _kron_mul(a, b), self._den * other._den)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        n = self._order
        if n == 1:
            return Cyclotomic.rational(Fraction(self._den, self._num[0]))
        # roots of unity, Gauss sums and the like have a rational absolute value
        conj = self.conjugate()
        norm = self * conj
        if norm._order == 1:
            return conj * Fraction(norm._den, norm._num[0])
        # extended Euclid of a(x) against Phi_n(x) over Q
        a = _poly_trim([Fraction(c, self._den) for c in self._num])
        m = [Fraction(c) for c in cyclotomic_polynomial(n)]
        r0, r1 = m, a
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        c = r1[0]
        return Cyclotomic(n, [x / c for x in s1])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Cyclotomic.rational(1)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # --- Galois structure ----------------------------------------------
    def galois_act(self, k: int) -> "Cyclotomic":
        """Apply the automorphism zeta_n -> zeta_n**k."""
        n = self._order
        if math.gcd(k, n) != 1:
            raise InvalidAutomorphismError(f"k={k} is not a unit modulo the order {n}")
        vec = [0] * n
        for i, c in enumerate(self._num):
            if c:
                vec[(i * k) % n] += c
        return Cyclotomic._raw(n, vec, self._den)

    def conjugate(self) -> "Cyclotomic":
        return self.galois_act(-1)

    def is_real(self) -> bool:
        return self == self.conjugate()

    def __complex__(self) -> complex:
        n = self._order
        return sum(
            (c / self._den) * complex(math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n))
            for i, c in enumerate(self._num)
        )

    def real_interval(self, prec: int):
        """Rigorous enclosure of the real part at ``prec`` bits."""
        n = self._order
        # a private context per call keeps precision state local
        ctx = MPIntervalContext()
        ctx.prec = prec
        total = ctx.mpf(0)
        for i, c in enumerate(self._num):
            if c:
                total += ctx.mpf(c) * ctx.cos(2 * ctx.pi * i / n)
        return total / self._den

    def sign(self, precision_cap: int = DEFAULT_PRECISION_CAP) -> int:
        if not self.is_real():
            raise DomainError(f"sign requested for non-real element {self}")
        if self.is_zero():
            return 0
        if self._order == 1:
            return 1 if self._num[0] > 0 else -1
        prec = 64
        while prec <= precision_cap:
            box = self.real_interval(prec)
            if box.a > 0:
                return 1
            if box.b < 0:
                return -1
            prec *= 2
        raise PrecisionExhaustedError(f"could not isolate the sign of {self} within {precision_cap} bits")

    # --- comparison, hashing, text -------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.rational(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return (self._order, self._num, self._den) == (other._order, other._num, other._den)

    def __hash__(self):
        if self._hash is None:
            if self._order == 1:
                self._hash = hash(Fraction(self._num[0], self._den))
            else:
                self._hash = hash((self._order, self._num, self._den))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def render(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            cs = str(c)
            terms.append(cs if i == 0 else f"{cs}*z" if i == 1 else f"{cs}*z^{i}")
        body = " + ".join(terms) if terms else "0"
        return f"{body}; order={self._order}"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Cyclotomic({self.render()!r})"

    @classmethod
    def parse(cls, text: str) -> "Cyclotomic":
        """Inverse of :meth:`render`."""
        m = re.fullmatch(r"\s*(.*?)\s*;\s*order\s*=\s*(\d+)\s*", text)
        if not m:
            raise DomainError(f"cannot parse cyclotomic element {text!r}")
        body, order = m.group(1), int(m.group(2))
        terms: dict[int, Fraction] = {}
        for term in body.split(" + "):
            term = term.strip()
            tm = re.fullmatch(r"(-?\d+(?:/\d+)?)(?:\*z(?:\^(\d+))?)?", term)
            if not tm:
                raise DomainError(f"bad term {term!r} in {text!r}")
            exp = 0
            if "*z" in term:
                exp = int(tm.group(2)) if tm.group(2) else 1
            terms[exp] = terms.get(exp, Fraction(0)) + Fraction(tm.group(1))
        return cls.from_exponents(order, terms)


def cyc_add(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a + b


def cyc_mul(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a * b


def cyc_inv(a: Cyclotomic) -> Cyclotomic:
    return a.inverse()


def galois_act(a: Cyclotomic, k: int) -> Cyclotomic:
    return a.galois_act(k)


def sign_of_real(a: Cyclotomic, precision_cap: int = DEFAULT_PRECISION_CAP) -> int:
    return a.sign(precision_cap)


ZERO = Cyclotomic.rational(0)
ONE = Cyclotomic.rational(1)

"""Character tables, class functions and the operations on them.

Tables are computed with Dixon's method: the class-algebra structure constants
are diagonalised simultaneously over a prime field F_p with p = 1 mod the group
exponent, and the resulting characters mod p are lifted to Q(zeta_e) by
recovering eigenvalue multiplicities.  Every table is checked against both
orthogonality relations in exact integer arithmetic before it is returned.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from .cyclo import ONE, ZERO, Cyclotomic, _embed, _reduction_table, euler_phi, prime_factors
from .errors import InputError, InternalConsistencyError
from .groups import FiniteGroup, Subgroup, coset_projection

# --- modular linear algebra ----------------------------------------------


def _is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == (n,)


def dixon_prime(order: int, exponent: int) -> int:
    """Least prime p = 1 (mod exponent) with p > 2*sqrt(order)."""
    bound = 2 * math.isqrt(order) + 1
    p = exponent + 1
    while p <= bound or not _is_prime(p):
        p += exponent
    return p


def _primitive_root(p: int) -> int:
    qs = prime_factors(p - 1)
    return next(g for g in range(2, p) if all(pow(g, (p - 1) // q, p) != 1 for q in qs)) if p > 2 else 1


def _rref(A: np.ndarray, p: int):
    A = A.copy() % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, p)) % p
        col = A[:, c].copy()
        col[r] = 0
        A = (A - np.outer(col, A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def _nullspace(A: np.ndarray, p: int) -> np.ndarray:
    """Rows spanning the right nullspace of A over F_p."""
    R, pivots = _rref(A, p)
    n = A.shape[1]
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for i, c in enumerate(pivots):
            basis[t, c] = (-R[i, f]) % p
    return basis


def _split(B: np.ndarray, T: np.ndarray, p: int) -> list[np.ndarray]:
    """Split span(rows of B) into eigenspaces of T (acting on columns)."""
    B, piv = _rref(B, p)
    k = B.shape[0]
    if k == 1:
        return [B]
    C = ((B @ T.T) % p)[:, piv].T  # T V = V C with V = B^T
    spaces = []
    found = 0
    eye = np.eye(k, dtype=np.int64)
    for lam in range(p):
        N = _nullspace((C - lam * eye) % p, p)
        if len(N):
            spaces.append((N @ B) % p)
            found += len(N)
            if found == k:
                break
    if found != k:
        raise InternalConsistencyError("class matrix is not diagonalisable over the Dixon prime field")
    return spaces


# --- class functions -----------------------------------------------------


@dataclass(frozen=True, eq=False)
class ClassFunction:
    """Values on the conjugacy classes of ``group`` in :class:`ConjugacyData` order."""

    group: FiniteGroup
    values: tuple[Cyclotomic, ...]

    def _check(self, other: "ClassFunction"):
        if other.group is not self.group:
            raise InputError("class functions live on different groups")

    def __add__(self, other):
        self._check(other)
        return ClassFunction(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        self._check(other)
        return ClassFunction(self.group, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self):
        return ClassFunction(self.group, tuple(-a for a in self.values))

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.group, tuple(a * b for a, b in zip(self.values, other.values)))
        return ClassFunction(self.group, tuple(a * other for a in self.values))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return ClassFunction(self.group, tuple(a ** k for a in self.values))

    def __eq__(self, other):
        return isinstance(other, ClassFunction) and other.group is self.group and other.values == self.values

    def __hash__(self):
        return hash((id(self.group), self.values))

    def conjugate(self) -> "ClassFunction":
        return ClassFunction(self.group, tuple(a.conjugate() for a in self.values))

    def galois_act(self, k: int) -> "ClassFunction":
        return ClassFunction(self.group, tuple(a.galois_act(k) for a in self.values))

    @property
    def degree(self) -> Cyclotomic:
        return self.values[0]

    def at(self, g: int) -> Cyclotomic:
        return self.values[self.group.conjugacy.class_of[g]]

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def __repr__(self):
        return "ClassFunction([" + ", ".join(v.render().split(";")[0] if v.order == 1 else v.render() for v in self.values) + "])"


def constant(G: FiniteGroup, c) -> ClassFunction:
    c = Cyclotomic.rational(c) if not isinstance(c, Cyclotomic) else c
    return ClassFunction(G, tuple(c for _ in G.conjugacy.classes))


def zero_function(G: FiniteGroup) -> ClassFunction:
    return constant(G, 0)


def trivial_character(G: FiniteGroup) -> ClassFunction:
    return constant(G, 1)


def regular_character(G: FiniteGroup) -> ClassFunction:
    vals = [ZERO] * len(G.conjugacy)
    vals[0] = Cyclotomic.rational(G.size)
    return ClassFunction(G, tuple(vals))


def from_element_function(G: FiniteGroup, f) -> ClassFunction:
    """Class function from a callable on elements (evaluated at class representatives)."""
    return ClassFunction(G, tuple(_as_cyc(f(c[0])) for c in G.conjugacy.classes))


def _as_cyc(v) -> Cyclotomic:
    return v if isinstance(v, Cyclotomic) else Cyclotomic.rational(v)


# --- integer-array view of Q(zeta_e) -------------------------------------


class _Field:
    """Power-basis arrays for Q(zeta_e) used by the vectorised checks."""

    def __init__(self, e: int):
        self.e = e
        self.phi = euler_phi(e)
        table = np.array(_reduction_table(e), dtype=object)
        # products of two reduced elements have exponents up to 2*phi - 2
        rows = [table[k % e] for k in range(2 * self.phi - 1)]
        self.R = np.array(rows, dtype=np.int64)

    def encode(self, values: Sequence[Cyclotomic]):
        """Integer array (len(values), phi) and a common denominator."""
        den = 1
        for v in values:
            if self.e % v.order:
                return None
            den = math.lcm(den, v._den)
        arr = np.zeros((len(values), self.phi), dtype=np.int64)
        for i, v in enumerate(values):
            arr[i] = [c * (den // v._den) for c in _embed(v._num, v.order, self.e)]
        return arr, den

    def collapse(self, W: np.ndarray) -> np.ndarray:
        """Map (..., phi, phi) outer products to reduced (..., phi) vectors."""
        shape = W.shape[:-2]
        flat = np.zeros(shape + (2 * self.phi - 1,), dtype=W.dtype)
        for u in range(self.phi):
            flat[..., u:u + self.phi] += W[..., u, :]
        return flat @ self.R

    @staticmethod
    def pair(A: np.ndarray, B: np.ndarray, w: np.ndarray) -> np.ndarray:
        """W[i, j, u, v] = sum_k w[k] A[i, k, u] B[j, k, v] as an exact integer array."""
        ni, nk, phi = A.shape
        nj = B.shape[0]
        left = (A * w[None, :, None]).transpose(0, 2, 1).reshape(ni * phi, nk)
        right = B.transpose(1, 0, 2).reshape(nk, nj * phi)
        bound = int(np.abs(left).max(initial=0)) * int(np.abs(right).max(initial=0)) * nk
        if bound < 2 ** 52:
            # every partial sum is an integer below 2^53, so float64 BLAS is exact
            W = np.rint(left.astype(np.float64) @ right.astype(np.float64)).astype(np.int64)
        else:
            W = (left.astype(object) @ right.astype(object))
        return W.reshape(ni, phi, nj, phi).transpose(0, 2, 1, 3)

    def decode(self, vec: Sequence[int], den: int = 1) -> Cyclotomic:
        return Cyclotomic._raw(self.e, [int(c) for c in vec], den)


# --- character tables ----------------------------------------------------


class CharacterTable:
    """Irreducible characters of a finite group, ordered by degree then values."""

    def __init__(self, group: FiniteGroup, irreducibles: list[ClassFunction], prime: int):
        self.group = group
        self.irreducibles = tuple(irreducibles)
        self.dixon_prime = prime
        self.exponent = group.exponent
        self._index = {chi.values: i for i, chi in enumerate(self.irreducibles)}
        self._field = _Field(self.exponent)
        enc = [self._field.encode(chi.values) for chi in self.irreducibles]
        self._X = np.stack([a for a, _ in enc])
        self._Xbar = np.stack([self._field.encode(chi.conjugate().values)[0] for chi in self.irreducibles])

    def __len__(self):
        return len(self.irreducibles)

    def __iter__(self):
        return iter(self.irreducibles)

    def __getitem__(self, i: int) -> ClassFunction:
        return self.irreducibles[i]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(f"chi{i}" for i in range(len(self)))

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(int(chi.degree.to_fraction()) for chi in self.irreducibles)

    def index(self, chi: ClassFunction) -> int:
        """Position of an irreducible character, or -1."""
        return self._index.get(chi.values, -1)

    def is_irreducible(self, chi: ClassFunction) -> bool:
        return chi.group is self.group and chi.values in self._index

    @cached_property
    def conjugation_perm(self) -> tuple[int, ...]:
        return tuple(self.index(chi.conjugate()) for chi in self.irreducibles)

    def galois_perm(self, k: int) -> tuple[int, ...]:
        """Index of chi^k (values acted on by zeta_e -> zeta_e^k) for each chi."""
        return tuple(self.index(chi.galois_act(k)) for chi in self.irreducibles)

    def decompose(self, f: ClassFunction) -> list[Cyclotomic]:
        """Inner products <f, chi> for every irreducible chi."""
        if f.group is not self.group:
            raise InputError("class function belongs to a different group")
        i = self._index.get(f.values)
        if i is not None:
            return [ONE if j == i else ZERO for j in range(len(self))]
        enc = self._field.encode(f.values)
        if enc is None:
            return [inner_product(f, chi) for chi in self.irreducibles]
        F, den = enc
        sizes = np.array(self.group.conjugacy.sizes, dtype=np.int64)
        W = self._field.pair(F[None], self._Xbar, sizes)[0]
        red = self._field.collapse(W)
        return [self._field.decode(row, den * self.group.size) for row in red]

    def integral_decomposition(self, f: ClassFunction) -> list[int]:
        """Integer multiplicities of a virtual character; raises if ``f`` is not one."""
        out = []
        for i, c in enumerate(self.decompose(f)):
            if not c.is_integral_rational():
                raise InputError(
                    f"class function is not a virtual character: multiplicity {c} at {self.labels[i]}"
                )
            out.append(int(c.to_fraction()))
        return out

    def combine(self, coeffs: Sequence[int]) -> ClassFunction:
        vals = [ZERO] * len(self.group.conjugacy)
        for c, chi in zip(coeffs, self.irreducibles):
            if c:
                vals = [v + c * x for v, x in zip(vals, chi.values)]
        return ClassFunction(self.group, tuple(vals))

    def verify(self) -> None:
        """Both orthogonality relations, exactly; raises on failure."""
        N = self.group.size
        sizes = np.array(self.group.conjugacy.sizes, dtype=np.int64)
        r = len(self)
        if r != len(sizes):
            raise InternalConsistencyError(f"{r} characters for {len(sizes)} classes")
        rows = self._field.collapse(self._field.pair(self._X, self._Xbar, sizes))
        expect = np.zeros_like(rows)
        for i in range(r):
            expect[i, i, 0] = N
        if not np.array_equal(rows, expect):
            i, j = (int(v) for v in np.argwhere((rows != expect).any(axis=2))[0])
            raise InternalConsistencyError(f"row orthogonality fails for chi{i}, chi{j} of {self.group!r}")
        ones = np.ones(r, dtype=np.int64)
        cols = self._field.collapse(
            self._field.pair(self._X.transpose(1, 0, 2), self._Xbar.transpose(1, 0, 2), ones)
        )
        expect = np.zeros_like(cols)
        for a in range(r):
            expect[a, a, 0] = N // sizes[a]
        if not np.array_equal(cols, expect):
            a, b = (int(v) for v in np.argwhere((cols != expect).any(axis=2))[0])
            raise InternalConsistencyError(f"column orthogonality fails for classes {a}, {b} of {self.group!r}")
        if sum(d * d for d in self.degrees) != N:
            raise InternalConsistencyError("degree-sum identity fails")

    def render(self) -> str:
        lines = []
        for label, chi in zip(self.labels, self.irreducibles):
            lines.append(label + ": " + " | ".join(v.render() for v in chi.values))
        return "\n".join(lines)


def _structure_constants(G: FiniteGroup) -> np.ndarray:
    """S[j][i, k] = #{x in C_i : x^-1 z_k in C_j}, z_k the representative of C_k."""
    cd = G.conjugacy
    r = len(cd)
    S = np.zeros((r, r, r), dtype=np.int64)
    cls = cd.class_of
    for k, z in enumerate(cd.reps):
        for x in range(G.size):
            S[cls[G.mul[G.inv[x]][z]], cls[x], k] += 1
    return S


@lru_cache(maxsize=None)
def char_table(G: FiniteGroup) -> CharacterTable:
    cd = G.conjugacy
    r, N, e = len(cd), G.size, cd.exponent
    p = dixon_prime(N, e)
    S = _structure_constants(G)
    rng = random.Random(1)
    spaces = [np.eye(r, dtype=np.int64)]
    for _ in range(64):
        if all(s.shape[0] == 1 for s in spaces):
            break
        coeffs = [rng.randrange(p) for _ in range(r)]
        T = np.tensordot(np.array(coeffs, dtype=np.int64), S, axes=1) % p
        spaces = [piece for s in spaces for piece in (_split(s, T, p) if s.shape[0] > 1 else [s])]
    else:
        raise InternalConsistencyError("Dixon splitting did not terminate")

    sizes = cd.sizes
    inverse_class = [cd.class_of[G.inv[z]] for z in cd.reps]
    z = pow(_primitive_root(p), (p - 1) // e, p)
    dft = np.array([[pow(z, (-t * l) % e, p) for t in range(e)] for l in range(e)], dtype=np.int64)
    einv = pow(e, -1, p)
    chars = []
    for s in spaces:
        w = s[0] % p
        if w[0] == 0:
            raise InternalConsistencyError("eigenvector vanishes at the identity class")
        w = (w * pow(int(w[0]), -1, p)) % p
        norm = sum(int(w[k]) * int(w[inverse_class[k]]) * pow(sizes[k], -1, p) for k in range(r)) % p
        d2 = N * pow(norm, -1, p) % p
        d = next((d for d in range(1, math.isqrt(N) + 1) if d * d % p == d2), None)
        if d is None:
            raise InternalConsistencyError("no admissible degree found")
        theta = np.array([d * int(w[k]) * pow(sizes[k], -1, p) % p for k in range(r)], dtype=np.int64)
        powers = np.array(cd.power_table, dtype=np.int64)  # (r, e)
        mult = (theta[powers] @ dft) % p * einv % p
        if (mult > d).any():
            raise InternalConsistencyError("eigenvalue multiplicity out of range during lift")
        vals = tuple(Cyclotomic._raw(e, [int(m) for m in row]) for row in mult)
        chars.append(ClassFunction(G, vals))
    chars.sort(key=lambda chi: (chi.degree.to_fraction(), tuple(v.sort_key() for v in chi.values)))
    table = CharacterTable(G, chars, p)
    table.verify()
    return table


# --- operations on class functions ---------------------------------------


def inner_product(chi: ClassFunction, phi: ClassFunction) -> Cyclotomic:
    if chi.group is not phi.group:
        raise InputError("inner product of class functions on different groups")
    G = chi.group
    total = ZERO
    for size, a, b in zip(G.conjugacy.sizes, chi.values, phi.values):
        total = total + size * a * b.conjugate()
    return total * Fraction(1, G.size)


def restrict(chi: ClassFunction, H: Subgroup) -> ClassFunction:
    if H.parent is not chi.group:
        raise InputError("restriction to a subgroup of a different group")
    G = H.parent
    vals = tuple(chi.values[G.conjugacy.class_of[H.embed[c[0]]]] for c in H.group.conjugacy.classes)
    return ClassFunction(H.group, vals)


def induce(phi: ClassFunction, H: Subgroup) -> ClassFunction:
    if phi.group is not H.group:
        raise InputError("induction of a class function not defined on the subgroup")
    G = H.parent
    cd = G.conjugacy
    acc = [ZERO] * len(cd)
    for size_d, cls_d, v in zip(H.group.conjugacy.sizes, H.group.conjugacy.classes, phi.values):
        k = cd.class_of[H.embed[cls_d[0]]]
        acc[k] = acc[k] + size_d * v
    vals = tuple(a * Fraction(G.size, H.order * size) for a, size in zip(acc, cd.sizes))
    return ClassFunction(G, vals)


def inflate(chi: ClassFunction, G: FiniteGroup, N: Subgroup) -> ClassFunction:
    """Pull a class function on G/N back to G (G/N numbered as in :func:`quotient`)."""
    Q = chi.group
    proj = coset_projection(G, N)
    if Q.size * N.order != G.size:
        raise InputError("class function is not defined on the quotient G/N")
    for a in range(G.size):
        for b in (G.id, a, G.mul[a][a]):
            if proj[G.mul[a][b]] != Q.mul[proj[a]][proj[b]]:
                raise InputError("quotient numbering does not match the coset projection")
    return ClassFunction(G, tuple(chi.at(proj[c[0]]) for c in G.conjugacy.classes))


def adams(chi: ClassFunction, k: int) -> ClassFunction:
    if k < 1:
        raise InputError(f"Adams operations need k >= 1, got {k}")
    cd = chi.group.conjugacy
    return ClassFunction(chi.group, tuple(chi.values[cd.power_class(c, k)] for c in range(len(cd))))


def _newton_det(chi: ClassFunction) -> ClassFunction:
    cd = chi.group.conjugacy
    d = int(chi.degree.to_fraction())
    out = []
    for c in range(len(cd)):
        p = [None] + [chi.values[cd.power_class(c, i)] for i in range(1, d + 1)]
        el = [ONE]
        for i in range(1, d + 1):
            acc = ZERO
            for j in range(1, i + 1):
                term = el[i - j] * p[j]
                acc = acc + term if j % 2 else acc - term
            el.append(acc * Fraction(1, i))
        out.append(el[d])
    return ClassFunction(chi.group, tuple(out))


@lru_cache(maxsize=None)
def _irreducible_dets(table: CharacterTable) -> tuple[ClassFunction, ...]:
    return tuple(_newton_det(chi) for chi in table.irreducibles)


def det_char(chi: ClassFunction) -> ClassFunction:
    """Determinant character, multiplicative on virtual characters."""
    table = char_table(chi.group)
    dets = _irreducible_dets(table)
    i = table.index(chi)
    if i >= 0:
        return dets[i]
    result = trivial_character(chi.group)
    for c, det in zip(table.integral_decomposition(chi), dets):
        if c:
            result = result * det ** c
    return result


def frobenius_schur(chi: ClassFunction) -> int:
    table = char_table(chi.group)
    if not table.is_irreducible(chi):
        raise InputError("Frobenius-Schur indicator requested for a non-irreducible class function")
    G = chi.group
    cd = G.conjugacy
    total = ZERO
    for c, size in enumerate(cd.sizes):
        total = total + size * chi.values[cd.power_class(c, 2)]
    value = total * Fraction(1, G.size)
    if value not in (ONE, ZERO, -ONE):
        raise InternalConsistencyError(f"indicator {value} is not in {{-1, 0, 1}}")
    return int(value.to_fraction())


def symplectic_chars(G: FiniteGroup) -> list[ClassFunction]:
    return [chi for chi in char_table(G) if frobenius_schur(chi) == -1]


def is_virtual_character(f: ClassFunction) -> bool:
    try:
        char_table(f.group).integral_decomposition(f)
    except InputError:
        return False
    return True


def kernel(chi: ClassFunction) -> tuple[int, ...]:
    d = chi.degree
    return tuple(g for g in range(chi.group.size) if chi.at(g) == d)

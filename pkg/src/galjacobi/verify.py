"""Property suites run by ``galjacobi verify``.

Each suite returns a :class:`SuiteReport` whose checks aggregate over a
corpus; a failing check records the first (smallest) witness it met.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

from .center import is_rational_equivariant, to_group_algebra
from .chartab import (
    adams,
    char_table,
    det_char,
    frobenius_schur,
    induce,
    inflate,
    restrict,
    trivial_character,
)
from .corpus import (
    CorpusConfig,
    adams_groups,
    closed_form_data,
    global_fixtures,
    h12_symplectic_datum,
    j2_global_fixtures,
    local_data,
    odd_order_data,
    small_groups,
    tame_abelian_data,
)
from .cyclo import DEFAULT_PRECISION_CAP, ONE, Cyclotomic
from .errors import IndeterminateSignError, InputError
from .gauss import equivariant_J2, equivariant_tau, finite_field, gauss_sum, modified_tau
from .globalext import (
    UNKNOWN,
    assemble_global_J2,
    equivariant_symplectic_J,
    global_y,
    symplectic_sign,
    twisted_y_by_induction,
    twisted_y_direct,
)
from .groups import all_subgroups, normal_subgroups, quotient, subgroup_generated
from .localext import (
    closed_form_twisted_y,
    different_valuation,
    freeness_congruence,
    is_unramified,
    is_weakly_ramified,
    sqrt_inv_different,
    twisted_y,
)

GAUSS_FIELDS = (3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 49)


@dataclass
class Check:
    name: str
    cases: int = 0
    failures: int = 0
    witness: str = ""
    status_override: Optional[str] = None

    def record(self, ok: bool, witness: Callable[[], str] | str = ""):
        self.cases += 1
        if not ok:
            self.failures += 1
            if not self.witness:
                self.witness = witness() if callable(witness) else witness

    @property
    def status(self) -> str:
        if self.status_override:
            return self.status_override
        return "pass" if self.failures == 0 and self.cases > 0 else "fail"

    def as_dict(self) -> dict:
        out = {"check": self.name, "status": self.status, "cases": self.cases, "failures": self.failures}
        if self.witness:
            out["witness"] = self.witness
        return out


@dataclass
class SuiteReport:
    suite: str
    params: dict
    checks: list[Check] = field(default_factory=list)
    provenance: dict = field(default_factory=dict)

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        c = Check(name)
        self.checks.append(c)
        return c

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)


def _g(G) -> str:
    return G.label or f"order {G.size}"


def _ld(d) -> str:
    return (f"{_g(d.group)} p={d.p} filtration orders {[H.order for H in d.filtration]} "
            f"frobenius {d.frobenius}")


# --- hilbert ---------------------------------------------------------------


def brute_force_different(d) -> int:
    """sum over g != 1 of the number of filtration groups containing g."""
    G = d.group
    return sum(sum(1 for H in d.filtration if g in H) for g in range(G.size) if g != G.id)


def suite_hilbert(max_order: int = 24, **_) -> SuiteReport:
    rep = SuiteReport("hilbert", {"max_order": max_order, "primes": [2, 3, 5, 7]})
    hil = rep.check("different valuation equals brute-force count")
    cong = rep.check("weakly ramified with A: n = 1 mod |G_1|")
    tame = rep.check("tame with A: |G_0| odd")
    podd = rep.check("p odd with A: |G_0| odd")
    for d in local_data(CorpusConfig(max_order=max_order)):
        v = different_valuation(d)
        hil.record(v == brute_force_different(d), lambda: f"{_ld(d)}: {v} vs {brute_force_different(d)}")
        n = sqrt_inv_different(d)
        if n is None:
            continue
        if is_weakly_ramified(d):
            cong.record(freeness_congruence(d), lambda: f"{_ld(d)}: n={n}")
        if d.is_tame:
            tame.record(d.inertia.order % 2 == 1, lambda: _ld(d))
        if d.p % 2:
            podd.record(d.inertia.order % 2 == 1, lambda: _ld(d))
    return rep


# --- adams -----------------------------------------------------------------


def suite_adams(max_order: int = 24, **_) -> SuiteReport:
    rep = SuiteReport("adams", {"max_order": max_order})
    integ = rep.check("psi_k decomposes integrally")
    dets = rep.check("det of psi_k(chi) equals det(chi)^k")
    res = rep.check("psi_k commutes with restriction")
    inf = rep.check("psi_k commutes with inflation")
    ind = rep.check("psi_k commutes with induction (odd order, k prime to |G|)")
    irr = rep.check("psi_k permutes irreducibles when k is prime to |G|")
    for G in adams_groups():
        if G.size > max_order:
            continue
        table = char_table(G)
        rep.provenance[_g(G)] = {"dixon_prime": table.dixon_prime}
        e = G.exponent
        subs = all_subgroups(G)
        for k in range(1, e + 1):
            for chi, lab in zip(table, table.labels):
                psi = adams(chi, k)
                try:
                    table.integral_decomposition(psi)
                    ok = True
                except InputError:
                    ok = False
                integ.record(ok, lambda: f"{_g(G)} {lab} k={k}")
                dets.record(det_char(psi) == det_char(chi) ** k, lambda: f"{_g(G)} {lab} k={k}")
                if math.gcd(k, G.size) == 1:
                    irr.record(table.is_irreducible(psi), lambda: f"{_g(G)} {lab} k={k}")
                for H in subs:
                    res.record(restrict(psi, H) == adams(restrict(chi, H), k),
                               lambda: f"{_g(G)} {lab} k={k} subgroup {H.elements}")
        for N in normal_subgroups(G):
            if N.is_trivial() or N.order == G.size:
                continue
            Q = quotient(G, N)
            for k in range(1, e + 1):
                for chi, lab in zip(char_table(Q), char_table(Q).labels):
                    inf.record(adams(inflate(chi, G, N), k) == inflate(adams(chi, k), G, N),
                               lambda: f"{_g(G)}/{N.elements} {lab} k={k}")
        if G.size % 2:
            for H in subs:
                for phi in char_table(H.group):
                    for k in range(1, e + 1):
                        if math.gcd(k, G.size) != 1:
                            continue
                        ind.record(adams(induce(phi, H), k) == induce(adams(phi, k), H),
                                   lambda: f"{_g(G)} subgroup {H.elements} k={k}")
    cex = rep.check("H8 over C4, k=2: induction defect is chi_i - trivial")
    ok, witness = h8_induction_defect()
    cex.record(ok, witness)
    return rep


def h8_induction_defect() -> tuple[bool, str]:
    """For faithful phi on C4 = <x> in H8: psi_2(ind phi) - ind(psi_2 phi) = lambda - 1,
    lambda the linear character with kernel C4."""
    from .groups import group_quaternion

    G = group_quaternion(8)
    C4 = subgroup_generated(G, [1])
    table = char_table(G)
    triv = trivial_character(G)
    lam = next(chi for chi in table if chi.degree == ONE and chi != triv
               and all(chi.at(g) == ONE for g in C4.elements))
    expected = lam - triv
    faithful = [phi for phi in char_table(C4.group) if phi.at(1) ** 2 == -ONE]
    for phi in faithful:
        diff = adams(induce(phi, C4), 2) - induce(adams(phi, 2), C4)
        if diff != expected:
            return False, f"defect {table.integral_decomposition(diff)}"
    return len(faithful) == 2, "" if len(faithful) == 2 else "faithful characters missing"


# --- twisted y -------------------------------------------------------------


def suite_twisted_y(max_order: int = 24, **_) -> SuiteReport:
    rep = SuiteReport("twisted-y", {"max_order": max_order})
    eq = rep.check("twisted y equals (1 - e_I) + sigma^-1 e_I")
    ident = rep.check("totally ramified odd order: twisted y is 1")
    dens = rep.check("group-algebra coordinates have denominators dividing |I|")
    for d in closed_form_data(CorpusConfig(max_order=max_order)):
        ty = twisted_y(d)
        eq.record(ty == closed_form_twisted_y(d), lambda: _ld(d))
        if d.inertia.order == d.group.size:
            ident.record(ty.is_identity(), lambda: _ld(d))
        coords = to_group_algebra(ty)
        dens.record(all(c.is_rational() and d.inertia.order % c.to_fraction().denominator == 0 for c in coords),
                    lambda: _ld(d))
    return rep


# --- gauss -----------------------------------------------------------------


def suite_gauss(max_order: int = 49, **_) -> SuiteReport:
    rep = SuiteReport("gauss", {"max_q": max_order})
    absval = rep.check("|g|^2 = q for nontrivial characters")
    triv = rep.check("g(trivial) = -1")
    quad = rep.check("quadratic Gauss sum of F3 squares to -3")
    jac = rep.check("Jacobi sums g(chi)^2/g(chi^2) are integers of absolute value sqrt(q)")
    for q in GAUSS_FIELDS:
        if q > max_order:
            continue
        p = next(r for r in range(2, q + 1) if q % r == 0)
        f = round(math.log(q, p))
        k = finite_field(p, f)
        rep.provenance[f"F{q}"] = k.describe()
        triv.record(gauss_sum(k, 0) == -ONE, f"F{q}")
        for a in range(1, q - 1):
            g = gauss_sum(k, a)
            absval.record(g * g.conjugate() == q, lambda: f"F{q} exponent {a}")
            a2 = 2 * a % (q - 1)
            if q <= 25 and a2:
                J = g * g / gauss_sum(k, a2)
                jac.record(J.is_algebraic_integer() and J * J.conjugate() == q,
                           lambda: f"F{q} exponent {a}: {J.render()}")
    if max_order >= 3:
        g = gauss_sum(finite_field(3, 1), 1)
        quad.record(g * g == -3, lambda: g.render())
    return rep


# --- j2 --------------------------------------------------------------------


def _tad(d) -> str:
    return f"{_g(d.base.group)} e={d.e} q={d.residue.q} frobenius {d.base.frobenius}"


def suite_j2(max_order: int = 49, **_) -> SuiteReport:
    rep = SuiteReport("j2", {"max_q": max_order})
    rat = rep.check("J2 is rational (Galois equivariant)")
    mod = rep.check("modified tau: tau' = tau at ramified chi, -det(sigma)^-1 tau at unramified chi")
    for d in tame_abelian_data(CorpusConfig(max_q=max_order)):
        J = equivariant_J2(d)
        rat.record(is_rational_equivariant(J), lambda: _tad(d))
        tau, taup = equivariant_tau(d), modified_tau(d)
        sigma = d.base.frobenius
        for chi, t, tp in zip(tau.table, tau.coeffs, taup.coeffs):
            expected = -t / det_char(chi).at(sigma) if is_unramified(chi, d.base) else t
            mod.record(tp == expected, lambda: _tad(d))
    return rep


# --- decomposition ---------------------------------------------------------


def suite_decomposition(max_order: int = 24, **_) -> SuiteReport:
    rep = SuiteReport("decomposition", {"max_order": max_order})
    routes = rep.check("twisted y: product of inductions equals the global twist")
    j2 = rep.check("assembled J2 is rational")
    for name, data in global_fixtures():
        if data.group.size > max_order:
            continue
        routes.record(twisted_y_by_induction(data) == twisted_y_direct(data), name)
    for name, data in j2_global_fixtures():
        if data.group.size > max_order:
            continue
        j2.record(is_rational_equivariant(assemble_global_J2(data)), name)
    return rep


# --- symplectic ------------------------------------------------------------


def brute_force_indicator(chi) -> Cyclotomic:
    G = chi.group
    total = sum((chi.at(G.mul[g][g]) for g in range(G.size)), Cyclotomic.rational(0))
    return total / G.size


def suite_symplectic(max_order: int = 24, precision_cap: int = DEFAULT_PRECISION_CAP, **_) -> SuiteReport:
    rep = SuiteReport("symplectic", {"max_order": max_order, "precision_cap": precision_cap})
    fs = rep.check("Frobenius-Schur indicator matches the element-wise sum")
    seen = set()
    for G in adams_groups() + small_groups(max_order):
        if G.size > max_order or id(G) in seen:
            continue
        seen.add(id(G))
        table = char_table(G)
        for chi, lab in zip(table, table.labels):
            fs.record(brute_force_indicator(chi) == frobenius_schur(chi), lambda: f"{_g(G)} {lab}")
    h12 = h12_symplectic_datum()
    anchor = rep.check("H12 tame place: y(psi_2 chi) = -1 at the faithful symplectic chi")
    order2 = rep.check("H12 tame place: symplectic J' has order 2 with one -1")
    chi = next(c for c in char_table(h12.group) if frobenius_schur(c) == -1)
    value = global_y(h12, adams(chi, 2))
    anchor.record(value == -ONE, lambda: value.render())
    J = equivariant_symplectic_J(h12, precision_cap)
    minus = [c for c in J.coeffs if c == -ONE]
    order2.record(J.order() == 2 and len(minus) == 1, lambda: J.render())
    odd = rep.check("odd order: symplectic J' is the identity")
    for data in odd_order_data():
        odd.record(equivariant_symplectic_J(data, precision_cap).is_identity(), _g(data.group))
    sq = rep.check("decidable fixtures: J' squares to 1 and is rational")
    unk = rep.check("undecidable fixtures: sign reported UNKNOWN / indeterminate")
    for name, data in global_fixtures():
        if data.group.size > max_order:
            continue
        decidable = all(rec.sign_rule_applies for rec in data.places)
        if decidable:
            J = equivariant_symplectic_J(data, precision_cap)
            sq.record((J * J).is_identity() and is_rational_equivariant(J), name)
        else:
            try:
                equivariant_symplectic_J(data, precision_cap)
                raised = False
            except IndeterminateSignError:
                raised = True
            signs = [symplectic_sign(data, c, precision_cap) for c in char_table(data.group)]
            has_symp = any(frobenius_schur(c) == -1 for c in char_table(data.group))
            unk.record(raised and (UNKNOWN in signs) == has_symp, name)
    return rep


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "hilbert": suite_hilbert,
    "adams": suite_adams,
    "twisted-y": suite_twisted_y,
    "gauss": suite_gauss,
    "j2": suite_j2,
    "decomposition": suite_decomposition,
    "symplectic": suite_symplectic,
}


def run_suite(name: str, max_order: Optional[int] = None,
              precision_cap: int = DEFAULT_PRECISION_CAP) -> SuiteReport:
    if name not in SUITES:
        raise InputError(f"unknown suite {name!r}; available: {', '.join(SUITES)}")
    kwargs = {"precision_cap": precision_cap}
    if max_order is not None:
        kwargs["max_order"] = max_order
    return SUITES[name](**kwargs)

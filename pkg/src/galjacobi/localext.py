"""Local Galois extensions modelled by their group, filtration and Frobenius lift.

No p-adic field is ever built: everything here is a function of the Galois
group, the lower ramification filtration ``G_0 >= G_1 >= ...`` and a lift of
Frobenius.  Filtration entries past the end of the supplied list are trivial.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

from .center import CentralElement, from_group_algebra, twist_endo
from .chartab import ClassFunction, char_table, det_char
from .cyclo import ONE, Cyclotomic
from .errors import InputError
from .groups import FiniteGroup, Subgroup, is_cyclic, is_normal, is_p_group, quotient, subgroup_generated


@dataclass(frozen=True, eq=False)
class LocalExtensionData:
    group: FiniteGroup
    p: int
    filtration: tuple[Subgroup, ...]
    frobenius: int
    f_abs: int = 1

    def __post_init__(self):
        G = self.group
        if not self.filtration:
            raise InputError("filtration must list at least the inertia group G_0")
        for i, H in enumerate(self.filtration):
            if H.parent is not G:
                raise InputError(f"filtration entry {i} is not a subgroup of the Galois group")
            if not is_normal(H):
                raise InputError(f"filtration entry G_{i} is not normal")
            if i and not H <= self.filtration[i - 1]:
                raise InputError(f"filtration is not descending at G_{i}")
        I, W = self.inertia, self.wild_inertia
        if not is_p_group(W, self.p):
            raise InputError(f"G_1 (order {W.order}) is not a {self.p}-group")
        if (I.order // W.order) % self.p == 0:
            raise InputError("G_1 is not the Sylow p-subgroup of G_0")
        Wloc = Subgroup(I.group, [I.local_index[w] for w in W.elements])
        if not is_cyclic(quotient(I.group, Wloc)):
            raise InputError("G_0/G_1 is not cyclic")
        if not 0 <= self.frobenius < G.size:
            raise InputError(f"Frobenius lift {self.frobenius} is not a group element")
        if subgroup_generated(G, (self.frobenius,) + I.elements).order != G.size:
            raise InputError("the image of the Frobenius lift does not generate G/G_0")
        if self.f_abs < 1:
            raise InputError("f_abs must be positive")

    @property
    def inertia(self) -> Subgroup:
        return self.filtration[0]

    @property
    def wild_inertia(self) -> Subgroup:
        if len(self.filtration) > 1:
            return self.filtration[1]
        return Subgroup(self.group, [self.group.id])

    def ramification_group(self, i: int) -> Subgroup:
        if i < len(self.filtration):
            return self.filtration[i]
        return Subgroup(self.group, [self.group.id])

    @property
    def is_tame(self) -> bool:
        return self.wild_inertia.is_trivial()

    @property
    def ramification_degree(self) -> int:
        return self.inertia.order

    @cached_property
    def _y_irreducible(self) -> tuple[Cyclotomic, ...]:
        return tuple(
            ONE if not is_unramified(chi, self) else _sign_power(chi) * det_char(chi).at(self.frobenius)
            for chi in char_table(self.group)
        )


def _sign_power(chi: ClassFunction) -> int:
    return -1 if int(chi.degree.to_fraction()) % 2 else 1


def local_datum(G: FiniteGroup, p: int, filtration: Sequence[Sequence[int]], frobenius: int,
                f_abs: int = 1) -> LocalExtensionData:
    """Build a datum from element lists G_0, G_1, ... (trailing trivial groups optional)."""
    subs = tuple(Subgroup(G, els) for els in filtration)
    return LocalExtensionData(G, p, subs, frobenius, f_abs)


def tame_datum(G: FiniteGroup, p: int, inertia: Sequence[int], frobenius: int, f_abs: int = 1) -> LocalExtensionData:
    return local_datum(G, p, [inertia], frobenius, f_abs)


# --- different and its square root ---------------------------------------


def different_valuation(d: LocalExtensionData) -> int:
    """Hilbert's formula: sum over i >= 0 of (|G_i| - 1)."""
    return sum(H.order - 1 for H in d.filtration)


def sqrt_inv_different(d: LocalExtensionData) -> Optional[int]:
    """Valuation n of the square root of the inverse different, if it exists."""
    v = different_valuation(d)
    return None if v % 2 else -v // 2


def is_weakly_ramified(d: LocalExtensionData) -> bool:
    return d.ramification_group(2).is_trivial()


def freeness_congruence(d: LocalExtensionData) -> bool:
    n = sqrt_inv_different(d)
    if n is None:
        raise InputError("the inverse different has no square root for this datum")
    return (n - 1) % d.wild_inertia.order == 0


# --- unramified characters -----------------------------------------------


def is_unramified(chi: ClassFunction, d: LocalExtensionData) -> bool:
    deg = chi.degree
    return all(chi.at(g) == deg for g in d.inertia.elements)


def unramified_part(chi: ClassFunction, d: LocalExtensionData) -> ClassFunction:
    table = char_table(d.group)
    coeffs = table.integral_decomposition(chi)
    kept = [c if is_unramified(mu, d) else 0 for c, mu in zip(coeffs, table)]
    return table.combine(kept)


def unramified_characteristic(phi: ClassFunction, d: LocalExtensionData) -> Cyclotomic:
    """y(F, phi), multiplicative over the integral decomposition of phi."""
    table = char_table(d.group)
    value = ONE
    for c, y in zip(table.integral_decomposition(phi), d._y_irreducible):
        if c:
            value = value * y ** c
    return value


def equivariant_y(d: LocalExtensionData) -> CentralElement:
    return CentralElement(d.group, d._y_irreducible)


def twisted_y(d: LocalExtensionData) -> CentralElement:
    """(1 - psi_2,*) applied to the equivariant unramified characteristic."""
    return twist_endo(equivariant_y(d), 1, -1, 2)


def closed_form_hypotheses(d: LocalExtensionData) -> bool:
    return d.inertia.order % 2 == 1 and (d.group.is_abelian() or d.group.size % 2 == 1)


def closed_form_group_algebra(d: LocalExtensionData) -> list[Fraction]:
    """Coordinates of (1 - e_I) + sigma^-1 e_I on the group basis."""
    G, I = d.group, d.inertia
    s_inv = G.inv[d.frobenius]
    coset = {G.mul[s_inv][h] for h in I.elements}
    w = Fraction(1, I.order)
    return [
        (1 if g == G.id else 0) - (w if g in I else 0) + (w if g in coset else 0)
        for g in range(G.size)
    ]


def closed_form_twisted_y(d: LocalExtensionData) -> CentralElement:
    if not closed_form_hypotheses(d):
        raise InputError("closed form needs |G_0| odd and G abelian or of odd order")
    return from_group_algebra(d.group, closed_form_group_algebra(d), unit=True)


def describe(d: LocalExtensionData) -> dict:
    n = sqrt_inv_different(d)
    return {
        "order": d.group.size,
        "p": d.p,
        "filtration_orders": [H.order for H in d.filtration],
        "different_valuation": different_valuation(d),
        "sqrt_inverse_different": n,
        "tame": d.is_tame,
        "weakly_ramified": is_weakly_ramified(d),
        "freeness_congruence": freeness_congruence(d) if n is not None else None,
    }

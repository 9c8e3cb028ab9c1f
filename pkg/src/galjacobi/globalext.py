"""Formal global extensions: a group G and records for its ramified places.

Each place carries its decomposition subgroup H = G_w and a local datum on H.
Archimedean places never appear.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .center import CentralElement, central_induce, twist_endo
from .chartab import ClassFunction, adams, frobenius_schur, restrict
from .cyclo import DEFAULT_PRECISION_CAP, ONE, Cyclotomic
from .errors import IndeterminateSignError, InputError, InternalConsistencyError
from .gauss import TameAbelianLocalDatum, equivariant_J2
from .groups import FiniteGroup, Subgroup
from .localext import LocalExtensionData, twisted_y, unramified_characteristic


class _Unknown:
    """Sentinel for a sign the available rules cannot decide."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNKNOWN"

    __str__ = __repr__


UNKNOWN = _Unknown()
SignValue = Union[int, _Unknown]


@dataclass(frozen=True, eq=False)
class PlaceRecord:
    label: str
    decomp: Subgroup
    local: LocalExtensionData
    tame_abelian: Optional[TameAbelianLocalDatum] = None

    def __post_init__(self):
        if self.local.group is not self.decomp.group:
            raise InputError(f"place {self.label}: local datum is not defined on the decomposition group")
        if self.tame_abelian is not None and self.tame_abelian.base is not self.local:
            raise InputError(f"place {self.label}: tame abelian realization does not match the local datum")

    @property
    def tame(self) -> bool:
        return self.local.is_tame

    @property
    def sign_rule_applies(self) -> bool:
        """Tame with odd inertia: the place where the root-number rule is available."""
        return self.tame and self.local.inertia.order % 2 == 1


@dataclass(frozen=True, eq=False)
class GlobalExtensionData:
    group: FiniteGroup
    places: tuple[PlaceRecord, ...] = field(default_factory=tuple)

    def __post_init__(self):
        seen = set()
        for rec in self.places:
            if rec.decomp.parent is not self.group:
                raise InputError(f"place {rec.label}: decomposition group is not a subgroup of G")
            if rec.label in seen:
                raise InputError(f"duplicate place label {rec.label!r}")
            seen.add(rec.label)


def global_y(data: GlobalExtensionData, chi: ClassFunction) -> Cyclotomic:
    """Product over ramified places of y(K_v, res chi)."""
    if chi.group is not data.group:
        raise InputError("character lives on a different group")
    value = ONE
    for rec in data.places:
        value = value * unramified_characteristic(restrict(chi, rec.decomp), rec.local)
    return value


def global_y_element(data: GlobalExtensionData) -> CentralElement:
    return CentralElement.from_function(data.group, lambda chi: global_y(data, chi))


def twisted_y_by_induction(data: GlobalExtensionData) -> CentralElement:
    result = CentralElement.ones(data.group)
    for rec in data.places:
        result = result * central_induce(twisted_y(rec.local), rec.decomp)
    return result


def twisted_y_direct(data: GlobalExtensionData) -> CentralElement:
    return twist_endo(global_y_element(data), 1, -1, 2)


def global_twisted_y(data: GlobalExtensionData) -> CentralElement:
    """(1 - psi_2,*)(y_{L/K}); the place-wise and global routes must agree."""
    induced = twisted_y_by_induction(data)
    direct = twisted_y_direct(data)
    if induced != direct:
        table = induced.table
        bad = next(i for i, (a, b) in enumerate(zip(induced.coeffs, direct.coeffs)) if a != b)
        raise InternalConsistencyError(
            f"twisted y routes disagree at {table.labels[bad]}: "
            f"{induced.coeffs[bad].render()} vs {direct.coeffs[bad].render()}"
        )
    return induced


def _undecided_places(data: GlobalExtensionData) -> list[str]:
    return [rec.label for rec in data.places if not rec.sign_rule_applies]


def symplectic_sign(data: GlobalExtensionData, chi: ClassFunction,
                    precision_cap: int = DEFAULT_PRECISION_CAP) -> SignValue:
    """J'_2 coefficient at an irreducible chi: +1, -1 or UNKNOWN.

    At tame places of odd inertia the tau factor has sign +1, leaving the sign
    of y(K, chi - psi_2(chi)).
    """
    if frobenius_schur(chi) != -1:
        return 1
    if _undecided_places(data):
        return UNKNOWN
    value = global_y(data, chi - adams(chi, 2))
    s = value.sign(precision_cap)
    if s == 0:
        raise InternalConsistencyError("unramified characteristic vanished")
    return s


def equivariant_symplectic_J(data: GlobalExtensionData,
                             precision_cap: int = DEFAULT_PRECISION_CAP) -> CentralElement:
    bad = _undecided_places(data)
    if bad:
        raise IndeterminateSignError(
            f"sign undecidable: places {', '.join(bad)} are wild or have even inertia order"
        )
    return CentralElement.from_function(data.group, lambda chi: symplectic_sign(data, chi, precision_cap))


def assemble_global_J2(data: GlobalExtensionData) -> CentralElement:
    """Product over places of the centrally induced local J_2."""
    result = CentralElement.ones(data.group)
    for rec in data.places:
        if rec.tame_abelian is None:
            raise InputError(f"place {rec.label} has no tame abelian realization")
        result = result * central_induce(equivariant_J2(rec.tame_abelian), rec.decomp)
    return result

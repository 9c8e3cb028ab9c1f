"""JSON descriptors for groups, local data, tame abelian data and global data.

Every descriptor is an object with a ``kind`` field.  Element indices are
0-based and always refer to the numbering of the top-level group; filtrations
and Frobenius lifts of a global place are translated into the numbering of
its decomposition group internally.

group objects::

    {"family": "quaternion", "parameters": [8]}
    {"family": "product", "factors": [<group>, <group>]}
    {"table": [[0, 1], [1, 0]], "label": "C2"}
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Union

from .errors import InputError
from .gauss import TameAbelianLocalDatum, finite_field
from .globalext import GlobalExtensionData, PlaceRecord
from .groups import FAMILIES, FiniteGroup, Subgroup, group_direct_product
from .localext import LocalExtensionData

KINDS = ("group", "local", "tame_abelian", "global")


class DescriptorError(InputError):
    """Schema violation; the message starts with the JSON path of the bad field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass(frozen=True)
class Descriptor:
    kind: str
    payload: dict

    @classmethod
    def loads(cls, text: str) -> "Descriptor":
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DescriptorError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
        return cls.from_obj(raw)

    @classmethod
    def load(cls, path: str) -> "Descriptor":
        with open(path, encoding="utf-8") as fh:
            return cls.loads(fh.read())

    @classmethod
    def from_obj(cls, raw: Any) -> "Descriptor":
        if not isinstance(raw, dict):
            raise DescriptorError("$", "descriptor must be a JSON object")
        kind = raw.get("kind")
        if kind not in KINDS:
            raise DescriptorError("$.kind", f"expected one of {', '.join(KINDS)}, got {kind!r}")
        return cls(kind, raw)

    def build(self):
        return BUILDERS[self.kind](self.payload, "$")


def _get(obj: dict, key: str, path: str, types, default=...):
    if key not in obj:
        if default is ...:
            raise DescriptorError(f"{path}.{key}", "missing field")
        return default
    value = obj[key]
    if not isinstance(value, types) or isinstance(value, bool):
        names = types.__name__ if isinstance(types, type) else "/".join(t.__name__ for t in types)
        raise DescriptorError(f"{path}.{key}", f"expected {names}, got {type(value).__name__}")
    return value


def _int_list(value, path: str, bound: int) -> list[int]:
    if not isinstance(value, list):
        raise DescriptorError(path, "expected a list of element indices")
    for i, v in enumerate(value):
        if not isinstance(v, int) or isinstance(v, bool):
            raise DescriptorError(f"{path}[{i}]", "element index must be an integer")
        if not 0 <= v < bound:
            raise DescriptorError(f"{path}[{i}]", f"element index {v} out of range 0..{bound - 1}")
    return value


def build_group(spec: Any, path: str) -> FiniteGroup:
    if not isinstance(spec, dict):
        raise DescriptorError(path, "group must be an object")
    if "table" in spec:
        table = spec["table"]
        if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
            raise DescriptorError(f"{path}.table", "expected a list of rows")
        for i, row in enumerate(table):
            _int_list(row, f"{path}.table[{i}]", len(table))
        try:
            return FiniteGroup(table, label=spec.get("label", ""))
        except InputError as exc:
            raise DescriptorError(f"{path}.table", str(exc)) from None
    family = _get(spec, "family", path, str)
    if family == "product":
        factors = _get(spec, "factors", path, list)
        if len(factors) < 2:
            raise DescriptorError(f"{path}.factors", "a product needs at least two factors")
        G = build_group(factors[0], f"{path}.factors[0]")
        for i, f in enumerate(factors[1:], 1):
            G = group_direct_product(G, build_group(f, f"{path}.factors[{i}]"))
        return G
    if family not in FAMILIES:
        raise DescriptorError(f"{path}.family", f"unknown family {family!r}; known: {', '.join(sorted(FAMILIES))}, product")
    params = _get(spec, "parameters", path, list)
    try:
        return FAMILIES[family](*params)
    except TypeError:
        raise DescriptorError(f"{path}.parameters", f"wrong number of parameters for {family}") from None
    except InputError as exc:
        raise DescriptorError(f"{path}.parameters", str(exc)) from None


def _local_on(G: FiniteGroup, H: Subgroup, spec: dict, path: str) -> LocalExtensionData:
    """Local datum on the group of H; indices in the descriptor are in G's numbering."""
    p = _get(spec, "p", path, int)
    f_abs = _get(spec, "f_abs", path, int, 1)
    frob = _get(spec, "frobenius", path, int)
    filt = _get(spec, "filtration", path, list)
    if not filt:
        raise DescriptorError(f"{path}.filtration", "at least the inertia group must be given")
    subs = []
    for i, els in enumerate(filt):
        els = _int_list(els, f"{path}.filtration[{i}]", G.size)
        outside = [g for g in els if g not in H]
        if outside:
            raise DescriptorError(f"{path}.filtration[{i}]", f"element {outside[0]} is outside the decomposition group")
        try:
            subs.append(Subgroup(H.group, [H.local_index[g] for g in els]))
        except InputError as exc:
            raise DescriptorError(f"{path}.filtration[{i}]", str(exc)) from None
    if not 0 <= frob < G.size or frob not in H:
        raise DescriptorError(f"{path}.frobenius", f"{frob} is not an element of the decomposition group")
    try:
        return LocalExtensionData(H.group, p, tuple(subs), H.local_index[frob], f_abs)
    except InputError as exc:
        raise DescriptorError(path, str(exc)) from None


def _tame_abelian(local: LocalExtensionData, H: Subgroup, spec: dict, path: str) -> TameAbelianLocalDatum:
    res = _get(spec, "residue", path, dict)
    rp = _get(res, "p", f"{path}.residue", int)
    rf = _get(res, "f", f"{path}.residue", int, local.f_abs)
    if rp != local.p:
        raise DescriptorError(f"{path}.residue.p", f"residue characteristic {rp} differs from p = {local.p}")
    try:
        k = finite_field(rp, rf)
        if "inertia_generator" in spec:
            g = _get(spec, "inertia_generator", path, int)
            if g not in H:
                raise DescriptorError(f"{path}.inertia_generator", f"{g} is outside the decomposition group")
            gen = H.local_index[g]
        else:
            I = local.inertia
            gen = next(g for g in I.elements if local.group.element_order(g) == I.order)
        return TameAbelianLocalDatum(local, k, gen)
    except DescriptorError:
        raise
    except InputError as exc:
        raise DescriptorError(path, str(exc)) from None


def build_local(spec: dict, path: str) -> LocalExtensionData:
    G = build_group(_get(spec, "group", path, dict), f"{path}.group")
    return _local_on(G, Subgroup(G, range(G.size)), spec, path)


def build_tame_abelian(spec: dict, path: str) -> TameAbelianLocalDatum:
    G = build_group(_get(spec, "group", path, dict), f"{path}.group")
    H = Subgroup(G, range(G.size))
    local = _local_on(G, H, spec, path)
    return _tame_abelian(local, H, spec, path)


def build_global(spec: dict, path: str) -> GlobalExtensionData:
    G = build_group(_get(spec, "group", path, dict), f"{path}.group")
    places = []
    for i, pl in enumerate(_get(spec, "places", path, list, [])):
        ppath = f"{path}.places[{i}]"
        if not isinstance(pl, dict):
            raise DescriptorError(ppath, "place record must be an object")
        label = str(pl.get("label", f"v{i}"))
        decomp = _int_list(_get(pl, "decomp", ppath, list), f"{ppath}.decomp", G.size)
        try:
            H = Subgroup(G, decomp)
        except InputError as exc:
            raise DescriptorError(f"{ppath}.decomp", str(exc)) from None
        lspec = _get(pl, "local", ppath, dict)
        local = _local_on(G, H, lspec, f"{ppath}.local")
        tame = None
        if "residue" in pl or "residue" in lspec:
            merged = dict(lspec)
            if "residue" in pl:
                merged["residue"] = pl["residue"]
            tame = _tame_abelian(local, H, merged, f"{ppath}.local")
        try:
            places.append(PlaceRecord(label, H, local, tame))
        except InputError as exc:
            raise DescriptorError(ppath, str(exc)) from None
    try:
        return GlobalExtensionData(G, tuple(places))
    except InputError as exc:
        raise DescriptorError(f"{path}.places", str(exc)) from None


BUILDERS = {
    "group": lambda spec, path: (build_group(spec["group"], f"{path}.group") if "group" in spec
                                 else build_group(spec, path)),
    "local": build_local,
    "tame_abelian": build_tame_abelian,
    "global": build_global,
}


def load(path_or_text: str) -> tuple[str, Union[FiniteGroup, LocalExtensionData, TameAbelianLocalDatum, GlobalExtensionData]]:
    """Parse a descriptor file (or JSON text) and build its object."""
    text = path_or_text
    if not path_or_text.lstrip().startswith("{"):
        with open(path_or_text, encoding="utf-8") as fh:
            text = fh.read()
    d = Descriptor.loads(text)
    return d.kind, d.build()

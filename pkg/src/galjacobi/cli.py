"""Command-line front end: ``galjacobi {group,local,tame,global,verify}``.

Exit codes: 0 all checks pass, 1 a check failed, 2 bad input, 3 internal
consistency failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .center import CentralElement, is_rational_equivariant
from .chartab import adams, char_table, frobenius_schur
from .cyclo import DEFAULT_PRECISION_CAP
from .descriptors import Descriptor
from .errors import GalJacobiError, IndeterminateSignError, InputError
from .gauss import TameAbelianLocalDatum, equivariant_J2, equivariant_tau, modified_tau
from .globalext import (
    GlobalExtensionData,
    assemble_global_J2,
    equivariant_symplectic_J,
    global_y_element,
    symplectic_sign,
    twisted_y_by_induction,
    twisted_y_direct,
)
from .groups import FiniteGroup
from .localext import (
    LocalExtensionData,
    closed_form_hypotheses,
    closed_form_twisted_y,
    different_valuation,
    equivariant_y,
    freeness_congruence,
    is_weakly_ramified,
    sqrt_inv_different,
    twisted_y,
)
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3
FS_TYPES = {1: "real", 0: "complex", -1: "symplectic"}


@dataclass
class Report:
    command: str
    inputs: dict
    invariants: dict = field(default_factory=dict)
    verdicts: list = field(default_factory=list)
    provenance: dict = field(default_factory=dict)

    def verdict(self, check: str, status: str, detail: str = "", gating: bool = True):
        entry = {"check": check, "status": status}
        if detail:
            entry["detail"] = detail
        if not gating:
            entry["gating"] = False
        self.verdicts.append(entry)

    @property
    def failed(self) -> bool:
        return any(v["status"] == "fail" and v.get("gating", True) for v in self.verdicts)

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "invariants": self.invariants,
            "verdicts": self.verdicts,
            "provenance": self.provenance,
        }

    def render_text(self) -> str:
        lines = [f"== {self.command} =="]
        for key, value in self.invariants.items():
            lines.extend(_text_block(key, value))
        if self.verdicts:
            lines.append("verdicts:")
            for v in self.verdicts:
                extra = f" ({v['detail']})" if "detail" in v else ""
                note = " [informational]" if not v.get("gating", True) else ""
                lines.append(f"  {v['status'].upper():7} {v['check']}{extra}{note}")
        if self.provenance:
            lines.append("provenance:")
            for key, value in self.provenance.items():
                lines.append(f"  {key}: {json.dumps(value, sort_keys=True)}")
        return "\n".join(lines)


def _text_block(key: str, value) -> list[str]:
    if isinstance(value, dict):
        out = [f"{key}:"]
        for k, v in value.items():
            out.append(f"  {k}: {v if not isinstance(v, (list, dict)) else json.dumps(v)}")
        return out
    if isinstance(value, list):
        out = [f"{key}:"]
        for item in value:
            out.append(f"  {json.dumps(item) if isinstance(item, (dict, list)) else item}")
        return out
    return [f"{key}: {value}"]


def _family(x: CentralElement) -> dict:
    return {label: c.render() for label, c in zip(x.table.labels, x.coeffs)}


# --- group -----------------------------------------------------------------


def cmd_group(G: FiniteGroup, inputs: dict) -> Report:
    rep = Report("group", inputs)
    table = char_table(G)
    cd = G.conjugacy
    rep.invariants["order"] = G.size
    rep.invariants["exponent"] = G.exponent
    rep.invariants["classes"] = [{"rep": cls[0], "size": len(cls)} for cls in cd.classes]
    rows = []
    for label, chi in zip(table.labels, table):
        fs = frobenius_schur(chi)
        rows.append({
            "label": label,
            "degree": table.degrees[table.index(chi)],
            "indicator": fs,
            "type": FS_TYPES[fs],
            "values": [v.render() for v in chi.values],
        })
    rep.invariants["characters"] = rows
    rep.invariants["symplectic"] = [r["label"] for r in rows if r["indicator"] == -1]
    adams_rows = {}
    for k in range(2, G.exponent + 1):
        adams_rows[f"psi_{k}"] = {
            label: table.integral_decomposition(adams(chi, k)) for label, chi in zip(table.labels, table)
        }
    rep.invariants["adams"] = adams_rows
    rep.verdict("character table orthogonality", "pass")
    rep.provenance = {"dixon_prime": table.dixon_prime, "character_order": "degree, then values"}
    return rep


# --- local -----------------------------------------------------------------


def _local_invariants(rep: Report, d: LocalExtensionData):
    n = sqrt_inv_different(d)
    rep.invariants["local"] = {
        "order": d.group.size,
        "p": d.p,
        "filtration_orders": [H.order for H in d.filtration],
        "frobenius": d.frobenius,
        "different_valuation": different_valuation(d),
        "sqrt_inverse_different": "absent" if n is None else n,
        "tame": d.is_tame,
        "weakly_ramified": is_weakly_ramified(d),
    }
    if n is None:
        rep.verdict("freeness congruence", "unknown", "square root of the inverse different does not exist")
    else:
        ok = freeness_congruence(d)
        rep.verdict("freeness congruence", "pass" if ok else "fail",
                    f"n = {n}, |G_1| = {d.wild_inertia.order}")
    if is_weakly_ramified(d):
        rep.verdict("weakly ramified", "pass", gating=False)
    else:
        rep.verdict("weakly ramified", "fail", "not weakly ramified: G_2 is nontrivial", gating=False)
    rep.invariants["y"] = _family(equivariant_y(d))
    ty = twisted_y(d)
    rep.invariants["twisted_y"] = _family(ty)
    if closed_form_hypotheses(d):
        ok = ty == closed_form_twisted_y(d)
        rep.verdict("twisted y equals (1 - e_I) + sigma^-1 e_I", "pass" if ok else "fail")
    else:
        rep.verdict("twisted y equals (1 - e_I) + sigma^-1 e_I", "unknown", "closed-form hypotheses do not hold")
    rep.provenance["dixon_prime"] = char_table(d.group).dixon_prime


def cmd_local(d: LocalExtensionData, inputs: dict) -> Report:
    rep = Report("local", inputs)
    _local_invariants(rep, d)
    return rep


def cmd_tame(d: TameAbelianLocalDatum, inputs: dict) -> Report:
    rep = Report("tame", inputs)
    _local_invariants(rep, d.base)
    rep.invariants["tau"] = _family(equivariant_tau(d))
    rep.invariants["modified_tau"] = _family(modified_tau(d))
    J = equivariant_J2(d)
    rep.invariants["J2"] = _family(J)
    rep.verdict("J2 is rational", "pass" if is_rational_equivariant(J) else "fail")
    rep.provenance["residue_field"] = d.residue.describe()
    rep.provenance["inertia_generator"] = d.inertia_generator
    return rep


# --- global ----------------------------------------------------------------


def cmd_global(data: GlobalExtensionData, inputs: dict, precision_cap: int) -> Report:
    rep = Report("global", inputs)
    table = char_table(data.group)
    rep.invariants["places"] = [
        {"label": r.label, "decomp_order": r.decomp.order, "p": r.local.p,
         "filtration_orders": [H.order for H in r.local.filtration], "tame": r.tame}
        for r in data.places
    ]
    rep.invariants["y"] = _family(global_y_element(data))
    induced, direct = twisted_y_by_induction(data), twisted_y_direct(data)
    rep.invariants["twisted_y"] = _family(induced)
    rep.verdict("twisted y: product of inductions equals global twist", "pass" if induced == direct else "fail")
    rep.invariants["symplectic_signs"] = {
        label: str(symplectic_sign(data, chi, precision_cap)) for label, chi in zip(table.labels, table)
    }
    try:
        J = equivariant_symplectic_J(data, precision_cap)
        rep.invariants["symplectic_J"] = _family(J)
        ok = (J * J).is_identity() and is_rational_equivariant(J)
        rep.verdict("symplectic J' squares to 1 and is rational", "pass" if ok else "fail")
    except IndeterminateSignError as exc:
        rep.verdict("symplectic J' squares to 1 and is rational", "unknown", str(exc))
    if data.places and all(r.tame_abelian is not None for r in data.places):
        J2 = assemble_global_J2(data)
        rep.invariants["J2"] = _family(J2)
        rep.verdict("assembled J2 is rational", "pass" if is_rational_equivariant(J2) else "fail")
    rep.provenance["dixon_prime"] = table.dixon_prime
    return rep


# --- verify ----------------------------------------------------------------


def cmd_verify(suite: str, max_order: Optional[int], precision_cap: int) -> Report:
    result = run_suite(suite, max_order, precision_cap)
    rep = Report("verify", {"suite": suite, **result.params})
    for c in result.checks:
        detail = f"{c.cases} cases"
        if c.failures:
            detail += f", {c.failures} failures, first: {c.witness}"
        rep.verdict(c.name, c.status, detail)
    rep.provenance = result.provenance
    return rep


# --- entry point -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--precision-cap", type=int, default=DEFAULT_PRECISION_CAP, metavar="BITS",
                        help="maximum precision for certified sign evaluation")
    parser = argparse.ArgumentParser(prog="galjacobi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [("group", "character table, indicators and Adams decompositions"),
                            ("local", "ramification invariants and unramified characteristics"),
                            ("tame", "tame abelian Gauss and Jacobi sums"),
                            ("global", "global twisted characteristics and symplectic signs")]:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--input", required=True, metavar="FILE", help="JSON descriptor ('-' for stdin)")
    p = sub.add_parser("verify", parents=[common], help="run a property suite over the generated corpus")
    p.add_argument("--suite", required=True, metavar="NAME", help=f"one of: {', '.join(SUITES)}")
    p.add_argument("--max-order", type=int, default=None, metavar="N",
                   help="group-order bound (field-size bound for the gauss and j2 suites)")
    return parser


EXPECTED_KIND = {"group": ("group",), "local": ("local", "tame_abelian"), "tame": ("tame_abelian",),
                 "global": ("global",)}


def _read_descriptor(path: str) -> Descriptor:
    if path == "-":
        return Descriptor.loads(sys.stdin.read())
    try:
        return Descriptor.load(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def run(args: argparse.Namespace) -> Report:
    if args.precision_cap < 16:
        raise InputError("--precision-cap must be at least 16 bits")
    if args.command == "verify":
        if args.suite not in SUITES:
            raise InputError(f"unknown suite {args.suite!r}; available suites: {', '.join(SUITES)}")
        return cmd_verify(args.suite, args.max_order, args.precision_cap)
    desc = _read_descriptor(args.input)
    if desc.kind not in EXPECTED_KIND[args.command]:
        raise InputError(f"$.kind: command {args.command} expects {' or '.join(EXPECTED_KIND[args.command])}, "
                         f"got {desc.kind}")
    obj = desc.build()
    if args.command == "group":
        return cmd_group(obj, desc.payload)
    if args.command == "local":
        base = obj.base if isinstance(obj, TameAbelianLocalDatum) else obj
        return cmd_local(base, desc.payload)
    if args.command == "tame":
        return cmd_tame(obj, desc.payload)
    return cmd_global(obj, desc.payload, args.precision_cap)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = run(args)
    except InputError as exc:
        _emit_error(args.format, "input", str(exc))
        return EXIT_INPUT
    except GalJacobiError as exc:
        _emit_error(args.format, "internal", f"{type(exc).__name__}: {exc}")
        return EXIT_INTERNAL
    if args.format == "structured":
        print(json.dumps(report.as_dict(), indent=2, sort_keys=False))
    else:
        print(report.render_text())
    return EXIT_FAIL if report.failed else EXIT_OK


def _emit_error(fmt: str, kind: str, message: str):
    if fmt == "structured":
        print(json.dumps({"error": kind, "message": message}, indent=2))
    else:
        print(f"error ({kind}): {message}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Input documents are UTF-8 JSON of the form::

    {"schema": "suhiggs.request", "version": 1,
     "command": "<name>", "payload": {...}}

Scalars are ``[re_num, re_den, im_num, im_den]`` arrays of decimal integer
strings.  Exit codes: 0 ok, 2 parse/schema, 3 domain, 4 property failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional

import jsonschema

from . import audit
from .cameral import (
    cameral_fiber,
    component_translates,
    quotient_report,
    real_subcover,
    su21_paper_example,
)
from .errors import (
    DomainError,
    InputError,
    NonRegularPointError,
    ParseError,
    ReductionError,
    SchemaError,
)
from .exactnum import (
    GaussianRational,
    MatrixGR,
    is_wire_scalar,
    matrix_from_wire,
    matrix_to_wire,
    scalar_from_wire,
    scalar_to_wire,
)
from .hitchin import (
    BaseFiberPoint,
    branch_type,
    char_coefficients,
    chevalley_jacobian_rank,
    odd_coefficients,
    spectral_fiber,
    upp_reduction,
)
from .lie_core import HiggsPoint, centralizer_dim_m, is_regular
from .properties import run_property_suite
from .weyl import (
    all_permutations,
    cocycle_check,
    restricted_weyl_bruteforce,
    w0,
    w0_acts_as_theta,
    weight_stabilizer_check,
)

SCHEMA_VERSION = 1
REQUEST_SCHEMA_ID = "suhiggs.request"
REPORT_SCHEMA_ID = "suhiggs.report"
COMMANDS = (
    "analyze-higgs",
    "spectral-fiber",
    "cameral-fiber",
    "degree-audit",
    "dimension-report",
    "weyl-check",
    "su21-example",
    "property-suite",
)
COCYCLE_MAX_N = 5  # all pairs of S_n; S_7 has 2.5e7 pairs

_SCALAR = {
    "type": "array",
    "minItems": 4,
    "maxItems": 4,
    "items": {"type": "string", "pattern": "^-?[0-9]+$"},
}
_MATRIX = {"type": "array", "items": {"type": "array", "items": _SCALAR}}
_POS_INT = {"type": "integer", "minimum": 1}

PAYLOAD_SCHEMAS: dict[str, dict] = {
    "analyze-higgs": {
        "type": "object",
        "required": ["p", "beta", "gamma"],
        "properties": {"p": _POS_INT, "beta": _MATRIX, "gamma": _MATRIX},
        "additionalProperties": False,
    },
    "spectral-fiber": {
        "type": "object",
        "required": ["p", "omega", "roots"],
        "properties": {
            "p": _POS_INT,
            "omega": {"type": "array", "items": _SCALAR},
            "roots": {"type": "array", "items": _SCALAR},
        },
        "additionalProperties": False,
    },
    "degree-audit": {
        "type": "object",
        "required": ["p", "g"],
        "properties": {
            "p": _POS_INT,
            "g": {"type": "integer"},
            "deg_F_minus": {"type": "integer"},
            "deg_F_plus": {"type": "integer"},
        },
        "additionalProperties": False,
    },
    "dimension-report": {
        "type": "object",
        "required": ["p", "g"],
        "properties": {"p": _POS_INT, "g": {"type": "integer"}},
        "additionalProperties": False,
    },
    "weyl-check": {
        "type": "object",
        "required": ["p"],
        "properties": {"p": _POS_INT},
        "additionalProperties": False,
    },
    "su21-example": {
        "type": "object",
        "properties": {"l": _SCALAR, "lp": _SCALAR, "sample": _SCALAR},
        "additionalProperties": False,
    },
    "property-suite": {
        "type": "object",
        "properties": {
            "seed": {"type": "integer"},
            "p_max": {"type": "integer", "minimum": 1, "maximum": 3},
            "trials": {"type": "integer", "minimum": 0},
        },
        "additionalProperties": False,
    },
}
PAYLOAD_SCHEMAS["cameral-fiber"] = PAYLOAD_SCHEMAS["spectral-fiber"]

REQUEST_SCHEMA = {
    "type": "object",
    "required": ["schema", "version", "command", "payload"],
    "properties": {
        "schema": {"const": REQUEST_SCHEMA_ID},
        "version": {"const": SCHEMA_VERSION},
        "command": {"enum": list(COMMANDS)},
        "payload": {"type": "object"},
    },
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["schema", "version", "command", "result"],
    "properties": {
        "schema": {"const": REPORT_SCHEMA_ID},
        "version": {"const": SCHEMA_VERSION},
        "command": {"enum": list(COMMANDS)},
        "result": {"type": "object"},
    },
    "additionalProperties": False,
}


# ---------------------------------------------------------------------------
# parsing


def _validate(doc: Any, schema: dict, where: str) -> None:
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        path = where + "".join(f"[{p!r}]" if isinstance(p, str) else f"[{p}]" for p in exc.absolute_path)
        raise SchemaError(f"{path}: {exc.message}") from None


def parse_request(text: str) -> tuple[str, dict]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    _validate(doc, REQUEST_SCHEMA, "$")
    cmd = doc["command"]
    _validate(doc["payload"], PAYLOAD_SCHEMAS[cmd], "$['payload']")
    return cmd, doc["payload"]


def make_request(command: str, payload: dict) -> str:
    doc = {"schema": REQUEST_SCHEMA_ID, "version": SCHEMA_VERSION, "command": command, "payload": payload}
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def higgs_from_payload(payload: dict) -> HiggsPoint:
    p = payload["p"]
    beta = matrix_from_wire(payload["beta"], "$['payload']['beta']")
    gamma = matrix_from_wire(payload["gamma"], "$['payload']['gamma']")
    if beta.shape != (p + 1, p):
        raise SchemaError(f"$['payload']['beta']: expected (p+1)x p = {p + 1}x{p}, got {beta.nrows}x{beta.ncols}")
    if gamma.shape != (p, p + 1):
        raise SchemaError(f"$['payload']['gamma']: expected p x(p+1) = {p}x{p + 1}, got {gamma.nrows}x{gamma.ncols}")
    return HiggsPoint(p, beta, gamma)


def higgs_to_payload(phi: HiggsPoint) -> dict:
    return {"p": phi.p, "beta": matrix_to_wire(phi.beta), "gamma": matrix_to_wire(phi.gamma)}


def _scalars(seq, where: str) -> list[GaussianRational]:
    return [scalar_from_wire(x, f"{where}[{k}]") for k, x in enumerate(seq)]


# ---------------------------------------------------------------------------
# report encoding: GaussianRational and MatrixGR become wire forms


def to_wire(obj: Any) -> Any:
    if isinstance(obj, GaussianRational):
        return scalar_to_wire(obj)
    if isinstance(obj, MatrixGR):
        return matrix_to_wire(obj)
    if isinstance(obj, dict):
        return {str(k): to_wire(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_wire(v) for v in obj]
    return obj


def from_wire(obj: Any, where: str = "$") -> Any:
    """Inverse of ``to_wire`` up to matrices, which come back as nested lists."""
    if is_wire_scalar(obj):
        return scalar_from_wire(obj, where)
    if isinstance(obj, dict):
        return {k: from_wire(v, f"{where}[{k!r}]") for k, v in obj.items()}
    if isinstance(obj, list):
        return [from_wire(v, f"{where}[{k}]") for k, v in enumerate(obj)]
    return obj


def emit_report(command: str, result: dict) -> str:
    doc = {"schema": REPORT_SCHEMA_ID, "version": SCHEMA_VERSION, "command": command, "result": to_wire(result)}
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def parse_report(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    _validate(doc, REPORT_SCHEMA, "$")
    return {**doc, "result": from_wire(doc["result"], "$['result']")}


# ---------------------------------------------------------------------------
# commands: each returns a plain result dict


def analyze_higgs(phi: HiggsPoint) -> dict:
    base = char_coefficients(phi)
    regular = is_regular(phi.matrix)
    out: dict = {
        "p": phi.p,
        "char_coefficients": list(base.omega),
        "odd_vanishing": not any(odd_coefficients(phi)),
        "is_regular": regular,
        "centralizer_dim": centralizer_dim_m(phi.matrix),
        "jacobian_rank": chevalley_jacobian_rank(phi),
    }
    try:
        red = upp_reduction(phi)
    except ReductionError as exc:
        out["upp_reduction"] = {"applies": False, "reason": str(exc)}
    else:
        out["upp_reduction"] = {
            "applies": True,
            "kernel": list(red.kernel.vector),
            "beta1": red.beta1,
            "gamma1": red.gamma1,
        }
        try:
            out["branch_type"] = branch_type(phi)
        except (NonRegularPointError, DomainError) as exc:
            out["branch_type"] = None
            out["branch_type_reason"] = str(exc)
    return out


def spectral_fiber_cmd(p: int, omega, roots) -> dict:
    base = BaseFiberPoint(p, tuple(omega))
    f = spectral_fiber(base, roots)
    return {
        "p": p,
        "omega": list(base.omega),
        "eigenvalues": list(f.eigenvalues),
        "support": list(f.support()),
        "zero_multiplicity": f.zero_multiplicity,
        "on_intersection": f.on_intersection,
        "components": [{"value": v, "component": c} for v, c in f.components()],
    }


def cameral_fiber_cmd(p: int, omega, roots) -> dict:
    base = BaseFiberPoint(p, tuple(omega))
    fiber = cameral_fiber(base, roots)
    rep = quotient_report(fiber)
    real = sorted(real_subcover(fiber), key=lambda q: tuple(x.sort_key() for x in q.lambdas))
    return {
        "p": p,
        "size": len(fiber),
        "real_subcover_size": len(real),
        "real_subcover": [list(q.lambdas) for q in real],
        "quotient_image": list(rep.image),
        "quotient_fiber_sizes": [rep.orbit_sizes[v] for v in rep.image],
        "fibers_are_orbits": rep.fibers_are_orbits,
        "points": [list(q.lambdas) for q in fiber.sorted_points()],
    }


def degree_audit_cmd(p: int, g: int, deg_F_minus: Optional[int] = None, deg_F_plus: Optional[int] = None) -> dict:
    ledger = audit.build_ledger(p, g, deg_F_minus, deg_F_plus)
    return ledger.to_dict()


def dimension_report_cmd(p: int, g: int) -> dict:
    r = audit.dimension_report(p, g)
    return {"p": p, "g": g, "base_dim": r.base_dim, "fiber_dim": r.fiber_dim,
            "moduli_dim": r.moduli_dim, "identity_ok": r.identity_ok}


def weyl_check_cmd(p: int) -> dict:
    rw = restricted_weyl_bruteforce(p)
    n = 2 * p + 1
    out = {
        "p": p,
        "normalizer_order": rw.normalizer_order,
        "centralizer_order": rw.centralizer_order,
        "restricted_weyl_order": rw.order,
        "matches_hyperoctahedral": rw.matches_hyperoctahedral,
        "coset_count": component_translates(p),
        "w0": str(w0(p)),
        "w0_acts_as_theta": w0_acts_as_theta(p),
        "weight_stabilizer_ok": weight_stabilizer_check(p),
    }
    if n <= COCYCLE_MAX_N:
        group = list(all_permutations(n))
        out["cocycle_pairs"] = len(group) ** 2
        out["cocycle_ok"] = all(cocycle_check(a, b) for a in group for b in group)
    return out


def su21_cmd(l=1, lp=0, sample=1) -> dict:
    r = su21_paper_example(l, lp, sample)
    return {
        "l": r.l,
        "lp": r.lp,
        "eigenvalues": list(r.eigenvalues),
        "sigma2": r.sigma2,
        "sigma3": r.sigma3,
        "displayed_sigma2": r.displayed_sigma2,
        "displayed_sigma3": r.displayed_sigma3,
        "sigma2_matches": r.sigma2_matches,
        "sigma3_matches": r.sigma3_matches,
        "degenerate_point_shared": r.degenerate_point_shared,
        "subcovers": [
            {
                "label": c.label,
                "locus": c.locus,
                "displayed_locus": c.displayed_locus,
                "displayed_locus_in_fiber": c.displayed_locus_in_fiber,
                "zero_slot": c.zero_slot,
                "omega": c.omega,
                "displayed_omega": c.displayed_omega,
                "involution": str(c.involution),
                "involution_swaps": c.involution_swaps,
            }
            for c in r.subcovers
        ],
    }


# ---------------------------------------------------------------------------
# rendering


def _human_value(v: Any) -> str:
    if isinstance(v, GaussianRational):
        return str(v)
    if isinstance(v, MatrixGR):
        return "[" + "; ".join(" ".join(str(x) for x in r) for r in v.rows) + "]"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_human_value(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_human_value(x)}" for k, x in v.items()) + "}"
    if v is None:
        return "-"
    return str(v).lower() if isinstance(v, bool) else str(v)


def _render_suite(result: dict) -> str:
    lines = [f"property-suite seed={result['seed']} p_max={result['p_max']} trials={result['trials']}"]
    width = max(len(k) for k in result["counts"])
    for name, c in result["counts"].items():
        verdict = "PASS" if not c["failed"] else "FAIL"
        lines.append(f"  {verdict}  {name.ljust(width)}  {c['passed']} passed, {c['failed']} failed")
    for name, trial, p, why in result["failures"][:20]:
        lines.append(f"  failure: {name} trial {trial} p={p}: {why}")
    if result["appendix"]:
        lines.append("discrepancy appendix (reported, not asserted)")
        for section, body in result["appendix"].items():
            lines.append(f"  {section}: {_human_value(body)}")
    lines.append("all asserted properties hold" if result["ok"] else "asserted properties FAILED")
    return "\n".join(lines) + "\n"


def render_human(command: str, result: dict) -> str:
    if command == "property-suite":
        return _render_suite(result)
    lines = [command]
    flat = dict(result)
    if "derived" in flat:
        flat.update(flat.pop("derived"))
    if "points" in flat and len(flat["points"]) > 24:
        flat["points"] = f"{len(flat['points'])} points (use --format machine to list)"
    width = max((len(k) for k in flat), default=0)
    for k, v in flat.items():
        lines.append(f"  {k.ljust(width)}  {_human_value(v)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# dispatch


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="suhiggs", description="Exact checks for SU(p+1,p) Higgs data.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--input", metavar="FILE", help="request document (JSON)")
    ap.add_argument("--seed", type=int)
    ap.add_argument("--trials", type=int)
    ap.add_argument("--p", type=int)
    ap.add_argument("--g", type=int)
    ap.add_argument("--deg-f-minus", type=int)
    ap.add_argument("--deg-f-plus", type=int)
    ap.add_argument("--format", choices=("human", "machine"), default="human")
    return ap


def _payload_from_flags(cmd: str, args: argparse.Namespace) -> dict:
    flags = {
        "p": args.p,
        "g": args.g,
        "deg_F_minus": args.deg_f_minus,
        "deg_F_plus": args.deg_f_plus,
        "seed": args.seed,
        "trials": args.trials,
    }
    if cmd == "property-suite":
        flags["p_max"] = flags.pop("p")
    allowed = PAYLOAD_SCHEMAS[cmd]["properties"]
    payload = {k: v for k, v in flags.items() if v is not None and k in allowed}
    _validate(payload, PAYLOAD_SCHEMAS[cmd], "flags")
    return payload


def execute(cmd: str, payload: dict) -> tuple[dict, int]:
    if cmd == "analyze-higgs":
        return analyze_higgs(higgs_from_payload(payload)), 0
    if cmd in ("spectral-fiber", "cameral-fiber"):
        omega = _scalars(payload["omega"], "$['payload']['omega']")
        roots = _scalars(payload["roots"], "$['payload']['roots']")
        fn = spectral_fiber_cmd if cmd == "spectral-fiber" else cameral_fiber_cmd
        return fn(payload["p"], omega, roots), 0
    if cmd == "degree-audit":
        return degree_audit_cmd(payload["p"], payload["g"], payload.get("deg_F_minus"), payload.get("deg_F_plus")), 0
    if cmd == "dimension-report":
        return dimension_report_cmd(payload["p"], payload["g"]), 0
    if cmd == "weyl-check":
        return weyl_check_cmd(payload["p"]), 0
    if cmd == "su21-example":
        kw = {k: scalar_from_wire(v, f"$['payload'][{k!r}]") for k, v in payload.items()}
        return su21_cmd(**kw), 0
    if cmd == "property-suite":
        s = run_property_suite(payload.get("seed", 0), payload.get("p_max", 2), payload.get("trials", 50))
        return s.to_dict(), 0 if s.ok else 4
    raise SchemaError(f"unknown command {cmd!r}")


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.input:
            try:
                with open(args.input, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise ParseError(f"cannot read {args.input}: {exc.strerror}") from None
            cmd, payload = parse_request(text)
            if cmd != args.command:
                raise SchemaError(f"$['command']: document is for {cmd!r}, not {args.command!r}")
        else:
            cmd = args.command
            if cmd in ("analyze-higgs", "spectral-fiber", "cameral-fiber"):
                raise SchemaError(f"{cmd} needs --input")
            payload = _payload_from_flags(cmd, args)
        result, code = execute(cmd, payload)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if args.format == "machine":
        sys.stdout.write(emit_report(cmd, result))
    else:
        sys.stdout.write(render_human(cmd, result))
    return code


if __name__ == "__main__":
    sys.exit(main())

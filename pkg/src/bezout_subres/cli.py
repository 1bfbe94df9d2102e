"""Command-line front end.

Coefficient vectors are always ascending by basis index: ``[a0, a1, ...]``
means ``a0*omega_0 + a1*omega_1 + ...``.  Rationals travel as strings
(``"3"``, ``"-1/2"``); floats are rejected.  See ``docs/FORMAT.md``.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .basis import (
    GeneralBasis,
    PolyInBasis,
    from_power,
    make_custom_basis,
    make_newton_basis,
    make_power_basis,
)
from .bezout import bezout_matrix_general
from .errors import DegreeError, ParseError, SubresError
from .poly import as_rational, format_poly, format_rational
from .subres import bezout_subresultant, gcd_via_subresultants, subresultant_chain

COMMANDS = ("matrix", "subres", "chain", "gcd", "convert")


@dataclass(frozen=True)
class JobSpec:
    command: str
    basis: GeneralBasis
    basis_doc: dict
    f: tuple[Fraction, ...]
    g: tuple[Fraction, ...] | None
    k: int | None = None
    monic: bool = False
    target: GeneralBasis | None = None
    target_doc: dict | None = None


def _rationals(values: Any, what: str) -> tuple[Fraction, ...]:
    if not isinstance(values, list):
        raise ParseError(f"{what}: expected a list of rational strings")
    out = []
    for i, v in enumerate(values):
        if isinstance(v, float):
            raise ParseError(f"{what}[{i}]: floats are not accepted, use a 'p/q' string")
        try:
            out.append(as_rational(v))
        except ParseError as exc:
            raise ParseError(f"{what}[{i}]: {exc}") from None
    return tuple(out)


def _degree(coeffs: Sequence[Fraction]) -> int:
    d = len(coeffs) - 1
    while d >= 0 and coeffs[d] == 0:
        d -= 1
    return d


def parse_basis(doc: Any, min_size: int = 1) -> tuple[GeneralBasis, dict]:
    """Build a basis from its document form; returns the basis and a canonical doc."""
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ParseError("basis: expected an object with a 'kind' field")
    kind = doc["kind"]
    if kind == "power":
        size = doc.get("size", max(min_size, 1))
        if isinstance(size, bool) or not isinstance(size, int):
            raise ParseError("basis.size: expected an integer")
        basis = make_power_basis(size)
        canon = {"kind": "power", "size": size}
    elif kind == "newton":
        nodes = _rationals(doc.get("nodes"), "basis.nodes")
        basis = make_newton_basis(nodes)
        canon = {"kind": "newton", "nodes": [format_rational(v) for v in nodes]}
    elif kind == "custom":
        raw = doc.get("omegas")
        if not isinstance(raw, list):
            raise ParseError("basis.omegas: expected a list of coefficient lists")
        omegas = [_rationals(w, f"basis.omegas[{i}]") for i, w in enumerate(raw)]
        basis = make_custom_basis(omegas)
        canon = {
            "kind": "custom",
            "omegas": [[format_rational(c) for c in w.coeffs] for w in basis.omegas],
        }
    else:
        raise ParseError(f"basis.kind: unknown kind {kind!r}")
    return basis, canon


def parse_basis_spec(text: str) -> dict:
    """``power:3``, ``newton:1,0,2`` or ``custom:1;-2,1;0,-2,1`` to a basis doc."""
    kind, _, rest = text.partition(":")
    kind = kind.strip()
    if kind == "power":
        if not rest:
            return {"kind": "power"}
        try:
            return {"kind": "power", "size": int(rest)}
        except ValueError:
            raise ParseError(f"bad power basis size: {rest!r}") from None
    if kind == "newton":
        return {"kind": "newton", "nodes": _split(rest)}
    if kind == "custom":
        return {"kind": "custom", "omegas": [_split(w) for w in rest.split(";")]}
    raise ParseError(f"unknown basis spec {text!r}")


def _split(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def parse_job(doc: dict) -> JobSpec:
    if not isinstance(doc, dict):
        raise ParseError("job document must be an object")
    command = doc.get("command")
    if command not in COMMANDS:
        raise ParseError(f"command: expected one of {', '.join(COMMANDS)}, got {command!r}")
    if "f" not in doc:
        raise ParseError("missing field 'f'")
    f = _rationals(doc["f"], "f")
    g = _rationals(doc["g"], "g") if doc.get("g") is not None else None
    if command != "convert" and g is None:
        raise ParseError("missing field 'g'")
    deg_f = _degree(f)
    deg_g = _degree(g) if g is not None else -1
    basis, basis_doc = parse_basis(doc.get("basis", {"kind": "power"}), max(deg_f, deg_g, 1))
    if max(deg_f, deg_g) > basis.size:
        raise DegreeError(
            f"basis size {basis.size} is smaller than max(deg f, deg g) = {max(deg_f, deg_g)}"
        )
    k = None
    if command != "convert":
        if deg_g < 0:
            raise DegreeError("g is the zero polynomial")
        if deg_f <= deg_g:
            raise DegreeError(f"need deg f > deg g, got {deg_f} and {deg_g}")
    if command == "subres":
        k = doc.get("k")
        if isinstance(k, bool) or not isinstance(k, int):
            raise ParseError("subres needs an integer field 'k'")
        if not 0 <= k <= deg_g:
            raise DegreeError(f"k must be in 0..{deg_g}, got {k}")
    target = target_doc = None
    if command == "convert":
        if "to" not in doc:
            raise ParseError("convert needs a target basis in field 'to'")
        target, target_doc = parse_basis(doc["to"], max(deg_f, deg_g, 1))
    monic = doc.get("monic", False)
    if not isinstance(monic, bool):
        raise ParseError("monic: expected true or false")
    return JobSpec(command, basis, basis_doc, f, g, k, monic, target, target_doc)


def _strs(values: Sequence[Fraction]) -> list[str]:
    return [format_rational(v) for v in values]


def run_job(job: JobSpec) -> dict:
    out: dict[str, Any] = {
        "command": job.command,
        "basis": job.basis_doc,
        "f": _strs(job.f),
    }
    if job.g is not None:
        out["g"] = _strs(job.g)
    F = PolyInBasis(job.basis, job.f)
    G = PolyInBasis(job.basis, job.g) if job.g is not None else None

    if job.command == "matrix":
        B = bezout_matrix_general(F, G)
        out["result"] = [_strs(row) for row in B.entries]
    elif job.command == "subres":
        out["k"] = job.k
        S = bezout_subresultant(F, G, job.k)
        out["result"] = _strs(S.coeffs)
        out["power_form"] = format_poly(S.to_power())
    elif job.command == "chain":
        chain = subresultant_chain(F, G)
        out["result"] = [_strs(S.coeffs) for S in chain.polys]
        out["principals"] = _strs(chain.principals)
        out["power_form"] = [format_poly(S.to_power()) for S in chain.polys]
    elif job.command == "gcd":
        out["monic"] = job.monic
        k, S = gcd_via_subresultants(F, G, monic=job.monic)
        monic_gcd = S.to_power().monic()
        out["k"] = k
        out["result"] = _strs(S.coeffs)
        out["power_form"] = format_poly(S.to_power())
        out["gcd"] = _strs(from_power(monic_gcd, job.basis).coeffs)
        out["gcd_power_form"] = format_poly(monic_gcd)
    elif job.command == "convert":
        out["to"] = job.target_doc
        result = {"f": _strs(from_power(F.to_power(), job.target).coeffs)}
        power = {"f": format_poly(F.to_power())}
        if G is not None:
            result["g"] = _strs(from_power(G.to_power(), job.target).coeffs)
            power["g"] = format_poly(G.to_power())
        out["result"] = result
        out["power_form"] = power
    return out


def render_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def render_text(doc: dict) -> str:
    lines = [f"command: {doc['command']}"]
    cmd = doc["command"]
    res = doc["result"]
    if cmd == "matrix":
        width = max(len(v) for row in res for v in row)
        lines += ["  ".join(v.rjust(width) for v in row) for row in res]
    elif cmd == "subres":
        lines.append(f"S_{doc['k']} basis coefficients (ascending): [{', '.join(res)}]")
        lines.append(f"S_{doc['k']} = {doc['power_form']}")
    elif cmd == "chain":
        for k, (cs, pf) in enumerate(zip(res, doc["power_form"])):
            lines.append(f"S_{k}: [{', '.join(cs)}]  =  {pf}")
        lines.append(f"principals: [{', '.join(doc['principals'])}]")
    elif cmd == "gcd":
        lines.append(f"deg gcd = {doc['k']}")
        lines.append(f"S_{doc['k']} = {doc['power_form']}  [{', '.join(res)}]")
        lines.append(f"monic gcd = {doc['gcd_power_form']}  [{', '.join(doc['gcd'])}]")
    elif cmd == "convert":
        for name in sorted(res):
            lines.append(f"{name}: [{', '.join(res[name])}]  =  {doc['power_form'][name]}")
    return "\n".join(lines) + "\n"


def _global_options(defaults: bool) -> argparse.ArgumentParser:
    # Attached to the root parser and every subcommand, so global flags may be
    # given on either side of the subcommand name.
    kw = {} if defaults else {"default": argparse.SUPPRESS}
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--basis", help="power[:S] | newton:l_s,...,l_1 | custom:w0;w1;...", **kw)
    parent.add_argument(
        "--f", help="coefficients of F, ascending, comma separated (use --f=-1,2 "
        "when the first one is negative)", **kw)
    parent.add_argument("--g", help="coefficients of G, ascending, comma separated", **kw)
    parent.add_argument("--input", help="JSON job document (flags override its fields)", **kw)
    parent.add_argument("--format", choices=("text", "json"),
                        **({"default": "text"} if defaults else kw))
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bezout-subres",
        description="Bezout subresultants of polynomials given in a general basis.",
        parents=[_global_options(True)],
    )
    common = [_global_options(False)]
    sub = parser.add_subparsers(dest="command")
    sub.add_parser("matrix", parents=common, help="Bezout matrix in the job basis")
    p = sub.add_parser("subres", parents=common, help="k-th subresultant polynomial")
    p.add_argument("--k", type=int, required=True)
    sub.add_parser("chain", parents=common, help="all subresultants S_0..S_m")
    p = sub.add_parser("gcd", parents=common,
                       help="gcd degree and S_k via principal subresultants")
    p.add_argument("--monic", action="store_true")
    p = sub.add_parser("convert", parents=common, help="re-express f (and g) in another basis")
    p.add_argument("--to", required=True, help="target basis spec")
    return parser


def _job_document(args: argparse.Namespace) -> dict:
    doc: dict[str, Any] = {}
    if args.input:
        try:
            with open(args.input) as fh:
                doc = json.load(fh, parse_float=_reject_float)
        except OSError as exc:
            raise ParseError(f"cannot read {args.input}: {exc.strerror}") from None
        except json.JSONDecodeError as exc:
            raise ParseError(f"{args.input}: invalid JSON ({exc.msg})") from None
    if args.basis:
        doc["basis"] = parse_basis_spec(args.basis)
    if args.f is not None:
        doc["f"] = _split(args.f)
    if args.g is not None:
        doc["g"] = _split(args.g)
    if args.command:
        doc["command"] = args.command
        if args.command == "subres":
            doc["k"] = args.k
        elif args.command == "gcd":
            doc["monic"] = args.monic
        elif args.command == "convert":
            doc["to"] = parse_basis_spec(args.to)
    return doc


def _reject_float(text: str):
    raise ParseError(f"floats are not accepted: {text}")


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        job = parse_job(_job_document(args))
        doc = run_job(job)
    except SubresError as exc:
        err = {"error": {"code": exc.code, "message": str(exc)}}
        if args.format == "json":
            sys.stdout.write(render_json(err))
        else:
            sys.stderr.write(f"error [{exc.code}]: {exc}\n")
        return 1
    sys.stdout.write(render_json(doc) if args.format == "json" else render_text(doc))
    return 0


if __name__ == "__main__":
    sys.exit(main())

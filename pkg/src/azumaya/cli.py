"""Command-line client for the verdict service.

All four query commands build the same request models the HTTP API takes
and dispatch them either in-process (default) or to a running server via
``--server``.  Exact scalars use ``a/b`` syntax; matrices use row-semicolon
syntax (``0,1;1,0``) or ``@file.json``; decimals are rejected by parsing,
never silently rounded.

Exit codes: 0 positive verdict, 1 negative verdict, 2 input error,
3 internal disagreement between routes (always a bug, never mathematics).
"""

from __future__ import annotations

import argparse
import json
import sys

from .documents import DocumentError, load_document
from .reports import (
    EnCheckRequest,
    SweepReport,
    SweepRequest,
    TableReport,
    TableRequest,
    VerdictReport,
    VerifyRequest,
    exit_code,
)
from .service import run_en_check, run_sweep, run_table, run_verify


class InputError(ValueError):
    pass


def _parse_matrix(text: str) -> list[list[str]]:
    text = text.strip()
    if text.startswith("@"):
        with open(text[1:]) as fh:
            data = json.load(fh)
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise InputError(f"{text[1:]}: expected a JSON list of rows")
        return [[str(x) for x in row] for row in data]
    return [
        [entry.strip() for entry in row.split(",")]
        for row in text.split(";")
        if row.strip()
    ]


def _parse_vector(text: str) -> list[str]:
    text = text.strip()
    if text.startswith("@"):
        with open(text[1:]) as fh:
            data = json.load(fh)
        if not isinstance(data, list):
            raise InputError(f"{text[1:]}: expected a JSON list")
        return [str(x) for x in data]
    return [entry.strip() for entry in text.split(",") if entry.strip()]


def _en_request_args(parser: argparse.ArgumentParser):
    parser.add_argument("--n", type=int, required=True, help="number of skew-primitive generators")
    parser.add_argument("--a", required=True, help="braiding matrix A: '0,1;1,0' or @file.json")
    parser.add_argument("--alpha", default="1", help="invertible cocycle scalar (exact, e.g. -3/2)")
    parser.add_argument("--gamma", default=None, help="cocycle vector (default zeros)")
    parser.add_argument("--lam", default=None, help="lower-triangular cocycle matrix (default zeros)")
    parser.add_argument("--field", default="rational", help="rational | prime:p")


def _common_args(parser: argparse.ArgumentParser):
    parser.add_argument("--json", action="store_true", help="emit the full JSON report")
    parser.add_argument("--server", default=None, help="dispatch to a running service, e.g. http://localhost:8000")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="azumaya",
        description="Exact Azumaya verdicts for cleft extensions of Hopf algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("en-check", help="Azumaya verdict at one parameter point, by several routes")
    _en_request_args(p)
    p.add_argument("--routes", default="theta,fg,det", help="subset of theta,fg,det")
    p.add_argument("--structural-checks", action="store_true",
                   help="also run the exhaustive structural verifications")
    _common_args(p)

    p = sub.add_parser("verify", help="run axiom/identity suites on a structure-constant document")
    p.add_argument("document", help="path to a JSON document")
    p.add_argument("--checks", default=None,
                   help="subset of hopf,cocycle,rform,comodule,integrals,twisted-antipode")
    _common_args(p)

    p = sub.add_parser("table", help="twisted braiding values on generators vs closed forms")
    _en_request_args(p)
    _common_args(p)

    p = sub.add_parser("sweep", help="seeded random parameter sweep with cross-route consistency")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--points", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--low", type=int, default=-2)
    p.add_argument("--high", type=int, default=2)
    p.add_argument("--alphas", default="1,2", help="comma-separated invertible scalars")
    p.add_argument("--routes", default="theta,fg,det")
    p.add_argument("--field", default="rational")
    _common_args(p)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return parser


_PATHS = {
    "en-check": ("en-check", VerdictReport),
    "verify": ("verify", VerdictReport),
    "table": ("table", TableReport),
    "sweep": ("sweep", SweepReport),
}

_LOCAL = {
    "en-check": run_en_check,
    "verify": run_verify,
    "table": run_table,
    "sweep": run_sweep,
}


def _dispatch(command: str, request, server: str | None, transport=None):
    if server is None:
        return _LOCAL[command](request)
    import httpx

    path, model_cls = _PATHS[command]
    with httpx.Client(base_url=server, transport=transport, timeout=600.0) as client:
        resp = client.post(f"/v1/{path}", json=request.model_dump())
    if resp.status_code not in (200, 400):
        raise InputError(f"server returned HTTP {resp.status_code}: {resp.text}")
    return model_cls.model_validate(resp.json())


def _render_verdict(report: VerdictReport) -> str:
    lines = []
    if report.error is not None:
        lines.append(f"error: {report.error}")
        return "\n".join(lines)
    for route in report.routes:
        dets = ", ".join(f"{k} = {v}" for k, v in route.determinants.items())
        word = "Azumaya" if route.azumaya else "not Azumaya"
        lines.append(f"route {route.route:5s}: {word}  ({dets})")
    for check in report.checks:
        mark = "PASS" if check.passed else "FAIL"
        suffix = f"  [{check.witness}]" if check.witness else ""
        lines.append(f"check [{mark}] {check.name}{suffix}")
    if not report.consistent:
        lines.append("INTERNAL DISAGREEMENT between routes; this is a bug, not mathematics")
    elif report.command == "en-check":
        lines.append(f"verdict: {'Azumaya' if report.azumaya else 'not Azumaya'}")
    else:
        failed = sum(1 for c in report.checks if not c.passed)
        lines.append(
            f"verdict: {len(report.checks) - failed}/{len(report.checks)} checks passed"
        )
    return "\n".join(lines)


def _render_table(report: TableReport) -> str:
    if report.error is not None:
        return f"error: {report.error}"
    lines = [f"{'family':12s} {'pair':16s} {'computed':>12s} {'expected':>12s}  ok"]
    for e in report.entries:
        pair = f"{e.left}|{e.right}"
        lines.append(
            f"{e.family:12s} {pair:16s} {e.computed:>12s} {e.expected:>12s}  "
            f"{'yes' if e.match else 'NO'}"
        )
    lines.append("all families match" if report.all_match else "MISMATCH against closed forms")
    return "\n".join(lines)


def _render_sweep(report: SweepReport) -> str:
    if report.error is not None:
        return f"error: {report.error}"
    lines = [
        f"{len(report.points)} points, {report.azumaya_count} Azumaya, "
        f"{len(report.disagreements)} route disagreements"
    ]
    for idx in report.disagreements:
        lines.append(f"  DISAGREEMENT at point {idx}: {report.points[idx].determinants}")
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "serve":
        import uvicorn

        uvicorn.run("azumaya.api:app", host=args.host, port=args.port)
        return 0

    try:
        if args.command == "en-check":
            request = EnCheckRequest(
                n=args.n,
                field=args.field,
                a=_parse_matrix(args.a),
                alpha=args.alpha,
                gamma=_parse_vector(args.gamma) if args.gamma is not None else None,
                lam=_parse_matrix(args.lam) if args.lam is not None else None,
                routes=[r.strip() for r in args.routes.split(",") if r.strip()],
                structural_checks=args.structural_checks,
            )
        elif args.command == "verify":
            document = load_document(args.document)
            request = VerifyRequest(
                document=document,
                checks=(
                    [c.strip() for c in args.checks.split(",") if c.strip()]
                    if args.checks is not None
                    else None
                ),
            )
        elif args.command == "table":
            request = TableRequest(
                n=args.n,
                field=args.field,
                a=_parse_matrix(args.a),
                alpha=args.alpha,
                gamma=_parse_vector(args.gamma) if args.gamma is not None else None,
                lam=_parse_matrix(args.lam) if args.lam is not None else None,
            )
        else:
            request = SweepRequest(
                n=args.n,
                field=args.field,
                points=args.points,
                seed=args.seed,
                low=args.low,
                high=args.high,
                alphas=[a.strip() for a in args.alphas.split(",") if a.strip()],
                routes=[r.strip() for r in args.routes.split(",") if r.strip()],
            )
    except (InputError, DocumentError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pydantic validation of malformed flags
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        report = _dispatch(args.command, request, args.server)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.json:
        print(report.model_dump_json(indent=2))
    elif isinstance(report, VerdictReport):
        print(_render_verdict(report))
    elif isinstance(report, TableReport):
        print(_render_table(report))
    else:
        print(_render_sweep(report))
    return exit_code(report)


if __name__ == "__main__":
    sys.exit(main())

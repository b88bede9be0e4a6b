"""Command-line front end.

Exit codes: 0 success / match / all checks pass, 1 mismatch or failed
check, 2 invalid arguments.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .enumeration import DEFAULT_CAP, CapExceeded
from .field import FieldError, factor_prime_power
from .graphs import DENSE_CAP, export_dot, export_edge_list
from .qcount import count_disjoint, count_intersecting, cover_count, gaussian_binomial
from .spectra import (
    HypothesisViolation,
    build,
    closed_form,
    cluster,
    cluster_and_match,
    numeric_spectrum,
)
from .verify import verify_instance

CAP_ENV = "GRASSMANN_SPECTRA_CAP"
DENSE_CAP_ENV = "GRASSMANN_SPECTRA_DENSE_CAP"


class UsageError(Exception):
    pass


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name}={raw!r} is not an integer") from None


def _add_instance_args(p: argparse.ArgumentParser, family: bool = True) -> None:
    if family:
        p.add_argument("--family", choices=["grassmann", "inclusion"], default="inclusion")
    p.add_argument("--q", type=int, required=True, help="field order, a prime power")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cap", type=int, default=None, help=f"enumeration cap (env {CAP_ENV})")
    p.add_argument("--dense-cap", type=int, default=None, help=f"dense matrix vertex cap (env {DENSE_CAP_ENV})")


def _add_tol_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=1e-12, help="Jacobi relative off-diagonal tolerance")
    p.add_argument("--cluster-tol", type=float, default=1e-6)
    p.add_argument("--match-tol", type=float, default=1e-8)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grassmann-spectra",
        description="Grassmann graphs G(q,n,k), inclusion graphs S(q,n,k) and their spectra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="closed-form and/or numeric spectrum")
    _add_instance_args(sp)
    sp.add_argument("--method", choices=["closed", "numeric", "both"], default="closed")
    sp.add_argument("--format", choices=["json", "csv", "text"], default="text")
    sp.add_argument("--out", default=None, help="output file (default stdout)")
    _add_tol_args(sp)

    vp = sub.add_parser("verify", help="run every check for S(q,n,k)")
    _add_instance_args(vp, family=False)
    _add_tol_args(vp)

    cp = sub.add_parser("count", help="exact subspace counts")
    csub = cp.add_subparsers(dest="kind", required=True)
    for name, args, doc in [
        ("gauss", ["n", "k", "q"], "number of k-subspaces of GF(q)^n"),
        ("disjoint", ["n", "j", "i", "q"], "i-spaces meeting a fixed j-space trivially"),
        ("meet", ["n", "j", "i", "m", "q"], "i-spaces meeting a fixed j-space in an m-space"),
        ("cover", ["n", "k", "q"], "(k+1)-spaces containing a fixed k-space"),
    ]:
        c = csub.add_parser(name, help=doc)
        for a in args:
            c.add_argument(a, type=int)

    ep = sub.add_parser("export", help="write the graph as an edge list or DOT")
    _add_instance_args(ep)
    ep.add_argument("--format", choices=["edges", "dot"], default="edges")
    ep.add_argument("--out", required=True, help="output file, '-' for stdout")
    return parser


def _caps(args) -> tuple[int, int]:
    cap = args.cap if args.cap is not None else _env_int(CAP_ENV, DEFAULT_CAP)
    dense = args.dense_cap if args.dense_cap is not None else _env_int(DENSE_CAP_ENV, DENSE_CAP)
    return cap, dense


def _check_instance(args) -> None:
    try:
        factor_prime_power(args.q)
    except FieldError as exc:
        raise UsageError(str(exc)) from None
    if not 0 < args.k < args.n:
        raise UsageError(f"need 0 < k < n, got n={args.n}, k={args.k}")


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _numeric_clusters(values: list[float], cluster_tol: float) -> list[tuple[float, int]]:
    return [(sum(g) / len(g), len(g)) for g in cluster(values, cluster_tol)]


def _format_numeric(args, clusters: list[tuple[float, int]]) -> str:
    if args.format == "json":
        return json.dumps({
            "family": args.family, "q": args.q, "n": args.n, "k": args.k,
            "numeric": [{"approx": v, "multiplicity": m} for v, m in clusters],
        }, indent=2)
    if args.format == "csv":
        return "approx,multiplicity\n" + "".join(f"{v!r},{m}\n" for v, m in clusters)
    return "numeric clusters\n" + "".join(f"  {v:>+.12f}  x {m}\n" for v, m in clusters)


def cmd_spectrum(args) -> int:
    _check_instance(args)
    cap, dense_cap = _caps(args)
    table = None
    if args.method in ("closed", "both"):
        table = closed_form(args.family, args.q, args.n, args.k)
    if args.method == "closed":
        text = {"json": table.to_json() + "\n", "csv": table.to_csv(), "text": table.to_text()}[args.format]
        _write(text, args.out)
        return 0

    g = build(args.family, args.q, args.n, args.k, cap)
    values = numeric_spectrum(g.dense(dense_cap), tol=args.tol)
    if args.method == "numeric":
        _write(_format_numeric(args, _numeric_clusters(values, args.cluster_tol)), args.out)
        return 0

    report = cluster_and_match(values, table, args.cluster_tol, args.match_tol)
    if args.format == "json":
        text = json.dumps({"spectrum": table.to_dict(), "match": report.to_dict()}, indent=2) + "\n"
    elif args.format == "csv":
        text = table.to_csv() + "\n" + f"match,{'ok' if report.ok else 'mismatch'}\n"
    else:
        text = table.to_text() + str(report) + "\n"
    _write(text, args.out)
    return 0 if report.ok else 1


def cmd_verify(args) -> int:
    args.family = "inclusion"
    _check_instance(args)
    cap, dense_cap = _caps(args)
    print(f"verify S({args.q},{args.n},{args.k})")
    checks = verify_instance(
        args.q, args.n, args.k, cap=cap, dense_cap=dense_cap, tol=args.tol,
        cluster_tol=args.cluster_tol, match_tol=args.match_tol,
        on_check=lambda c: print(c, flush=True),
    )
    failed = sum(not c.ok for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return 0 if failed == 0 else 1


def cmd_count(args) -> int:
    try:
        if args.kind == "gauss":
            value = gaussian_binomial(args.n, args.k, args.q)
        elif args.kind == "disjoint":
            value = count_disjoint(args.n, args.j, args.i, args.q)
        elif args.kind == "meet":
            value = count_intersecting(args.n, args.j, args.i, args.m, args.q)
        else:
            value = cover_count(args.n, args.k, args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(value)
    return 0


def cmd_export(args) -> int:
    if not args.out:
        raise UsageError("--out must not be empty")
    _check_instance(args)
    cap, _ = _caps(args)
    g = build(args.family, args.q, args.n, args.k, cap)
    _write(export_dot(g) if args.format == "dot" else export_edge_list(g), args.out)
    return 0


COMMANDS = {"spectrum": cmd_spectrum, "verify": cmd_verify, "count": cmd_count, "export": cmd_export}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return COMMANDS[args.command](args)
    except (UsageError, HypothesisViolation, FieldError, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

"""Command line interface: ``socs solve | generate | polygon | census``.

Exit codes: 0 ok, 2 usage, 3 invalid input triple, 4 polygon fails
validation, 5 census self-test failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from .census import EXPECTED_CANDIDATES, EXPECTED_CONVEX, inward_bits, run_census
from .core import SolutionTriple, classify_parameterized, pyramidal
from .geometry import construct_chainsaw, construct_generic, exact_radius_sq, validate
from .pell import generate, pell_context
from .search import enumerate_up_to, solve_fixed_length
from .svg import render_svg

SCHEMA_VERSION = "1"

EXIT_USAGE = 2
EXIT_BAD_TRIPLE = 3
EXIT_INVALID_POLYGON = 4
EXIT_CENSUS = 5

SOLUTION_COLUMNS = ["a", "b", "c", "N", "ell", "m", "k"]


def diagnose_triple(a: int, b: int, c: int) -> Optional[str]:
    """Name the first failed check, or None if ``(a, b, c)`` is a solution."""
    if not 0 < a + 1 < b < c:
        return f"ordering 0 < a+1 < b < c fails for ({a}, {b}, {c})"
    lhs, rhs = pyramidal(a) + pyramidal(c), 2 * pyramidal(b)
    if lhs != rhs:
        return f"pyramidal identity P_a + P_c = 2 P_b fails for ({a}, {b}, {c}): {lhs} != {rhs}"
    return None


def solution_row(t: SolutionTriple) -> dict:
    k = classify_parameterized(t)
    return {
        "a": str(t.a), "b": str(t.b), "c": str(t.c), "N": str(t.N),
        "ell": str(t.b - t.a), "m": str(t.c - t.b), "k": "" if k is None else str(k),
    }


def envelope(command: str, payload) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, "payload": payload}


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def dump_csv(columns: Sequence[str], rows: Sequence[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _emit(text: str, dest: Optional[str]) -> None:
    if dest:
        with open(dest, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _triple_or_exit(a: int, b: int, c: int) -> SolutionTriple:
    problem = diagnose_triple(a, b, c)
    if problem:
        print(f"error: {problem}", file=sys.stderr)
        raise SystemExit(EXIT_BAD_TRIPLE)
    return SolutionTriple(a, b, c)


def cmd_solve(args) -> int:
    if args.n is not None:
        if args.n < 2:
            args.parser.error("--n must be >= 2")
        sols = solve_fixed_length(args.n)
    else:
        if args.max_n < 1:
            args.parser.error("--max-n must be positive")
        sols = enumerate_up_to(args.max_n, workers=args.workers) if args.max_n >= 2 else []
    if args.non_parameterized:
        sols = [t for t in sols if classify_parameterized(t) is None]
    rows = [solution_row(t) for t in sols]
    if args.format == "csv":
        _emit(dump_csv(SOLUTION_COLUMNS, rows), args.output)
    else:
        _emit(dump_json(envelope("solve", {"count": len(rows), "solutions": rows})), args.output)
    return 0


def cmd_generate(args) -> int:
    base = _triple_or_exit(args.a, args.b, args.c)
    ctx = pell_context(base)
    orbit = generate(base, 1, args.count, ctx)
    rows = [
        {"n": str(g.n), "a": str(g.a), "b": str(g.b), "c": str(g.c), "valid": g.valid,
         "parity": "odd" if (g.c - g.a) % 2 else "even"}
        for g in orbit
    ]
    if args.format == "csv":
        _emit(dump_csv(["n", "a", "b", "c", "valid", "parity"], rows), args.output)
    else:
        payload = {
            "base": [str(x) for x in base.as_tuple()],
            "context": {
                "A": str(ctx.A), "B": str(ctx.B), "u0": str(ctx.u0), "v0": str(ctx.v0),
                "p": str(ctx.unit.p), "q": str(ctx.unit.q), "period_length": ctx.period_length,
            },
            "orbit": rows,
        }
        _emit(dump_json(envelope("generate", payload)), args.output)
    return 0


def _parse_bits(spec: str, t: SolutionTriple, parser) -> tuple[bool, ...]:
    if spec == "inward":
        return inward_bits(t)
    if set(spec) - {"0", "1"} or len(spec) != t.N - 2:
        parser.error(f"--bits needs {t.N - 2} characters of 0/1 (or 'inward')")
    return tuple(ch == "1" for ch in spec)


def cmd_polygon(args) -> int:
    t = _triple_or_exit(args.a, args.b, args.c)
    if args.mode == "chainsaw":
        path = construct_chainsaw(t)
    else:
        if args.bits is None:
            args.parser.error("--mode turns requires --bits")
        path = construct_generic(t, _parse_bits(args.bits, t, args.parser))
    report = validate(path, t)
    if args.out == "svg":
        _emit(render_svg(path, f"({t.a}, {t.b}, {t.c}) {args.mode} polygon", report), args.output)
    else:
        payload = {
            "triple": [str(x) for x in t.as_tuple()],
            "mode": args.mode,
            "side_targets": [str(s) for s in path.side_targets],
            "vertices": [[x, y] for x, y in path.vertices],
            "squared_diagonals": [str(exact_radius_sq(t, k)) for k in range(1, t.N)],
            "report": report.as_dict(),
        }
        _emit(dump_json(envelope("polygon", payload)), args.output)
    ok = report.is_arithmetic and (args.mode != "chainsaw" or not report.self_intersecting)
    if not ok:
        print(f"error: polygon failed validation: {report.as_dict()}", file=sys.stderr)
        return EXIT_INVALID_POLYGON
    return 0


def cmd_census(args) -> int:
    rows = run_census(args.nu)
    out = [
        {"a": str(r.triple.a), "b": str(r.triple.b), "c": str(r.triple.c), "N": str(r.triple.N),
         "k": "" if r.parameterized_k is None else str(r.parameterized_k),
         "convex": r.convex, "mu": r.mu, "self_intersecting": r.self_intersecting,
         "degenerate": r.degenerate}
        for r in rows
    ]
    if args.format == "csv":
        _emit(dump_csv(list(out[0]) if out else [], out), args.output)
    else:
        payload = {
            "nu": args.nu,
            "candidates": len(rows),
            "convex_count": sum(r.convex for r in rows),
            "rows": out,
        }
        _emit(dump_json(envelope("census", payload)), args.output)
    if args.nu != 0:
        return 0
    if len(rows) != EXPECTED_CANDIDATES:
        print(f"note: {len(rows)} candidates with c - a <= 126 (expected {EXPECTED_CANDIDATES})",
              file=sys.stderr)
    convex = tuple(r.triple.as_tuple() for r in rows if r.convex)
    if convex != EXPECTED_CONVEX:
        print(f"error: convex set {convex} differs from the expected two", file=sys.stderr)
        return EXIT_CENSUS
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="socs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="enumerate solutions by length c - a")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--max-n", type=int, help="all solutions with c - a <= MAX_N")
    g.add_argument("--n", type=int, help="all solutions with c - a == N")
    p.add_argument("--non-parameterized", action="store_true", help="drop the k-family")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--workers", type=int, default=None, help="processes (default: $PYRAMIDAL_THREADS or 1)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_solve, parser=p)

    p = sub.add_parser("generate", help="Pell orbit of a base solution")
    for name in ("a", "b", "c"):
        p.add_argument(name, type=int)
    p.add_argument("--count", type=int, default=3)
    p.add_argument("--format", choices=["csv", "json"], default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate, parser=p)

    p = sub.add_parser("polygon", help="build and validate an arithmetic polygon")
    for name in ("a", "b", "c"):
        p.add_argument(name, type=int)
    p.add_argument("--mode", choices=["chainsaw", "turns"], default="chainsaw")
    p.add_argument("--bits", help="turn bits as a 0/1 string (1 = counter-clockwise), or 'inward'")
    p.add_argument("--out", choices=["svg", "json"], default="svg")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_polygon, parser=p)

    p = sub.add_parser("census", help="search for convex arithmetic polygons")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--nu", type=int, default=0, help="allowed reflex angles (0 = convex)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_census, parser=p)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "count", 1) < 1:
        args.parser.error("--count must be >= 1")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

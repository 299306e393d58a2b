"""Command-line front end.

Exit codes: 0 success, 1 a verification suite failed, 2 bad input (the
message names the offending field), 3 size cap exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass

from msmetric import jsonio
from msmetric.assignment import DEFAULT_SIZE_CAP, SizeCapError, solve_assignment
from msmetric.checks import run_all
from msmetric.l1 import cauchy_gap_table, l1_distance
from msmetric.nmultiset import matching_distance
from msmetric.quotient import collapse, quotient_distance
from msmetric.zgroup import group_distance

EXIT_SUITE_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_SIZE_CAP = 3


@dataclass(frozen=True)
class RunConfig:
    tolerance_abs: float = 1e-9
    solver_size_cap: int = DEFAULT_SIZE_CAP
    rng_seed: int = 0
    suite_iterations: int = 10_000

    def __post_init__(self) -> None:
        if not self.tolerance_abs > 0:
            raise ValueError(f"tol: must be positive, got {self.tolerance_abs}")
        if self.solver_size_cap < 1:
            raise ValueError(f"cap: must be at least 1, got {self.solver_size_cap}")
        if self.suite_iterations < 1:
            raise ValueError(f"iters: must be at least 1, got {self.suite_iterations}")


def fmt(x: float) -> str:
    """12 significant digits, trailing zeros kept."""
    return f"{x:#.12g}"


def _config(args) -> RunConfig:
    seed = args.seed
    env = os.environ.get("MSM_SEED")
    if env is not None:
        try:
            seed = int(env, 0)
        except ValueError:
            raise jsonio.SchemaError("MSM_SEED", f"not an integer: {env!r}") from None
    return RunConfig(args.tol, args.cap, seed, args.iters)


def _space(args):
    return jsonio.space_from_json(jsonio.read_json(args.space, "space"), "space")


def cmd_dist(args) -> str:
    space = _space(args)
    a = jsonio.multiset_from_json(space, jsonio.read_json(args.a, "a"), "a")
    b = jsonio.multiset_from_json(space, jsonio.read_json(args.b, "b"), "b")
    return fmt(matching_distance(a, b, size_cap=args.cap)) + "\n"


def cmd_zdist(args) -> str:
    space = _space(args)
    x = jsonio.signed_from_json(space, jsonio.read_json(args.a, "a"), "a")
    y = jsonio.signed_from_json(space, jsonio.read_json(args.b, "b"), "b")
    return fmt(group_distance(x, y, size_cap=args.cap)) + "\n"


def _point(qs, path: str, field: str):
    raw = jsonio.read_json(path, field)
    if isinstance(raw, dict):
        if "element" not in raw:
            raise jsonio.SchemaError(f"{field}.element", "missing field")
        raw = raw["element"]
        field = f"{field}.element"
    return collapse(qs, jsonio.element_from_json(qs.base, raw, field))


def cmd_qdist(args) -> str:
    qs = jsonio.quotient_from_json(jsonio.read_json(args.space, "space"), "space")
    p, r = _point(qs, args.a, "a"), _point(qs, args.b, "b")
    return fmt(quotient_distance(qs, p, r)) + "\n"


def cmd_ldist(args) -> str:
    space = _space(args)
    a = jsonio.truncated_from_json(space, jsonio.read_json(args.a, "a"), "a")
    b = jsonio.truncated_from_json(space, jsonio.read_json(args.b, "b"), "b")
    iv = l1_distance(a, b, size_cap=args.cap)
    if args.format == "json":
        return json.dumps({"lower": iv.lower, "upper": iv.upper}) + "\n"
    return f"{fmt(iv.lower)} {fmt(iv.upper)}\n"


def cmd_cauchy(args) -> str:
    rows = cauchy_gap_table(args.prefix)
    if args.format == "json":
        return json.dumps([{"m": r.m, "n": r.n, "gap": r.gap, "bound": r.bound} for r in rows], indent=1) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["m", "n", "gap", "bound"])
    for r in rows:
        w.writerow([r.m, r.n, fmt(r.gap), fmt(r.bound)])
    return buf.getvalue()


def cmd_solve(args) -> str:
    matrix = jsonio.read_json(args.matrix, "matrix")
    try:
        result = solve_assignment(matrix, size_cap=args.cap)
    except SizeCapError:
        raise
    except (TypeError, ValueError) as exc:
        raise jsonio.SchemaError("matrix", str(exc)) from None
    if args.format == "json":
        return json.dumps({"permutation": list(result.permutation), "total_cost": result.total_cost}) + "\n"
    return f"{fmt(result.total_cost)}\n{' '.join(map(str, result.permutation))}\n"


def cmd_check(args) -> tuple[str, int]:
    try:
        cfg = _config(args)
    except ValueError as exc:
        raise jsonio.SchemaError(str(exc).split(":")[0], str(exc)) from None
    results = run_all(cfg.rng_seed, cfg.suite_iterations, cfg.tolerance_abs, cfg.solver_size_cap)
    ok = all(r.passed for r in results)
    if args.format == "json":
        report = {
            "seed": cfg.rng_seed,
            "iterations": cfg.suite_iterations,
            "tolerance": cfg.tolerance_abs,
            "passed": ok,
            "suites": [r.to_json() for r in results],
        }
        out = json.dumps(report, indent=1, sort_keys=True) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "status", "checks", "counterexample"])
        for r in results:
            cex = json.dumps(r.counterexample, sort_keys=True) if r.counterexample else ""
            w.writerow([r.name, "PASS" if r.passed else "FAIL", r.checks, cex])
        out = buf.getvalue()
    return out, 0 if ok else EXIT_SUITE_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="msmetric", description="Matching metrics on multisets over a metric space.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, formats=("csv", "json")) -> None:
        p.add_argument("--cap", type=int, default=DEFAULT_SIZE_CAP, help="solver size cap (default 2000)")
        p.add_argument("--format", choices=formats, default=formats[0])

    for name, helptext in (
        ("dist", "matching distance between two multisets"),
        ("zdist", "distance between two signed multisets"),
        ("ldist", "certified interval for two truncated l1-multisets"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--space", required=True, metavar="FILE")
        p.add_argument("--a", required=True, metavar="FILE")
        p.add_argument("--b", required=True, metavar="FILE")
        common(p)

    p = sub.add_parser("qdist", help="quotient distance between two points")
    p.add_argument("--space", required=True, metavar="FILE", help='{"space": ..., "H": [...]}')
    p.add_argument("--a", required=True, metavar="FILE")
    p.add_argument("--b", required=True, metavar="FILE")
    common(p)

    p = sub.add_parser("cauchy", help="gap table of the geometric prefix sequence")
    p.add_argument("--prefix", type=int, default=20, help="prefix count, at most 40")
    common(p)

    p = sub.add_parser("solve", help="solve an assignment problem given as a JSON matrix")
    p.add_argument("--matrix", required=True, metavar="FILE")
    common(p)

    p = sub.add_parser("check", help="run every verification suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iters", type=int, default=10_000)
    p.add_argument("--tol", type=float, default=1e-9)
    common(p)
    return parser


COMMANDS = {
    "dist": cmd_dist,
    "zdist": cmd_zdist,
    "qdist": cmd_qdist,
    "ldist": cmd_ldist,
    "cauchy": cmd_cauchy,
    "solve": cmd_solve,
    "check": cmd_check,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = COMMANDS[args.command](args)
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE_CAP
    except jsonio.SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    out, code = result if isinstance(result, tuple) else (result, 0)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())

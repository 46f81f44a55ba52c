"""Command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 engine or
capacity error, 4 output not writable.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import closed_forms as cf
from .errors import CapacityError, DiophantineError
from .gf import count_general
from .oracle import count_bruteforce, enumerate_solutions
from .strip import aggregate
from .system import SystemKind, SystemSpec, validate
from .verify import SUITES, run_suite

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_ENGINE, EXIT_IO = 0, 1, 2, 3, 4

ENGINES = ("auto", "oracle", "closed", "strip", "gf")


class UsageError(Exception):
    pass


class EngineError(Exception):
    pass


def _parse_rhs(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--rhs must be comma-separated integers, got {text!r}") from None


def _spec_from_args(args) -> SystemSpec:
    kind = SystemKind(args.system)
    if args.rhs is not None:
        spec = SystemSpec(kind, _parse_rhs(args.rhs))
    else:
        if kind is SystemKind.GENERAL and args.k is None:
            raise UsageError("--system general with --l also needs --k")
        spec = SystemSpec.uniform(kind, args.l, args.k)
    try:
        validate(spec)
    except DiophantineError as exc:
        raise UsageError(str(exc)) from None
    return spec


def _closed(spec: SystemSpec) -> int | None:
    if not spec.is_uniform:
        return None
    l = spec.rhs[0]
    if spec.k == 4:
        return cf.count_theorem(l)
    if spec.k == 3:
        return cf.floyd_f(l)
    return None


def count_with(spec: SystemSpec, engine: str, max_cells: int | None = None) -> tuple[str, int]:
    """Count with the named engine; returns the engine actually used."""
    if engine == "auto":
        engine = "closed" if _closed(spec) is not None else "gf"
    if engine == "oracle":
        return engine, count_bruteforce(spec)
    if engine == "gf":
        return engine, count_general(spec.rhs, max_cells)
    if engine == "closed":
        value = _closed(spec)
        if value is None:
            raise EngineError("closed forms need a uniform right-hand side with k=3 or k=4")
        return engine, value
    if engine == "strip":
        if spec.k != 4 or not spec.is_uniform:
            raise EngineError("the strip counter needs a uniform right-hand side with k=4")
        return engine, aggregate(spec.rhs[0])
    raise UsageError(f"unknown engine {engine!r}")


def cmd_count(args, out) -> int:
    spec = _spec_from_args(args)
    engine, value = count_with(spec, args.engine, args.max_cells)
    if args.format == "json":
        obj = {"system": spec.kind.value, "rhs": list(spec.rhs), "engine": engine, "count": str(value)}
        out.write(json.dumps(obj) + "\n")
    else:
        out.write(f"{value}\n")
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    spec = _spec_from_args(args)
    if args.limit is not None and args.limit < 1:
        raise UsageError("--limit must be positive")
    sols = enumerate_solutions(spec, args.limit)
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow([f"a{i + 1}{j + 1}" for i in range(spec.k) for j in range(i, spec.k)])
        for m in sols:
            w.writerow(m.upper())
    else:
        for m in sols:
            out.write(m.to_json() + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    checks = run_suite(args.suite, args.max_l, args.max_cells)
    for c in checks:
        out.write(c.line() + "\n")
    failed = sum(not c.passed for c in checks)
    out.write(f"{len(checks) - failed}/{len(checks)} checks passed\n")
    return EXIT_OK if failed == 0 else EXIT_VERIFY


def table_rows(system: str, k: int | None, max_l: int, engine: str = "auto",
               max_cells: int | None = None) -> list[tuple[int, int]]:
    kind = SystemKind(system)
    if kind is SystemKind.GENERAL and k is None:
        raise UsageError("--system general needs --k")
    rows = []
    for l in range(max_l + 1):
        spec = SystemSpec.uniform(kind, l, k)
        rows.append((l, count_with(spec, engine, max_cells)[1]))
    return rows


def cmd_table(args, out) -> int:
    if args.max_l < 0:
        raise UsageError("--max-l must be nonnegative")
    rows = table_rows(args.system, args.k, args.max_l, args.engine, args.max_cells)
    buf = io.StringIO()
    if args.format == "json":
        buf.write(json.dumps([{"l": l, "count": str(c)} for l, c in rows]) + "\n")
    else:
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["l", "count"])
        w.writerows(rows)
    if args.out:
        try:
            with open(args.out, "w", newline="") as fh:
                fh.write(buf.getvalue())
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        out.write(buf.getvalue())
    return EXIT_OK


def _add_system(p, need_rhs: bool = True):
    p.add_argument("--system", required=True, choices=[k.value for k in SystemKind])
    p.add_argument("--k", type=int, help="number of equations for --system general")
    if need_rhs:
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--rhs", help="comma-separated right-hand sides")
        g.add_argument("--l", type=int, help="uniform right-hand side")


def _add_cells(p):
    p.add_argument("--max-cells", type=int, default=None,
                   help="cell cap for the generating-function table (env DIO_MAX_CELLS)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="diocount", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count nonnegative solutions")
    _add_system(p)
    p.add_argument("--engine", choices=ENGINES, default="auto")
    p.add_argument("--format", choices=("text", "json"), default="text")
    _add_cells(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list solutions in lexicographic order")
    _add_system(p)
    p.add_argument("--limit", type=int)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run a cross-engine verification sweep")
    p.add_argument("--suite", required=True, choices=[*SUITES, "all"])
    p.add_argument("--max-l", type=int)
    _add_cells(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="counts for uniform right-hand sides 0..max-l")
    _add_system(p, need_rhs=False)
    p.add_argument("--max-l", type=int, required=True)
    p.add_argument("--engine", choices=ENGINES, default="auto")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    _add_cells(p)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "max_l", None) is not None and args.max_l < 0:
        print("error: --max-l must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EngineError, CapacityError, DiophantineError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ENGINE
    except ValueError as exc:
        # e.g. a malformed DIO_MAX_CELLS
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

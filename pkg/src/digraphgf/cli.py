"""Command line: ``digraphgf {table,selftest,bench} ...``.

Exit codes: 0 ok, 1 selftest failure, 2 usage error, 3 input file error.
"""

from __future__ import annotations

import argparse
import sys
import time
from contextlib import contextmanager

from . import catalog
from .coeffring import POLYNOMIAL, CoeffMode
from .oracle import MAX_N
from .series import SeriesError
from .tableio import FamilyFileError, parse_family_file, table_to_csv, table_to_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3
POLY_BENCH_LIMIT = 30


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="digraphgf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_n):
        p.add_argument("--max-n", type=int, default=default_n)
        p.add_argument("--mode", choices=["poly", "numeric"], default="numeric")
        p.add_argument("--w", type=int, default=1, help="value of w in numeric mode")
        p.add_argument("--u", type=int, default=1, help="value of u in numeric mode")
        p.add_argument("--out", default="-", help="output path, '-' for stdout")

    table = sub.add_parser("table", help="coefficient table of one family")
    common(table, 8)
    table.add_argument("--family", required=True, choices=sorted(catalog.FAMILIES))
    table.add_argument("--format", choices=["csv", "json"], default="csv")
    table.add_argument("--custom-family", help="EGF coefficient file for the SCC family A or B")

    selftest = sub.add_parser("selftest", help="oracle and identity suites")
    common(selftest, 4)

    bench = sub.add_parser("bench", help="time scc and dag totals")
    common(bench, 100)
    return parser


def _mode(args) -> CoeffMode:
    if args.mode == "poly":
        return POLYNOMIAL
    return CoeffMode.at(args.w, args.u)


@contextmanager
def _output(path):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def cmd_table(args) -> int:
    if args.max_n < 0:
        raise UsageError("--max-n must be nonnegative")
    spec = catalog.FAMILIES[args.family]
    mode = _mode(args)
    payload = None
    if spec.needs_payload:
        if not args.custom_family:
            raise UsageError(f"family {args.family} needs --custom-family")
        try:
            with open(args.custom_family) as fh:
                text = fh.read()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        try:
            payload = parse_family_file(text, args.max_n, POLYNOMIAL)
        except FamilyFileError as exc:
            print(f"error: {args.custom_family}: {exc}", file=sys.stderr)
            return EXIT_INPUT
        if mode.numeric:
            payload = catalog.Series(payload.kind, payload.coeffs, mode)
    try:
        table = catalog.family_table(args.family, args.max_n, mode, payload)
    except SeriesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = table_to_json(table) if args.format == "json" else table_to_csv(table)
    with _output(args.out) as fh:
        fh.write(text)
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .selftest import run_suites

    if not 0 <= args.max_n <= MAX_N:
        raise UsageError(f"selftest needs 0 <= --max-n <= {MAX_N}")
    with _output(args.out) as fh:
        results = run_suites(args.max_n, echo=lambda line: print(line, file=fh, flush=True))
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def cmd_bench(args) -> int:
    if args.max_n < 0:
        raise UsageError("--max-n must be nonnegative")
    if args.mode == "poly" and args.max_n > POLY_BENCH_LIMIT:
        raise UsageError(f"poly mode bench is capped at --max-n {POLY_BENCH_LIMIT}")
    mode = _mode(args)
    t0 = time.perf_counter()
    scc = catalog.scc_egf(args.max_n, mode)
    t1 = time.perf_counter()
    dag = catalog.dag_ggf(args.max_n, mode)
    t2 = time.perf_counter()

    def total(c):
        return c if mode.numeric else sum(v for _, v in c.items())

    with _output(args.out) as fh:
        fh.write("n,scc,dag\n")
        for n in range(1, args.max_n + 1):
            fh.write(f"{n},{total(scc[n])},{total(dag[n])}\n")
    print(f"# scc: {t1 - t0:.3f}s  dag: {t2 - t1:.3f}s  (mode={mode.name}, max_n={args.max_n})",
          file=sys.stderr)
    return EXIT_OK


COMMANDS = {"table": cmd_table, "selftest": cmd_selftest, "bench": cmd_bench}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end.

Subcommands: compute (evaluate one sum exactly), check (one identity at
one pair), scan (counterexample search over a range), series (compare a
trigonometric representation against the exact value), fib (Fibonacci
values and pairs).

Exit codes: 0 pass, 1 identity failure, 2 usage or applicability error,
3 pole in a trigonometric series.  The FINSUM_FORMAT environment
variable overrides the default output format; an explicit --format
flag overrides both.  Scan timing is reported as 0 ms unless --timing
is given, so that report bytes do not depend on wall-clock or on
--jobs.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import os
import sys
from typing import Callable, Sequence

from .fib import fib, kuch_pair, symmetric_pair
from .identities import (
    LawViolationError,
    check_identity,
    check_report_to_dict,
    scan,
    scan_report_to_dict,
)
from .series import (
    FINITE_KINDS,
    PoleError,
    SeriesKind,
    finite_series,
    infinite_series,
)
from .sums import (
    HardyKind,
    b1_sum,
    c1_sum,
    dedekind_naive,
    hardy_sum,
    simsek_Y,
    y_multi,
)

EXIT_PASS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_POLE = 3

FORMATS = ("human", "json", "csv")

CHECK_COLUMNS = ["identity", "h", "k", "lhs", "rhs", "pass"]
SCAN_COLUMNS = ["identity", "checked", "failures", "elapsed_ms"]
SERIES_COLUMNS = ["kind", "h", "k", "approx", "exact", "error", "depth"]

_COMPUTE: dict[str, Callable[[int, int], object]] = {
    "dedekind": dedekind_naive,
    "S": lambda h, k: hardy_sum(HardyKind.S, h, k),
    "s1": lambda h, k: hardy_sum(HardyKind.S1, h, k),
    "s2": lambda h, k: hardy_sum(HardyKind.S2, h, k),
    "s3": lambda h, k: hardy_sum(HardyKind.S3, h, k),
    "s4": lambda h, k: hardy_sum(HardyKind.S4, h, k),
    "s5": lambda h, k: hardy_sum(HardyKind.S5, h, k),
    "Y": simsek_Y,
    "C1": c1_sum,
    "B1": b1_sum,
}

COMPUTE_NAMES = ["dedekind", "S", "s1", "s2", "s3", "s4", "s5", "Y", "C1", "B1", "Ymulti"]


def _resolve_format(flag: str | None) -> str:
    if flag:
        return flag
    env = os.environ.get("FINSUM_FORMAT")
    if env:
        if env not in FORMATS:
            raise ValueError(
                f"FINSUM_FORMAT must be one of {', '.join(FORMATS)}, got {env!r}"
            )
        return env
    return "human"


def _emit_json(payload: object) -> None:
    print(json.dumps(payload, indent=2))


def _emit_csv(header: Sequence[str], rows: Sequence[Sequence[object]]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    print(buf.getvalue(), end="")


def _bool_str(flag: bool) -> str:
    return "true" if flag else "false"


def _cmd_compute(args: argparse.Namespace) -> int:
    name = args.name
    values = args.values
    if name == "Ymulti":
        if len(values) < 2:
            raise ValueError("Ymulti takes at least two integers")
        value = y_multi(values)
    else:
        if len(values) != 2:
            raise ValueError(f"{name} takes exactly two integers h k")
        value = _COMPUTE[name](values[0], values[1])
    fmt = _resolve_format(args.format)
    if fmt == "json":
        _emit_json({"name": name, "args": values, "value": str(value)})
    elif fmt == "csv":
        _emit_csv(
            ["name", "args", "value"],
            [[name, " ".join(map(str, values)), str(value)]],
        )
    else:
        print(value)
    return EXIT_PASS


def _cmd_check(args: argparse.Namespace) -> int:
    report = check_identity(args.identity, args.h, args.k)
    fmt = _resolve_format(args.format)
    if fmt == "json":
        _emit_json([check_report_to_dict(report)])
    elif fmt == "csv":
        _emit_csv(
            CHECK_COLUMNS,
            [
                [
                    report.identity,
                    report.h,
                    report.k,
                    str(report.lhs),
                    str(report.rhs),
                    _bool_str(report.passed),
                ]
            ],
        )
    else:
        word = "PASS" if report.passed else "FAIL"
        print(
            f"{word} {report.identity} ({report.h}, {report.k}): "
            f"lhs = {report.lhs}, rhs = {report.rhs}"
        )
    return EXIT_PASS if report.passed else EXIT_FAILURE


def _cmd_scan(args: argparse.Namespace) -> int:
    ids = [part for part in args.ids.split(",") if part]
    if not ids:
        raise ValueError("--ids must name at least one identity")
    fmt = _resolve_format(args.format)
    try:
        reports = scan(ids, args.hmax, args.kmax, jobs=args.jobs)
    except LawViolationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    if not args.timing:
        reports = [dataclasses.replace(r, elapsed_ms=0) for r in reports]
    if fmt == "json":
        _emit_json([scan_report_to_dict(r) for r in reports])
    elif fmt == "csv":
        _emit_csv(
            SCAN_COLUMNS,
            [[r.identity, r.checked, len(r.failures), r.elapsed_ms] for r in reports],
        )
    else:
        for r in reports:
            print(
                f"{r.identity}: checked {r.checked} pairs "
                f"(h <= {r.h_max}, k <= {r.k_max}), "
                f"{len(r.failures)} failures [{r.elapsed_ms} ms]"
            )
            for f in r.failures:
                print(f"  FAIL ({f.h}, {f.k}): lhs = {f.lhs}, rhs = {f.rhs}")
    return EXIT_FAILURE if any(r.failures for r in reports) else EXIT_PASS


def _cmd_series(args: argparse.Namespace) -> int:
    kind = SeriesKind(args.kind)
    if kind in FINITE_KINDS:
        result = finite_series(kind, args.h, args.k)
    else:
        result = infinite_series(kind, args.h, args.k, periods=args.periods)
    fmt = _resolve_format(args.format)
    if fmt == "json":
        _emit_json(
            [
                {
                    "kind": result.kind.value,
                    "h": result.h,
                    "k": result.k,
                    "approx": result.approx,
                    "exact": str(result.exact),
                    "error": result.error,
                    "depth": result.depth,
                }
            ]
        )
    elif fmt == "csv":
        _emit_csv(
            SERIES_COLUMNS,
            [
                [
                    result.kind.value,
                    result.h,
                    result.k,
                    repr(result.approx),
                    str(result.exact),
                    repr(result.error),
                    result.depth,
                ]
            ],
        )
    else:
        print(
            f"{result.kind.value} ({result.h}, {result.k}): "
            f"approx = {result.approx!r}, exact = {result.exact}, "
            f"error = {result.error:.3e}, depth = {result.depth}"
        )
    return EXIT_PASS


def _cmd_fib(args: argparse.Namespace) -> int:
    if args.which == "value":
        print(fib(args.n))
    elif args.which == "pair-sym":
        h, k = symmetric_pair(args.n)
        print(f"{h} {k}")
    else:
        h, k = kuch_pair(args.n)
        print(f"{h} {k}")
    return EXIT_PASS


_DISPATCH = {
    "compute": _cmd_compute,
    "check": _cmd_check,
    "scan": _cmd_scan,
    "series": _cmd_series,
    "fib": _cmd_fib,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finsum",
        description="Exact finite sums: evaluation, identity checking, "
        "counterexample scanning, series comparison.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="evaluate one sum exactly")
    p_compute.add_argument("name", choices=COMPUTE_NAMES)
    p_compute.add_argument("values", nargs="+", type=int, metavar="N")
    p_compute.add_argument("--format", choices=FORMATS)

    p_check = sub.add_parser("check", help="check one identity at one pair")
    p_check.add_argument("identity")
    p_check.add_argument("h", type=int)
    p_check.add_argument("k", type=int)
    p_check.add_argument("--format", choices=FORMATS)

    p_scan = sub.add_parser("scan", help="scan identities over a range")
    p_scan.add_argument(
        "--ids",
        required=True,
        help="comma-separated identity ids; 'all', 'all-laws' and "
        "'EF-VANISH' expand in registry order",
    )
    p_scan.add_argument("--hmax", type=int, required=True)
    p_scan.add_argument("--kmax", type=int, required=True)
    p_scan.add_argument("--jobs", type=int, default=1)
    p_scan.add_argument(
        "--timing",
        action="store_true",
        help="report measured elapsed_ms instead of 0 "
        "(output is then not byte-reproducible)",
    )
    p_scan.add_argument("--format", choices=FORMATS)

    p_series = sub.add_parser(
        "series", help="evaluate a trigonometric representation"
    )
    p_series.add_argument("kind", choices=[k.value for k in SeriesKind])
    p_series.add_argument("h", type=int)
    p_series.add_argument("k", type=int)
    p_series.add_argument(
        "--periods",
        type=int,
        default=2000,
        help="truncation depth in whole periods (infinite kinds only)",
    )
    p_series.add_argument("--format", choices=FORMATS)

    p_fib = sub.add_parser("fib", help="Fibonacci values and pairs")
    p_fib.add_argument("which", choices=["value", "pair-sym", "pair-kuch"])
    p_fib.add_argument("n", type=int)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except PoleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_POLE
    except LawViolationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

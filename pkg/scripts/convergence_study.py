#!/usr/bin/env python3
"""Empirical convergence rates of the infinite trigonometric series.

For each infinite representation and a few sample pairs, print the
truncation error at a geometric ladder of period counts.  The series
are conditionally convergent; truncation at whole periods of the trig
factor gives an O(1/N) error, which this table makes visible (each
10x depth step should shave about one digit).

Usage:
    python3 scripts/convergence_study.py [--periods 10 100 1000] [--csv]
"""

import argparse
import csv
import sys
from math import gcd

from finsum.series import INFINITE_KINDS, convergence_table, series_applies

SAMPLE_PAIRS = [(1, 2), (1, 3), (3, 5), (5, 8), (8, 15), (15, 14), (13, 15)]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--periods", type=int, nargs="+", default=[10, 100, 1000])
    parser.add_argument("--csv", action="store_true", help="emit CSV instead of a table")
    args = parser.parse_args()

    rows = []
    for kind in INFINITE_KINDS:
        for h, k in SAMPLE_PAIRS:
            if gcd(h, k) != 1 or not series_applies(kind, h, k):
                continue
            results = convergence_table(kind, h, k, args.periods)
            errors = [r.error for r in results]
            rows.append((kind.value, h, k, str(results[0].exact), errors))

    if args.csv:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(
            ["kind", "h", "k", "exact"] + [f"err@{p}" for p in args.periods]
        )
        for kind, h, k, exact, errors in rows:
            writer.writerow([kind, h, k, exact] + [repr(e) for e in errors])
        return

    width = max(len(r[0]) for r in rows)
    header = f"{'kind':<{width}}  {'h':>3} {'k':>3}  {'exact':>8}  " + "  ".join(
        f"{'err@' + str(p):>10}" for p in args.periods
    )
    print(header)
    print("-" * len(header))
    for kind, h, k, exact, errors in rows:
        err_cols = "  ".join(f"{e:>10.3e}" for e in errors)
        print(f"{kind:<{width}}  {h:>3} {k:>3}  {exact:>8}  {err_cols}")


if __name__ == "__main__":
    main()

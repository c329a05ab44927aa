#!/usr/bin/env python3
"""Adjudicate the two open multi-floor sum statements by brute scan.

Both statements relate y_multi((h, k)) to simpler closed forms on
coprime pairs with h + k odd.  One of them survives every scan we have
run; the other has small counterexamples.  This script reruns the scan
at a configurable range and prints a verdict per statement, with the
first few counterexamples and the observed failure rate.

Usage:
    python3 scripts/adjudicate_y1.py --hmax 80 --kmax 80 [--jobs 4]
"""

import argparse

from finsum.identities import scan


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--hmax", type=int, default=80)
    parser.add_argument("--kmax", type=int, default=80)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument(
        "--show", type=int, default=8, help="counterexamples to print per statement"
    )
    args = parser.parse_args()

    reports = scan(["Y1-A", "Y1-B"], args.hmax, args.kmax, jobs=args.jobs)
    for report in reports:
        n_fail = len(report.failures)
        verdict = "SUPPORTED" if n_fail == 0 else "REFUTED"
        print(
            f"{report.identity}: {verdict} on {report.checked} applicable pairs "
            f"(h <= {report.h_max}, k <= {report.k_max}), "
            f"{n_fail} failures [{report.elapsed_ms} ms]"
        )
        for failure in report.failures[: args.show]:
            print(
                f"  counterexample (h={failure.h}, k={failure.k}): "
                f"lhs = {failure.lhs}, rhs = {failure.rhs}"
            )
        if n_fail > args.show:
            print(f"  ... and {n_fail - args.show} more")


if __name__ == "__main__":
    main()

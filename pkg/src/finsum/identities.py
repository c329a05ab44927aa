"""Catalog of identities among the finite sums, with exact evaluators
and a range scanner for counterexample search.

Every entry carries an applicability predicate encoding its hypotheses
(positivity, coprimality, parity class).  Entries are either laws,
which must hold on every applicable pair and abort a scan when they do
not, or conjectures, whose failures are tallied and reported.  Two
registered statements are mutually exclusive (Y1-A and Y1-B differ by
2*(B1(h,k) + B1(k,h)), nonzero at (5,2)), so both are conjectures and
the scanner adjudicates them empirically.

Symmetric statements such as "s(h,k) = s(k,h) = 0" are registered with
the single-sided left side; a scan over a square range visits both
(h,k) and (k,h), so both orders are exercised.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import repeat
from typing import Callable, Sequence

from .core import floor_div, is_coprime, neg_one_pow, sawtooth
from .fib import kuch_pair, symmetric_pair
from .sums import (
    HardyKind,
    b1_sum,
    c1_sum,
    dedekind_fast,
    dedekind_naive,
    hardy_sum,
    mixed_sum,
    simsek_Y,
    y_multi,
)

PairPredicate = Callable[[int, int], bool]
PairEvaluator = Callable[[int, int], Fraction]

LAW = "law"
CONJECTURE = "conjecture"


class UnknownIdentityError(ValueError):
    """Identity id not present in the registry."""


class NotApplicableError(ValueError):
    """Pair outside the identity's hypotheses; distinct from a failure."""


@dataclass(frozen=True)
class Identity:
    id: str
    description: str
    mode: str
    applies: PairPredicate
    lhs: PairEvaluator
    rhs: PairEvaluator


@dataclass(frozen=True)
class CheckReport:
    identity: str
    h: int
    k: int
    lhs: Fraction
    rhs: Fraction
    passed: bool


@dataclass(frozen=True)
class ScanReport:
    identity: str
    h_max: int
    k_max: int
    checked: int
    failures: tuple[CheckReport, ...]
    elapsed_ms: int


class LawViolationError(Exception):
    """A law-mode identity failed; scanning aborted."""

    def __init__(self, report: ScanReport):
        self.report = report
        lines = [
            f"law {report.identity} failed on {len(report.failures)} of "
            f"{report.checked} pairs (h <= {report.h_max}, k <= {report.k_max}):"
        ]
        for f in report.failures[:10]:
            lines.append(f"  ({f.h}, {f.k}): lhs = {f.lhs}, rhs = {f.rhs}")
        if len(report.failures) > 10:
            lines.append(f"  ... and {len(report.failures) - 10} more")
        super().__init__("\n".join(lines))


def b1_signed(h: int, k: int) -> Fraction:
    """b1_sum extended to nonzero modulus of either sign.

    For k < 0 the sum runs j = 1..|k|-1 with the floor [hj/k] still
    rounding toward minus infinity, which is the definitional reading
    of B1 at negated arguments.
    """
    if k == 0:
        raise ValueError("modulus must be nonzero")
    if k > 0:
        return b1_sum(h, k)
    acc = 0
    for j in range(1, -k):
        q = floor_div(h * j, k)
        acc += -q if (j + q) & 1 else q
    return Fraction(acc)


def _y1(h: int, k: int) -> Fraction:
    return y_multi((h, k))


def _pos_coprime(h: int, k: int) -> bool:
    return h >= 1 and k >= 1 and is_coprime(h, k)


def _both_odd(h: int, k: int) -> bool:
    return _pos_coprime(h, k) and h & 1 == 1 and k & 1 == 1


def _sum_odd(h: int, k: int) -> bool:
    return _pos_coprime(h, k) and (h + k) & 1 == 1


def _h_even(h: int, k: int) -> bool:
    return _pos_coprime(h, k) and h & 1 == 0


def _h_odd(h: int, k: int) -> bool:
    return _pos_coprime(h, k) and h & 1 == 1


def _k_even(h: int, k: int) -> bool:
    return _pos_coprime(h, k) and k & 1 == 0


def _k_odd(h: int, k: int) -> bool:
    return _pos_coprime(h, k) and k & 1 == 1


def _is_pair_member(h: int, k: int, generator: Callable[[int], tuple[int, int]]) -> bool:
    if h < 1 or k < 1 or h == k:
        return False
    lo, hi = (h, k) if h < k else (k, h)
    n = 1
    while True:
        a, b = generator(n)
        if a > lo:
            return False
        if a == lo:
            return b == hi
        n += 1


def _is_symmetric_fib_pair(h: int, k: int) -> bool:
    return _is_pair_member(h, k, symmetric_pair)


def _is_kuch_fib_pair(h: int, k: int) -> bool:
    return _is_pair_member(h, k, kuch_pair)


def _S(h: int, k: int) -> Fraction:
    return hardy_sum(HardyKind.S, h, k)


def _s1(h: int, k: int) -> Fraction:
    return hardy_sum(HardyKind.S1, h, k)


def _s2(h: int, k: int) -> Fraction:
    return hardy_sum(HardyKind.S2, h, k)


def _s3(h: int, k: int) -> Fraction:
    return hardy_sum(HardyKind.S3, h, k)


def _s4(h: int, k: int) -> Fraction:
    return hardy_sum(HardyKind.S4, h, k)


def _s5(h: int, k: int) -> Fraction:
    return hardy_sum(HardyKind.S5, h, k)


_VANISHING = (
    ("EF-VANISH-S", HardyKind.S, "S(h,k) = 0 when h + k is even", _both_odd),
    ("EF-VANISH-S1", HardyKind.S1, "s1(h,k) = 0 when h is odd", _h_odd),
    ("EF-VANISH-S2", HardyKind.S2, "s2(h,k) = 0 when k is odd", _k_odd),
    ("EF-VANISH-S3", HardyKind.S3, "s3(h,k) = 0 when k is even", _k_even),
    ("EF-VANISH-S4", HardyKind.S4, "s4(h,k) = 0 when h is even", _h_even),
    ("EF-VANISH-S5", HardyKind.S5, "s5(h,k) = 0 when h + k is odd", _sum_odd),
)


@lru_cache(maxsize=1)
def registry() -> tuple[Identity, ...]:
    """The complete immutable identity catalog, in report order."""
    zero = lambda h, k: Fraction(0)
    entries: list[Identity] = [
        Identity(
            id="DED-REC",
            description="Dedekind reciprocity: s(h,k) + s(k,h) = -1/4 + (h^2 + k^2 + 1)/(12hk)",
            mode=LAW,
            applies=_pos_coprime,
            lhs=lambda h, k: dedekind_naive(h, k) + dedekind_naive(k, h),
            rhs=lambda h, k: Fraction(-1, 4) + Fraction(h * h + k * k + 1, 12 * h * k),
        ),
        Identity(
            id="S-REC",
            description="S reciprocity: S(h,k) + S(k,h) = 1 for h + k odd",
            mode=LAW,
            applies=_sum_odd,
            lhs=lambda h, k: _S(h, k) + _S(k, h),
            rhs=lambda h, k: Fraction(1),
        ),
        Identity(
            id="S-VAN",
            description="S(h,k) = 0 when h and k are both odd",
            mode=LAW,
            applies=_both_odd,
            lhs=_S,
            rhs=zero,
        ),
        Identity(
            id="S5-REC",
            description="s5 reciprocity: s5(h,k) + s5(k,h) = 1/2 - 1/(2hk) for h, k both odd",
            mode=LAW,
            applies=_both_odd,
            lhs=lambda h, k: _s5(h, k) + _s5(k, h),
            rhs=lambda h, k: Fraction(1, 2) - Fraction(1, 2 * h * k),
        ),
        Identity(
            id="S5-VAN",
            description="s5(h,k) = 0 when h + k is odd",
            mode=LAW,
            applies=_sum_odd,
            lhs=_s5,
            rhs=zero,
        ),
        Identity(
            id="EF1",
            description="S(h,k) = 8s(h,2k) + 8s(2h,k) - 20s(h,k) for h + k odd",
            mode=LAW,
            applies=_sum_odd,
            lhs=_S,
            rhs=lambda h, k: 8 * dedekind_naive(h, 2 * k)
            + 8 * dedekind_naive(2 * h, k)
            - 20 * dedekind_naive(h, k),
        ),
        Identity(
            id="EF2",
            description="s1(h,k) = 2s(h,k) - 4s(h,2k) for h even",
            mode=LAW,
            applies=_h_even,
            lhs=_s1,
            rhs=lambda h, k: 2 * dedekind_naive(h, k) - 4 * dedekind_naive(h, 2 * k),
        ),
        Identity(
            id="EF3",
            description="s2(h,k) = -s(h,k) + 2s(2h,k) for k even",
            mode=LAW,
            applies=_k_even,
            lhs=_s2,
            rhs=lambda h, k: -dedekind_naive(h, k) + 2 * dedekind_naive(2 * h, k),
        ),
        Identity(
            id="EF4",
            description="s3(h,k) = 2s(h,k) - 4s(2h,k) for k odd",
            mode=LAW,
            applies=_k_odd,
            lhs=_s3,
            rhs=lambda h, k: 2 * dedekind_naive(h, k) - 4 * dedekind_naive(2 * h, k),
        ),
        Identity(
            id="EF5",
            description="s4(h,k) = -4s(h,k) + 8s(h,2k) for h odd",
            mode=LAW,
            applies=_h_odd,
            lhs=_s4,
            rhs=lambda h, k: -4 * dedekind_naive(h, k) + 8 * dedekind_naive(h, 2 * k),
        ),
        Identity(
            id="EF6",
            description="s5(h,k) = -10s(h,k) + 4s(2h,k) + 4s(h,2k) for h + k even",
            mode=LAW,
            applies=_both_odd,
            lhs=_s5,
            rhs=lambda h, k: -10 * dedekind_naive(h, k)
            + 4 * dedekind_naive(2 * h, k)
            + 4 * dedekind_naive(h, 2 * k),
        ),
    ]
    for ident, kind, desc, pred in _VANISHING:
        entries.append(
            Identity(
                id=ident,
                description=desc,
                mode=LAW,
                applies=pred,
                lhs=lambda h, k, _kind=kind: hardy_sum(_kind, h, k),
                rhs=zero,
            )
        )
    entries += [
        Identity(
            id="EWSS",
            description="S(h,k) = 4s(h,k) - 8s(h+k,2k) for h + k odd",
            mode=LAW,
            applies=_sum_odd,
            lhs=_S,
            rhs=lambda h, k: 4 * dedekind_naive(h, k) - 8 * dedekind_naive(h + k, 2 * k),
        ),
        Identity(
            id="Y-S5",
            description="Y(h,k) = 4k s5(h,k)",
            mode=LAW,
            applies=_pos_coprime,
            lhs=simsek_Y,
            rhs=lambda h, k: 4 * k * _s5(h, k),
        ),
        Identity(
            id="Y-REC",
            description="hY(h,k) + kY(k,h) = 2hk - 2 for h, k both odd",
            mode=LAW,
            applies=_both_odd,
            lhs=lambda h, k: h * simsek_Y(h, k) + k * simsek_Y(k, h),
            rhs=lambda h, k: Fraction(2 * h * k - 2),
        ),
        Identity(
            id="C1-ODD",
            description="C1(h,k) = 1/2 - 1/(2k) for h, k both odd",
            mode=LAW,
            applies=_both_odd,
            lhs=c1_sum,
            rhs=lambda h, k: Fraction(1, 2) - Fraction(1, 2 * k),
        ),
        Identity(
            id="PEELA",
            description="(-1)^[h/k] = 2((h/k)) - 4((h/2k)) for k >= 2",
            mode=LAW,
            applies=lambda h, k: k >= 2 and h >= 1 and is_coprime(h, k),
            lhs=lambda h, k: Fraction(neg_one_pow(floor_div(h, k))),
            rhs=lambda h, k: 2 * sawtooth(Fraction(h, k)) - 4 * sawtooth(Fraction(h, 2 * k)),
        ),
        Identity(
            id="B1-NEG",
            description="B1(-h,-k) = B1(h,k)",
            mode=LAW,
            applies=_pos_coprime,
            lhs=lambda h, k: b1_signed(-h, -k),
            rhs=b1_sum,
        ),
        Identity(
            id="B1-S",
            description="B1(h,k) = (1-h)/2 S(h,k) for h + k odd",
            mode=LAW,
            applies=_sum_odd,
            lhs=b1_sum,
            rhs=lambda h, k: Fraction(1 - h, 2) * _S(h, k),
        ),
        Identity(
            id="B1-S5",
            description="B1(h,k) = h s5(h,k) + 1/(2k) - 1/2 for h, k both odd",
            mode=LAW,
            applies=_both_odd,
            lhs=b1_sum,
            rhs=lambda h, k: h * _s5(h, k) + Fraction(1, 2 * k) - Fraction(1, 2),
        ),
        Identity(
            id="B1-Y",
            description="B1(h,k) = h/(4k) Y(h,k) + 1/(2k) - 1/2 for h, k both odd",
            mode=LAW,
            applies=_both_odd,
            lhs=b1_sum,
            rhs=lambda h, k: Fraction(h, 4 * k) * simsek_Y(h, k)
            + Fraction(1, 2 * k)
            - Fraction(1, 2),
        ),
        Identity(
            id="B1-MIX",
            description="(k-1)B1(h,k) + (h-1)B1(k,h) = -(k-1)(h-1)/2 for h + k odd",
            mode=LAW,
            applies=_sum_odd,
            lhs=lambda h, k: (k - 1) * b1_sum(h, k) + (h - 1) * b1_sum(k, h),
            rhs=lambda h, k: Fraction(-(k - 1) * (h - 1), 2),
        ),
        Identity(
            id="B1-REC",
            description="kB1(h,k) + hB1(k,h) = (h-1)(k-1)/2 for h, k both odd",
            mode=LAW,
            applies=_both_odd,
            lhs=lambda h, k: k * b1_sum(h, k) + h * b1_sum(k, h),
            rhs=lambda h, k: Fraction((h - 1) * (k - 1), 2),
        ),
        Identity(
            id="B1-DED1",
            description="B1(h,k) = (1-h)(4s(h,2k) + 4s(2h,k) - 10s(h,k)) for h + k odd",
            mode=LAW,
            applies=_sum_odd,
            lhs=b1_sum,
            rhs=lambda h, k: (1 - h)
            * (
                4 * dedekind_naive(h, 2 * k)
                + 4 * dedekind_naive(2 * h, k)
                - 10 * dedekind_naive(h, k)
            ),
        ),
        Identity(
            id="B1-DED2",
            description="B1(h,k) = 2(1-h)(s(h,k) - 2s(h+k,2k)) for h + k odd",
            mode=LAW,
            applies=_sum_odd,
            lhs=b1_sum,
            rhs=lambda h, k: 2
            * (1 - h)
            * (dedekind_naive(h, k) - 2 * dedekind_naive(h + k, 2 * k)),
        ),
        Identity(
            id="B1-DED3",
            description="B1(h,k) = -10hs(h,k) + 4hs(2h,k) + 4hs(h,2k) + 1/(2k) - 1/2 for h, k both odd",
            mode=LAW,
            applies=_both_odd,
            lhs=b1_sum,
            rhs=lambda h, k: -10 * h * dedekind_naive(h, k)
            + 4 * h * dedekind_naive(2 * h, k)
            + 4 * h * dedekind_naive(h, 2 * k)
            + Fraction(1, 2 * k)
            - Fraction(1, 2),
        ),
        Identity(
            id="Y1-A",
            description="Y1(h,k) + Y1(k,h) = 2(k-1)B1(h,k) + 2(h-1)B1(k,h) for h + k odd",
            mode=CONJECTURE,
            applies=_sum_odd,
            lhs=lambda h, k: _y1(h, k) + _y1(k, h),
            rhs=lambda h, k: 2 * (k - 1) * b1_sum(h, k) + 2 * (h - 1) * b1_sum(k, h),
        ),
        Identity(
            id="Y1-B",
            description="Y1(h,k) + Y1(k,h) = 2kB1(h,k) + 2hB1(k,h) for h + k odd",
            mode=CONJECTURE,
            applies=_sum_odd,
            lhs=lambda h, k: _y1(h, k) + _y1(k, h),
            rhs=lambda h, k: 2 * k * b1_sum(h, k) + 2 * h * b1_sum(k, h),
        ),
        Identity(
            id="FIB-SYM",
            description="s(h,k) = 0 for consecutive odd-indexed Fibonacci pairs",
            mode=LAW,
            applies=_is_symmetric_fib_pair,
            lhs=dedekind_fast,
            rhs=zero,
        ),
        Identity(
            id="FIB-KUCH",
            description="s5(h,k) + s5(k,h) = (h/k + k/h - 2)/2 for (F(6n-1), F(6n+1)) pairs",
            mode=LAW,
            applies=_is_kuch_fib_pair,
            lhs=lambda h, k: _s5(h, k) + _s5(k, h),
            rhs=lambda h, k: Fraction(h, 2 * k) + Fraction(k, 2 * h) - 1,
        ),
        Identity(
            id="FIB-B1",
            description="kB1(h,k) + hB1(k,h) = (h^2 - h - k + k^2)/2 - hk + 1 for (F(6n-1), F(6n+1)) pairs",
            mode=LAW,
            applies=_is_kuch_fib_pair,
            lhs=lambda h, k: k * b1_sum(h, k) + h * b1_sum(k, h),
            rhs=lambda h, k: Fraction(h * h - h - k + k * k, 2) - h * k + 1,
        ),
    ]
    return tuple(entries)


@lru_cache(maxsize=1)
def _registry_map() -> dict[str, Identity]:
    return {ident.id: ident for ident in registry()}


def get_identity(identity_id: str) -> Identity:
    try:
        return _registry_map()[identity_id]
    except KeyError:
        raise UnknownIdentityError(f"unknown identity id: {identity_id!r}") from None


def law_ids() -> list[str]:
    return [ident.id for ident in registry() if ident.mode == LAW]


def resolve_ids(selectors: Sequence[str]) -> list[str]:
    """Expand id selectors, deduplicating while preserving order.

    "all" expands to the whole registry, "all-laws" to the law-mode
    entries, "EF-VANISH" to the six vanishing cases; anything else must
    be a registered id.
    """
    out: list[str] = []
    seen: set[str] = set()
    for sel in selectors:
        if sel == "all":
            names = [ident.id for ident in registry()]
        elif sel == "all-laws":
            names = law_ids()
        elif sel == "EF-VANISH":
            names = [ident.id for ident in registry() if ident.id.startswith("EF-VANISH-")]
        else:
            names = [get_identity(sel).id]
        for name in names:
            if name not in seen:
                seen.add(name)
                out.append(name)
    return out


def check_identity(identity_id: str, h: int, k: int) -> CheckReport:
    """Evaluate one identity at one pair; exact comparison."""
    ident = get_identity(identity_id)
    if not ident.applies(h, k):
        raise NotApplicableError(f"{ident.id} does not apply to ({h}, {k})")
    lhs = ident.lhs(h, k)
    rhs = ident.rhs(h, k)
    return CheckReport(ident.id, h, k, lhs, rhs, lhs == rhs)


def _check_pairs(identity_id: str, pairs: Sequence[tuple[int, int]]) -> list[CheckReport]:
    ident = get_identity(identity_id)
    failures = []
    for h, k in pairs:
        lhs = ident.lhs(h, k)
        rhs = ident.rhs(h, k)
        if lhs != rhs:
            failures.append(CheckReport(ident.id, h, k, lhs, rhs, False))
    return failures


def _chunked(pairs: list[tuple[int, int]], n: int) -> list[list[tuple[int, int]]]:
    size = max(1, -(-len(pairs) // n))
    return [pairs[i : i + size] for i in range(0, len(pairs), size)]


def scan(
    ids: Sequence[str],
    h_max: int,
    k_max: int,
    jobs: int = 1,
) -> list[ScanReport]:
    """Check each identity on every applicable pair with h <= h_max,
    k <= k_max.

    Pairs are enumerated in (h, k) lexicographic order and failures are
    reported in that order regardless of jobs, so output is
    deterministic.  A failing law raises LawViolationError; conjecture
    failures are tallied in the report.
    """
    if h_max < 1 or k_max < 1:
        raise ValueError("scan bounds must be >= 1")
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    reports: list[ScanReport] = []
    for name in resolve_ids(ids):
        ident = get_identity(name)
        start = time.perf_counter()
        pairs = [
            (h, k)
            for h in range(1, h_max + 1)
            for k in range(1, k_max + 1)
            if ident.applies(h, k)
        ]
        if jobs == 1 or len(pairs) < 2 * jobs:
            failures = _check_pairs(name, pairs)
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                parts = pool.map(_check_pairs, repeat(name), _chunked(pairs, 4 * jobs))
                failures = [f for part in parts for f in part]
        failures.sort(key=lambda f: (f.h, f.k))
        elapsed_ms = int(round((time.perf_counter() - start) * 1000))
        report = ScanReport(
            identity=name,
            h_max=h_max,
            k_max=k_max,
            checked=len(pairs),
            failures=tuple(failures),
            elapsed_ms=elapsed_ms,
        )
        if ident.mode == LAW and failures:
            raise LawViolationError(report)
        reports.append(report)
    return reports


def check_report_to_dict(report: CheckReport) -> dict:
    return {
        "id": report.identity,
        "h": report.h,
        "k": report.k,
        "lhs": str(report.lhs),
        "rhs": str(report.rhs),
        "pass": report.passed,
    }


def check_report_from_dict(d: dict) -> CheckReport:
    return CheckReport(
        identity=d["id"],
        h=int(d["h"]),
        k=int(d["k"]),
        lhs=Fraction(d["lhs"]),
        rhs=Fraction(d["rhs"]),
        passed=bool(d["pass"]),
    )


def scan_report_to_dict(report: ScanReport) -> dict:
    return {
        "id": report.identity,
        "hmax": report.h_max,
        "kmax": report.k_max,
        "checked": report.checked,
        "failures": [check_report_to_dict(f) for f in report.failures],
        "elapsed_ms": report.elapsed_ms,
    }


def scan_report_from_dict(d: dict) -> ScanReport:
    return ScanReport(
        identity=d["id"],
        h_max=int(d["hmax"]),
        k_max=int(d["kmax"]),
        checked=int(d["checked"]),
        failures=tuple(check_report_from_dict(f) for f in d["failures"]),
        elapsed_ms=int(d["elapsed_ms"]),
    )

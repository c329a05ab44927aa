"""Tangent/cotangent representations of the exact sums, evaluated in
64-bit floating point and compared against the exact values.

Finite kinds are closed sums over one period.  Infinite kinds are
conditionally convergent series whose trigonometric factor is periodic
in the summation index with period k; truncation is always at a whole
number of periods (depth = periods * k) because each full period nearly
cancels, which keeps partial sums stable.

Every trig argument is a rational multiple of pi, so singularities are
decided exactly by integer congruence before any float is formed:
tan(pi p/q) has a pole iff 2p = q (mod 2q), cot(pi p/q) iff p = 0
(mod q).  A pole at an index the formula does not exclude raises
PoleError rather than returning a huge float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Sequence

from .core import is_coprime
from .sums import HardyKind, b1_sum, hardy_sum


class PoleError(ArithmeticError):
    """A tangent or cotangent argument landed on a singularity."""

    def __init__(self, func: str, num: int, den: int):
        self.func = func
        self.num = num
        self.den = den
        super().__init__(f"{func}(pi * {num}/{den}) is singular")


def tan_pi(num: int, den: int) -> float:
    """tan(pi * num/den) with exact pole detection.

    The argument is reduced mod 1 exactly, then mapped to (-1/2, 1/2)
    before calling math.tan, so accuracy does not degrade for large
    numerators.
    """
    if den <= 0:
        raise ValueError(f"denominator must be positive, got {den}")
    if (2 * num - den) % (2 * den) == 0:
        raise PoleError("tan", num, den)
    x = (num % den) / den
    if x > 0.5:
        x -= 1.0
    return math.tan(math.pi * x)


def cot_pi(num: int, den: int) -> float:
    """cot(pi * num/den) via cot(t) = tan(pi/2 - t), with exact pole detection."""
    if den <= 0:
        raise ValueError(f"denominator must be positive, got {den}")
    if num % den == 0:
        raise PoleError("cot", num, den)
    return tan_pi(den - 2 * (num % den), 2 * den)


class SeriesKind(Enum):
    """The finite (FIN_*) and truncated infinite (INF_*) representations."""

    FIN_S = "FIN_S"
    FIN_S1 = "FIN_S1"
    FIN_S2 = "FIN_S2"
    FIN_S3 = "FIN_S3"
    FIN_S4 = "FIN_S4"
    FIN_S5 = "FIN_S5"
    FIN_B1_SUMODD = "FIN_B1_SUMODD"
    FIN_B1_BOTHODD = "FIN_B1_BOTHODD"
    INF_S = "INF_S"
    INF_S1 = "INF_S1"
    INF_S2 = "INF_S2"
    INF_S3 = "INF_S3"
    INF_S4 = "INF_S4"
    INF_S5 = "INF_S5"
    INF_B1_SUMODD = "INF_B1_SUMODD"
    INF_B1_BOTHODD = "INF_B1_BOTHODD"


FINITE_KINDS = tuple(k for k in SeriesKind if k.value.startswith("FIN_"))
INFINITE_KINDS = tuple(k for k in SeriesKind if k.value.startswith("INF_"))


@dataclass(frozen=True)
class SeriesResult:
    """A float evaluation next to its exact target.

    depth is the number of terms the defining index range contains
    (excluded indices are skipped but still counted); for infinite
    kinds it equals periods * k.
    """

    kind: SeriesKind
    h: int
    k: int
    approx: float
    exact: Fraction
    error: float
    depth: int


def _both_odd(h: int, k: int) -> bool:
    return h & 1 == 1 and k & 1 == 1


def _sum_odd(h: int, k: int) -> bool:
    return (h + k) & 1 == 1


def _h_even_k_odd(h: int, k: int) -> bool:
    return h & 1 == 0 and k & 1 == 1


def _h_odd_k_even(h: int, k: int) -> bool:
    return h & 1 == 1 and k & 1 == 0


def _h_odd(h: int, k: int) -> bool:
    return h & 1 == 1


def _k_odd(h: int, k: int) -> bool:
    return k & 1 == 1


def _always(h: int, k: int) -> bool:
    return True


_PARITY: dict[SeriesKind, tuple[Callable[[int, int], bool], str]] = {
    SeriesKind.FIN_S: (_sum_odd, "h + k odd"),
    SeriesKind.FIN_S1: (_h_even_k_odd, "h even, k odd"),
    SeriesKind.FIN_S2: (_h_odd_k_even, "h odd, k even"),
    SeriesKind.FIN_S3: (_k_odd, "k odd"),
    SeriesKind.FIN_S4: (_h_odd, "h odd"),
    SeriesKind.FIN_S5: (_both_odd, "h and k odd"),
    SeriesKind.FIN_B1_SUMODD: (_sum_odd, "h + k odd"),
    SeriesKind.FIN_B1_BOTHODD: (_both_odd, "h and k odd"),
    SeriesKind.INF_S: (_sum_odd, "h + k odd"),
    SeriesKind.INF_S1: (_h_even_k_odd, "h even, k odd"),
    SeriesKind.INF_S2: (_h_odd_k_even, "h odd, k even"),
    SeriesKind.INF_S3: (_k_odd, "k odd"),
    SeriesKind.INF_S4: (_h_odd, "h odd"),
    SeriesKind.INF_S5: (_both_odd, "h and k odd"),
    SeriesKind.INF_B1_SUMODD: (_sum_odd, "h + k odd"),
    SeriesKind.INF_B1_BOTHODD: (_both_odd, "h and k odd"),
}


def _exact_S(h: int, k: int) -> Fraction:
    return hardy_sum(HardyKind.S, h, k)


def _exact_S1(h: int, k: int) -> Fraction:
    return hardy_sum(HardyKind.S1, h, k)


def _exact_S2(h: int, k: int) -> Fraction:
    return hardy_sum(HardyKind.S2, h, k)


def _exact_S3(h: int, k: int) -> Fraction:
    return hardy_sum(HardyKind.S3, h, k)


def _exact_S4(h: int, k: int) -> Fraction:
    return hardy_sum(HardyKind.S4, h, k)


def _exact_S5(h: int, k: int) -> Fraction:
    return hardy_sum(HardyKind.S5, h, k)


_EXACT: dict[SeriesKind, Callable[[int, int], Fraction]] = {
    SeriesKind.FIN_S: _exact_S,
    SeriesKind.FIN_S1: _exact_S1,
    SeriesKind.FIN_S2: _exact_S2,
    SeriesKind.FIN_S3: _exact_S3,
    SeriesKind.FIN_S4: _exact_S4,
    SeriesKind.FIN_S5: _exact_S5,
    SeriesKind.FIN_B1_SUMODD: b1_sum,
    SeriesKind.FIN_B1_BOTHODD: b1_sum,
    SeriesKind.INF_S: _exact_S,
    SeriesKind.INF_S1: _exact_S1,
    SeriesKind.INF_S2: _exact_S2,
    SeriesKind.INF_S3: _exact_S3,
    SeriesKind.INF_S4: _exact_S4,
    SeriesKind.INF_S5: _exact_S5,
    SeriesKind.INF_B1_SUMODD: b1_sum,
    SeriesKind.INF_B1_BOTHODD: b1_sum,
}


def series_applies(kind: SeriesKind, h: int, k: int) -> bool:
    """True iff (h, k) is coprime, k > 0, and satisfies kind's parity."""
    pred, _ = _PARITY[kind]
    return k >= 1 and is_coprime(h, k) and pred(h, k)


def _validate(kind: SeriesKind, h: int, k: int) -> None:
    if k <= 0:
        raise ValueError(f"modulus k must be positive, got {k}")
    if not is_coprime(h, k):
        raise ValueError(f"arguments must be coprime, got gcd({h}, {k}) > 1")
    pred, hyp = _PARITY[kind]
    if not pred(h, k):
        raise ValueError(f"{kind.value} requires {hyp}, got ({h}, {k})")


def _half_odd_sum(h: int, k: int, trig: str, skip_middle: bool) -> tuple[float, int]:
    """sum over j = 1..k of f(pi h(2j-1)/2k) * cot(pi (2j-1)/2k),
    with f = tan or cot; optionally skipping j = (k+1)/2."""
    fn = tan_pi if trig == "tan" else cot_pi
    acc = 0.0
    for j in range(1, k + 1):
        if skip_middle and 2 * j == k + 1:
            continue
        m = 2 * j - 1
        acc += fn(h * m, 2 * k) * cot_pi(m, 2 * k)
    return acc, k


def _whole_sum(h: int, k: int, skip_half: bool) -> tuple[float, int]:
    """sum over j = 1..k-1 of tan(pi hj/k) * cot(pi j/k), optionally
    skipping j = k/2."""
    acc = 0.0
    for j in range(1, k):
        if skip_half and 2 * j == k:
            continue
        acc += tan_pi(h * j, k) * cot_pi(j, k)
    return acc, k - 1


def finite_series(kind: SeriesKind, h: int, k: int) -> SeriesResult:
    """Evaluate a finite representation and compare to the exact sum."""
    if kind not in FINITE_KINDS:
        raise ValueError(f"{kind.value} is not a finite kind")
    _validate(kind, h, k)
    if kind is SeriesKind.FIN_S:
        raw, depth = _half_odd_sum(h, k, "tan", skip_middle=False)
        approx = raw / k
    elif kind is SeriesKind.FIN_S1:
        raw, depth = _half_odd_sum(h, k, "cot", skip_middle=True)
        approx = -raw / (2 * k)
    elif kind is SeriesKind.FIN_S2:
        raw, depth = _whole_sum(h, k, skip_half=True)
        approx = -raw / (4 * k)
    elif kind is SeriesKind.FIN_S3:
        raw, depth = _whole_sum(h, k, skip_half=False)
        approx = raw / (2 * k)
    elif kind is SeriesKind.FIN_S4:
        raw, depth = _half_odd_sum(h, k, "cot", skip_middle=False)
        approx = raw / k
    elif kind is SeriesKind.FIN_S5:
        raw, depth = _half_odd_sum(h, k, "tan", skip_middle=True)
        approx = raw / (2 * k)
    elif kind is SeriesKind.FIN_B1_SUMODD:
        raw, depth = _half_odd_sum(h, k, "tan", skip_middle=False)
        approx = (1 - h) * raw / (2 * k)
    else:
        raw, depth = _half_odd_sum(h, k, "tan", skip_middle=True)
        approx = h * raw / (2 * k) + 1.0 / (2 * k) - 0.5
    exact = _EXACT[kind](h, k)
    return SeriesResult(kind, h, k, approx, exact, abs(approx - float(exact)), depth)


def _odd_index_series(
    h: int, k: int, periods: int, trig: str, exclude_mult_k: bool
) -> float:
    """sum over n = 1..periods*k of f(pi h(2n-1)/2k)/(2n-1), f = tan or
    cot, optionally skipping indices with 2n-1 = 0 (mod k).

    The trig factor depends only on (2n-1) mod 2k, so its values are
    tabulated per residue; pole checks happen exactly once per used
    residue, before any summation.
    """
    den = 2 * k
    fn = tan_pi if trig == "tan" else cot_pi
    table: list[float] = [0.0] * den
    used: list[bool] = [False] * den
    for r in range(1, den, 2):
        if exclude_mult_k and r % k == 0:
            continue
        table[r] = fn(h * r, den)
        used[r] = True
    acc = 0.0
    for n in range(1, periods * k + 1):
        m = 2 * n - 1
        r = m % den
        if used[r]:
            acc += table[r] / m
    return acc


def _int_index_series(h: int, k: int, periods: int, exclude_half: bool) -> float:
    """sum over n = 1..periods*k of tan(pi hn/k)/n, optionally skipping
    indices with 2n = 0 (mod k)."""
    table: list[float] = [0.0] * k
    used: list[bool] = [False] * k
    for r in range(k):
        if exclude_half and (2 * r) % k == 0:
            continue
        table[r] = tan_pi(h * r, k)
        used[r] = True
    acc = 0.0
    for n in range(1, periods * k + 1):
        r = n % k
        if used[r]:
            acc += table[r] / n
    return acc


def infinite_series(kind: SeriesKind, h: int, k: int, periods: int = 2000) -> SeriesResult:
    """Evaluate a truncated infinite representation at depth periods*k."""
    if kind not in INFINITE_KINDS:
        raise ValueError(f"{kind.value} is not an infinite kind")
    _validate(kind, h, k)
    if periods < 1:
        raise ValueError(f"periods must be >= 1, got {periods}")
    if kind is SeriesKind.INF_S:
        approx = 4 / math.pi * _odd_index_series(h, k, periods, "tan", False)
    elif kind is SeriesKind.INF_S1:
        approx = -2 / math.pi * _odd_index_series(h, k, periods, "cot", True)
    elif kind is SeriesKind.INF_S2:
        approx = -1 / (2 * math.pi) * _int_index_series(h, k, periods, True)
    elif kind is SeriesKind.INF_S3:
        approx = 1 / math.pi * _int_index_series(h, k, periods, False)
    elif kind is SeriesKind.INF_S4:
        approx = 4 / math.pi * _odd_index_series(h, k, periods, "cot", False)
    elif kind is SeriesKind.INF_S5:
        approx = 2 / math.pi * _odd_index_series(h, k, periods, "tan", True)
    elif kind is SeriesKind.INF_B1_SUMODD:
        approx = 2 * (1 - h) / math.pi * _odd_index_series(h, k, periods, "tan", False)
    else:
        approx = (
            2 * h / math.pi * _odd_index_series(h, k, periods, "tan", True)
            + 1.0 / (2 * k)
            - 0.5
        )
    exact = _EXACT[kind](h, k)
    return SeriesResult(
        kind, h, k, approx, exact, abs(approx - float(exact)), periods * k
    )


def convergence_table(
    kind: SeriesKind, h: int, k: int, depths: Sequence[int]
) -> list[SeriesResult]:
    """infinite_series at each period count in depths."""
    return [infinite_series(kind, h, k, periods) for periods in depths]

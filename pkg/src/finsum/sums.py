"""Exact evaluation of Dedekind-type finite sums over residues mod k.

Every sum here runs over j = 1..k-1 and combines three ingredients: the
sawtooth ((x)), the floor [x], and alternating signs driven by j and by
[hj/k].  The implementations avoid per-term Fraction construction: for
1 <= j <= k-1 the sawtooth value ((hj/k)) equals (2r - k)/(2k) with
r = hj mod k, and is 0 when r == 0, so each sum accumulates a single
integer over a common denominator and reduces once at the end.

No floating point appears anywhere in this module.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .core import is_coprime


class HardyKind(Enum):
    """The six alternating-sign sums S, s1 .. s5."""

    S = "S"
    S1 = "s1"
    S2 = "s2"
    S3 = "s3"
    S4 = "s4"
    S5 = "s5"


class ParityClass(Enum):
    """Parity split of a coprime pair; both-even cannot occur."""

    BOTH_ODD = "both-odd"
    H_ODD_K_EVEN = "h-odd-k-even"
    H_EVEN_K_ODD = "h-even-k-odd"


def _require_modulus(k: int) -> None:
    if k <= 0:
        raise ValueError(f"modulus k must be positive, got {k}")


def _require_coprime(h: int, k: int) -> None:
    if not is_coprime(h, k):
        raise ValueError(f"arguments must be coprime, got gcd({h}, {k}) > 1")


@lru_cache(maxsize=None)
def dedekind_naive(h: int, k: int) -> Fraction:
    """Dedekind sum s(h,k) = sum_{j=1}^{k-1} ((hj/k))((j/k)).

    Total in h: coprimality is not required.  O(k) time.
    """
    _require_modulus(k)
    acc = 0
    for j in range(1, k):
        r = h * j % k
        if r:
            acc += (2 * r - k) * (2 * j - k)
    return Fraction(acc, 4 * k * k)


@lru_cache(maxsize=None)
def dedekind_fast(h: int, k: int) -> Fraction:
    """Dedekind sum via reciprocity descent, O(log k) arithmetic steps.

    Repeatedly applies s(h,k) + s(k,h) = -1/4 + (h^2 + k^2 + 1)/(12hk)
    after reducing h mod k (s is 1-periodic in h), so the argument pair
    shrinks like the Euclidean algorithm.  Requires gcd(h,k) == 1: the
    reciprocity step is only valid for coprime arguments, and the
    descent then ends at a 0 modulus-1 sum.
    """
    _require_modulus(k)
    _require_coprime(h, k)
    a, b = h % k, k
    res = Fraction(0)
    sign = 1
    while a:
        res += sign * (Fraction(-1, 4) + Fraction(a * a + b * b + 1, 12 * a * b))
        sign = -sign
        a, b = b % a, a
    return res


@lru_cache(maxsize=None)
def hardy_sum(kind: HardyKind, h: int, k: int) -> Fraction:
    """One of the six sums S, s1 .. s5 over j = 1..k-1.

    S(h,k)  = sum (-1)^(j+1+[hj/k])
    s1(h,k) = sum (-1)^[hj/k] ((j/k))
    s2(h,k) = sum (-1)^j ((j/k))((hj/k))
    s3(h,k) = sum (-1)^j ((hj/k))
    s4(h,k) = sum (-1)^[hj/k]
    s5(h,k) = sum (-1)^(j+[hj/k]) ((j/k))

    The index starts at j = 1; a j = 0 term would be nonzero only for S
    and s4, and including it breaks the S reciprocity normalization
    S(1,2) + S(2,1) = 1.
    """
    _require_modulus(k)
    if kind is HardyKind.S:
        acc = 0
        for j in range(1, k):
            q = h * j // k
            acc += 1 if (j + q) & 1 else -1
        return Fraction(acc)
    if kind is HardyKind.S1:
        acc = 0
        for j in range(1, k):
            q = h * j // k
            t = 2 * j - k
            acc += -t if q & 1 else t
        return Fraction(acc, 2 * k)
    if kind is HardyKind.S2:
        acc = 0
        for j in range(1, k):
            r = h * j % k
            if r:
                t = (2 * j - k) * (2 * r - k)
                acc += -t if j & 1 else t
        return Fraction(acc, 4 * k * k)
    if kind is HardyKind.S3:
        acc = 0
        for j in range(1, k):
            r = h * j % k
            if r:
                t = 2 * r - k
                acc += -t if j & 1 else t
        return Fraction(acc, 2 * k)
    if kind is HardyKind.S4:
        acc = 0
        for j in range(1, k):
            q = h * j // k
            acc += -1 if q & 1 else 1
        return Fraction(acc)
    if kind is HardyKind.S5:
        acc = 0
        for j in range(1, k):
            q = h * j // k
            t = 2 * j - k
            acc += -t if (j + q) & 1 else t
        return Fraction(acc, 2 * k)
    raise TypeError(f"unknown Hardy kind: {kind!r}")


@lru_cache(maxsize=None)
def mixed_sum(h: int, k: int) -> Fraction:
    """sum_{j=1}^{k-1} (-1)^(j+[hj/k]) (j/k), with a plain j/k weight.

    Unlike s5 the weight is not the sawtooth, so this is not one of the
    six sums above; it equals s5(h,k) - S(h,k)/2 for coprime pairs.
    """
    _require_modulus(k)
    acc = 0
    for j in range(1, k):
        q = h * j // k
        acc += -j if (j + q) & 1 else j
    return Fraction(acc, k)


def s5_alt(h: int, k: int) -> Fraction:
    """(1/k) sum_{j=1}^{k-1} j (-1)^(j+[hj/k]) for odd h and odd k.

    Same kernel as mixed_sum; the parity hypothesis is what makes it
    agree with hardy_sum(S5, h, k).
    """
    if h % 2 == 0 or k % 2 == 0:
        raise ValueError(f"s5_alt requires h and k both odd, got ({h}, {k})")
    _require_modulus(k)
    return mixed_sum(h, k)


@lru_cache(maxsize=None)
def simsek_Y(h: int, k: int) -> Fraction:
    """Y(h,k) = 4k sum_{j=1}^{k-1} (-1)^(j+[hj/k]) ((j/k)).

    Equals 2 * sum (-1)^(j+[hj/k]) (2j - k), hence always an even
    integer; the result is still returned as a Fraction for uniformity.
    """
    _require_modulus(k)
    _require_coprime(h, k)
    acc = 0
    for j in range(1, k):
        q = h * j // k
        t = 2 * j - k
        acc += -t if (j + q) & 1 else t
    return Fraction(2 * acc)


@lru_cache(maxsize=None)
def c1_sum(h: int, k: int) -> Fraction:
    """C1(h,k) = sum_{j=1}^{k-1} ((hj/k)) (-1)^(j+[hj/k])."""
    _require_modulus(k)
    _require_coprime(h, k)
    acc = 0
    for j in range(1, k):
        r = h * j % k
        if r:
            q = h * j // k
            t = 2 * r - k
            acc += -t if (j + q) & 1 else t
    return Fraction(acc, 2 * k)


@lru_cache(maxsize=None)
def b1_sum(h: int, k: int) -> Fraction:
    """B1(h,k) = sum_{j=1}^{k-1} [hj/k] (-1)^(j+[hj/k]).

    Integer-valued; returned as a Fraction for uniformity with the
    other sums.  See b1_variant_no_j for the sign variant without j.
    """
    _require_modulus(k)
    acc = 0
    for j in range(1, k):
        q = h * j // k
        acc += -q if (j + q) & 1 else q
    return Fraction(acc)


@lru_cache(maxsize=None)
def b1_variant_no_j(h: int, k: int) -> Fraction:
    """sum_{j=1}^{k-1} [hj/k] (-1)^[hj/k], the sign variant of B1.

    Exposed for comparison only: the reciprocity and S-linkage
    identities hold for b1_sum, not for this variant.
    """
    _require_modulus(k)
    acc = 0
    for j in range(1, k):
        q = h * j // k
        acc += -q if q & 1 else q
    return Fraction(acc)


def y_multi(a: Sequence[int]) -> Fraction:
    """Multi-argument sum over j = 1..a_n - 1 with a_n the last entry:

        sum (2j - 1) (-1)^(j + [a_1 j/a_n] + ... + [a_{n-1} j/a_n])
                     * [a_1 j/a_n] ... [a_{n-1} j/a_n]

    Requires length >= 2, a_n > 0, and pairwise coprime entries.
    """
    if len(a) < 2:
        raise ValueError("y_multi needs at least two arguments")
    if a[-1] <= 0:
        raise ValueError(f"last argument (the modulus) must be positive, got {a[-1]}")
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            if not is_coprime(a[i], a[j]):
                raise ValueError(f"arguments must be pairwise coprime: {a[i]}, {a[j]}")
    return _y_multi_cached(tuple(a))


@lru_cache(maxsize=None)
def _y_multi_cached(a: tuple[int, ...]) -> Fraction:
    heads, k = a[:-1], a[-1]
    acc = 0
    for j in range(1, k):
        floors = [x * j // k for x in heads]
        prod = 1
        for q in floors:
            prod *= q
        if prod == 0:
            continue
        t = (2 * j - 1) * prod
        acc += -t if (j + sum(floors)) & 1 else t
    return Fraction(acc)


def parity_class(h: int, k: int) -> ParityClass:
    """The (h mod 2, k mod 2) class of a coprime pair."""
    ho, ko = h & 1, k & 1
    if ho and ko:
        return ParityClass.BOTH_ODD
    if ho:
        return ParityClass.H_ODD_K_EVEN
    if ko:
        return ParityClass.H_EVEN_K_ODD
    raise ValueError(f"({h}, {k}) are both even, so not coprime")

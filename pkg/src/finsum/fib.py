"""Fibonacci numbers (F0 = 0, F1 = 1) and the coprime pairs built from
consecutive odd-indexed terms.

symmetric_pair(n) = (F(2n+1), F(2n+3)) gives the pairs whose Dedekind
sums are symmetric (both orders vanish); kuch_pair(n) = (F(6n-1), F(6n+1))
gives the both-odd subfamily appearing in the reciprocity corollaries.
Consecutive Fibonacci numbers are coprime, and so are F(m), F(m+2)
since gcd(F(m), F(m+2)) = gcd(F(m), F(m+1)) = 1.
"""

from __future__ import annotations


def fib(n: int) -> int:
    """The n-th Fibonacci number, F0 = 0."""
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def symmetric_pair(n: int) -> tuple[int, int]:
    """(F(2n+1), F(2n+3)) for n >= 1; e.g. n=1 gives (2, 5)."""
    if n < 1:
        raise ValueError(f"pair index must be >= 1, got {n}")
    return fib(2 * n + 1), fib(2 * n + 3)


def kuch_pair(n: int) -> tuple[int, int]:
    """(F(6n-1), F(6n+1)) for n >= 1; e.g. n=1 gives (5, 13).

    Both entries are odd: F(m) is even iff 3 | m, and 6n-1, 6n+1 are
    never multiples of 3.
    """
    if n < 1:
        raise ValueError(f"pair index must be >= 1, got {n}")
    return fib(6 * n - 1), fib(6 * n + 1)

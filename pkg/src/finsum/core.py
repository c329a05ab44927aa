"""Exact arithmetic primitives shared by every sum in the package.

All rational values are `fractions.Fraction`, which normalizes on
construction (positive denominator, reduced terms), so equality of
values is equality of objects.  Integer floor division is Python's
``//``, which rounds toward minus infinity for negative operands; that
convention is load-bearing for the sums defined on negative arguments.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = int | Fraction


def floor_div(p: int, q: int) -> int:
    """Floor of p/q, rounding toward minus infinity.

    Raises ZeroDivisionError when q == 0.
    """
    if q == 0:
        raise ZeroDivisionError("floor_div: zero divisor")
    return p // q


def sawtooth(x: Rational) -> Fraction:
    """The sawtooth ((x)): x - floor(x) - 1/2 off the integers, 0 on them.

    Odd and 1-periodic: ((-x)) == -((x)) and ((x + 1)) == ((x)).
    """
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - (x.numerator // x.denominator) - Fraction(1, 2)


def gcd(a: int, b: int) -> int:
    """Nonnegative greatest common divisor; gcd(0, 0) == 0."""
    return math.gcd(a, b)


def is_coprime(a: int, b: int) -> bool:
    return math.gcd(a, b) == 1


def neg_one_pow(n: int) -> int:
    """(-1)**n for arbitrary integer n, computed from parity."""
    return -1 if n & 1 else 1

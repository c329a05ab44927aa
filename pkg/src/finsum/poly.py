"""Sparse bivariate polynomials over the integers, and the two-term
floor-encoding identity

    (u - 1) sum_{x=1}^{a-1} u^(x-1) v^[bx/a]
  + (v - 1) sum_{y=1}^{b-1} v^(y-1) u^[ay/b]  =  u^(a-1) v^(b-1) - 1

for coprime positive a, b.  Differentiating with respect to u and
substituting u = v = -1 turns the exponent floors into the alternating
floor sums of the sums module; derivative_bridge checks that chain of
equalities exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .core import is_coprime, neg_one_pow
from .sums import HardyKind, b1_sum, hardy_sum

ExpPair = tuple[int, int]


class BivarPoly:
    """Polynomial in u, v stored as {(i, j): coefficient}, zeros absent.

    Coefficients are ints; exponents are nonnegative.  Equality is
    structural, which for this normal form is polynomial equality.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[ExpPair, int] | None = None):
        clean: dict[ExpPair, int] = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent pair ({i}, {j})")
                if c:
                    clean[(i, j)] = c
        self._terms = clean

    @classmethod
    def zero(cls) -> "BivarPoly":
        return cls()

    @classmethod
    def one(cls) -> "BivarPoly":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, coef: int, i: int, j: int) -> "BivarPoly":
        return cls({(i, j): coef})

    def terms(self) -> dict[ExpPair, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "BivarPoly") -> "BivarPoly":
        if not isinstance(other, BivarPoly):
            return NotImplemented
        acc = dict(self._terms)
        for key, c in other._terms.items():
            s = acc.get(key, 0) + c
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
        out = BivarPoly()
        out._terms = acc
        return out

    def __neg__(self) -> "BivarPoly":
        out = BivarPoly()
        out._terms = {key: -c for key, c in self._terms.items()}
        return out

    def __sub__(self, other: "BivarPoly") -> "BivarPoly":
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "BivarPoly") -> "BivarPoly":
        if not isinstance(other, BivarPoly):
            return NotImplemented
        acc: dict[ExpPair, int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                s = acc.get(key, 0) + c1 * c2
                if s:
                    acc[key] = s
                else:
                    acc.pop(key, None)
        out = BivarPoly()
        out._terms = acc
        return out

    def partial_u(self) -> "BivarPoly":
        """Formal partial derivative with respect to u."""
        out = BivarPoly()
        out._terms = {
            (i - 1, j): c * i for (i, j), c in self._terms.items() if i > 0
        }
        return out

    def evaluate(self, u0: int | Fraction, v0: int | Fraction) -> Fraction:
        u0, v0 = Fraction(u0), Fraction(v0)
        total = Fraction(0)
        for (i, j), c in self._terms.items():
            total += c * u0**i * v0**j
        return total

    def __repr__(self) -> str:
        return f"BivarPoly({self._terms!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self._terms.items(), reverse=True):
            factors = []
            if abs(c) != 1 or (i == 0 and j == 0):
                factors.append(str(abs(c)))
            if i:
                factors.append("u" if i == 1 else f"u**{i}")
            if j:
                factors.append("v" if j == 1 else f"v**{j}")
            text = "*".join(factors)
            parts.append(("- " if c < 0 else "+ ") + text)
        joined = " ".join(parts)
        return joined[2:] if joined.startswith("+ ") else "-" + joined[2:]


def poly_add(p: BivarPoly, q: BivarPoly) -> BivarPoly:
    return p + q


def poly_neg(p: BivarPoly) -> BivarPoly:
    return -p


def poly_mul(p: BivarPoly, q: BivarPoly) -> BivarPoly:
    return p * q


def poly_partial_u(p: BivarPoly) -> BivarPoly:
    return p.partial_u()


def poly_eval(p: BivarPoly, u0: int | Fraction, v0: int | Fraction) -> Fraction:
    return p.evaluate(u0, v0)


def _require_pair(a: int, b: int, coprime: bool) -> None:
    if a <= 0 or b <= 0:
        raise ValueError(f"arguments must be positive, got ({a}, {b})")
    if coprime and not is_coprime(a, b):
        raise ValueError(f"arguments must be coprime, got gcd({a}, {b}) > 1")


def two_term_lhs(a: int, b: int) -> BivarPoly:
    """(u-1) sum_{x=1}^{a-1} u^(x-1) v^[bx/a] + (v-1) sum_{y=1}^{b-1} v^(y-1) u^[ay/b]."""
    _require_pair(a, b, coprime=True)
    first: dict[ExpPair, int] = {}
    for x in range(1, a):
        key = (x - 1, b * x // a)
        first[key] = first.get(key, 0) + 1
    second: dict[ExpPair, int] = {}
    for y in range(1, b):
        key = (a * y // b, y - 1)
        second[key] = second.get(key, 0) + 1
    u_minus_1 = BivarPoly({(1, 0): 1, (0, 0): -1})
    v_minus_1 = BivarPoly({(0, 1): 1, (0, 0): -1})
    return u_minus_1 * BivarPoly(first) + v_minus_1 * BivarPoly(second)


def two_term_rhs(a: int, b: int) -> BivarPoly:
    """u^(a-1) v^(b-1) - 1."""
    _require_pair(a, b, coprime=False)
    terms = {(a - 1, b - 1): 1}
    terms[(0, 0)] = terms.get((0, 0), 0) - 1
    return BivarPoly(terms)


def verify_two_term(a: int, b: int) -> bool:
    """True iff the two-term relation holds for (a, b), checked symbolically."""
    _require_pair(a, b, coprime=True)
    return two_term_lhs(a, b) == two_term_rhs(a, b)


@dataclass(frozen=True)
class BridgeReport:
    """Outcome of differentiating the two-term relation in u at u = v = -1.

    The derivative admits a decomposition into alternating floor sums
    whose first term is an S-type sum; the argument order of that S is
    ambiguous in print, so both candidates are evaluated and the report
    records which one matches the symbolic derivative.

        via_s_kh = -S(k,h) - 2*sum_{x=1}^{h-1} x(-1)^(x+[kx/h]) - 2*B1(h,k)
        via_s_hk = -S(h,k) - 2*sum_{x=1}^{h-1} x(-1)^(x+[kx/h]) - 2*B1(h,k)

    closed_form is (h-1)(-1)^(h+k-1), the derivative of the right side.
    """

    h: int
    k: int
    derivative_value: Fraction
    closed_form: Fraction
    via_s_kh: Fraction
    via_s_hk: Fraction
    matches_closed_form: bool
    matches_s_kh: bool
    matches_s_hk: bool


def derivative_bridge(h: int, k: int) -> BridgeReport:
    """Evaluate d/du of the two-term relation's left side at u = v = -1
    and compare against the closed form and both S decompositions.

    Requires coprime positive h, k with h + k odd (the decomposition's
    hypothesis).
    """
    _require_pair(h, k, coprime=True)
    if (h + k) % 2 == 0:
        raise ValueError(f"derivative bridge requires h + k odd, got ({h}, {k})")
    deriv = two_term_lhs(h, k).partial_u().evaluate(-1, -1)
    closed = Fraction((h - 1) * neg_one_pow(h + k - 1))
    t_acc = 0
    for x in range(1, h):
        q = k * x // h
        t_acc += -x if (x + q) & 1 else x
    common = -2 * t_acc - 2 * b1_sum(h, k)
    via_kh = -hardy_sum(HardyKind.S, k, h) + common
    via_hk = -hardy_sum(HardyKind.S, h, k) + common
    return BridgeReport(
        h=h,
        k=k,
        derivative_value=deriv,
        closed_form=closed,
        via_s_kh=via_kh,
        via_s_hk=via_hk,
        matches_closed_form=deriv == closed,
        matches_s_kh=deriv == via_kh,
        matches_s_hk=deriv == via_hk,
    )

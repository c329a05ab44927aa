from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finsum.poly import (
    BivarPoly,
    derivative_bridge,
    poly_add,
    poly_eval,
    poly_mul,
    poly_neg,
    poly_partial_u,
    two_term_lhs,
    two_term_rhs,
    verify_two_term,
)

U = BivarPoly({(1, 0): 1})
V = BivarPoly({(0, 1): 1})
ONE = BivarPoly.one()


def small_polys():
    coef = st.integers(-4, 4)
    exps = st.tuples(st.integers(0, 4), st.integers(0, 4))
    return st.dictionaries(exps, coef, max_size=6).map(BivarPoly)


class TestBivarPoly:
    def test_zero_coefficients_dropped(self):
        assert BivarPoly({(1, 1): 0, (0, 0): 2}).terms() == {(0, 0): 2}
        assert BivarPoly().is_zero()
        assert BivarPoly.zero() == BivarPoly({})

    def test_negative_exponents_rejected(self):
        with pytest.raises(ValueError):
            BivarPoly({(-1, 0): 1})

    def test_add_cancels(self):
        p = BivarPoly({(1, 2): 3, (0, 0): -1})
        assert poly_add(p, poly_neg(p)).is_zero()

    def test_simple_identities(self):
        u_minus_1 = U - ONE
        assert poly_add(u_minus_1, ONE) == U
        assert poly_mul(u_minus_1, U + ONE) == BivarPoly({(2, 0): 1, (0, 0): -1})

    def test_mul_expands(self):
        p = poly_mul(U + V, U + V)
        assert p == BivarPoly({(2, 0): 1, (1, 1): 2, (0, 2): 1})

    def test_partial_u(self):
        p = BivarPoly({(2, 1): 1, (1, 0): 4, (0, 3): 7})
        assert poly_partial_u(p) == BivarPoly({(1, 1): 2, (0, 0): 4})

    def test_eval(self):
        p = BivarPoly({(1, 2): 1, (0, 0): -1})  # u v^2 - 1
        assert poly_eval(p, -1, -1) == -2
        assert poly_eval(p, Fraction(1, 2), 2) == 1
        assert poly_eval(BivarPoly.zero(), 3, 4) == 0

    def test_str(self):
        assert str(BivarPoly.zero()) == "0"
        assert str(BivarPoly({(1, 2): 1, (0, 0): -1})) == "u*v**2 - 1"
        assert str(BivarPoly({(2, 0): -3})) == "-3*u**2"

    @settings(max_examples=50)
    @given(small_polys(), small_polys())
    def test_mul_commutative(self, p, q):
        assert poly_mul(p, q) == poly_mul(q, p)

    @settings(max_examples=50)
    @given(small_polys(), small_polys(), small_polys())
    def test_mul_associative(self, p, q, r):
        assert poly_mul(poly_mul(p, q), r) == poly_mul(p, poly_mul(q, r))

    @settings(max_examples=50)
    @given(small_polys(), small_polys(), small_polys())
    def test_mul_distributes(self, p, q, r):
        assert poly_mul(p, poly_add(q, r)) == poly_add(poly_mul(p, q), poly_mul(p, r))

    @settings(max_examples=40)
    @given(small_polys(), small_polys())
    def test_eval_is_ring_hom(self, p, q):
        u0, v0 = Fraction(2, 3), Fraction(-3, 2)
        assert poly_eval(poly_mul(p, q), u0, v0) == poly_eval(p, u0, v0) * poly_eval(
            q, u0, v0
        )


class TestTwoTerm:
    def test_frozen_small_cases(self):
        assert two_term_lhs(2, 3).terms() == {(1, 2): 1, (0, 0): -1}
        assert two_term_rhs(2, 3).terms() == {(1, 2): 1, (0, 0): -1}
        assert two_term_lhs(1, 5) == BivarPoly({(0, 4): 1, (0, 0): -1})
        assert two_term_rhs(1, 1).is_zero()
        assert two_term_rhs(4, 7) == BivarPoly({(3, 6): 1, (0, 0): -1})

    def test_verify_small_sweep(self):
        for a in range(1, 16):
            for b in range(1, 16):
                if gcd(a, b) == 1:
                    assert verify_two_term(a, b), (a, b)

    def test_requires_coprime(self):
        with pytest.raises(ValueError):
            two_term_lhs(2, 4)
        with pytest.raises(ValueError):
            verify_two_term(6, 9)
        with pytest.raises(ValueError):
            two_term_lhs(0, 3)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(1, 60), st.integers(1, 60))
    def test_verify_random(self, a, b):
        g = gcd(a, b)
        assert verify_two_term(a // g, b // g)


class TestDerivativeBridge:
    def test_example_pair(self):
        report = derivative_bridge(3, 2)
        assert report.derivative_value == 2
        assert report.closed_form == 2
        assert report.matches_closed_form
        assert report.matches_s_kh
        # the other argument order does not match here
        assert not report.matches_s_hk

    def test_h_equal_one(self):
        report = derivative_bridge(1, 2)
        assert report.derivative_value == 0
        assert report.matches_closed_form
        assert report.matches_s_kh

    def test_sweep(self):
        s_hk_mismatch = 0
        for h in range(1, 21):
            for k in range(1, 21):
                if gcd(h, k) == 1 and (h + k) % 2 == 1:
                    report = derivative_bridge(h, k)
                    assert report.matches_closed_form, (h, k)
                    assert report.matches_s_kh, (h, k)
                    if not report.matches_s_hk:
                        s_hk_mismatch += 1
        # the S(h,k) reading is not merely equivalent notation
        assert s_hk_mismatch > 0

    def test_hypotheses_enforced(self):
        with pytest.raises(ValueError):
            derivative_bridge(3, 5)  # h + k even
        with pytest.raises(ValueError):
            derivative_bridge(2, 4)
        with pytest.raises(ValueError):
            derivative_bridge(-3, 2)

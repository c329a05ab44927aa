"""Exact Dedekind- and Hardy-type finite sums: evaluation, identity
verification with counterexample search, and polynomial and
trigonometric cross-checks.
"""

__version__ = "0.1.0"

from .core import Rational, floor_div, gcd, is_coprime, neg_one_pow, sawtooth
from .fib import fib, kuch_pair, symmetric_pair
from .identities import (
    CheckReport,
    Identity,
    LawViolationError,
    NotApplicableError,
    ScanReport,
    UnknownIdentityError,
    b1_signed,
    check_identity,
    check_report_from_dict,
    check_report_to_dict,
    get_identity,
    law_ids,
    registry,
    resolve_ids,
    scan,
    scan_report_from_dict,
    scan_report_to_dict,
)
from .poly import (
    BivarPoly,
    BridgeReport,
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
from .series import (
    FINITE_KINDS,
    INFINITE_KINDS,
    PoleError,
    SeriesKind,
    SeriesResult,
    convergence_table,
    cot_pi,
    finite_series,
    infinite_series,
    series_applies,
    tan_pi,
)
from .sums import (
    HardyKind,
    ParityClass,
    b1_sum,
    b1_variant_no_j,
    c1_sum,
    dedekind_fast,
    dedekind_naive,
    hardy_sum,
    mixed_sum,
    parity_class,
    s5_alt,
    simsek_Y,
    y_multi,
)

__all__ = [
    "Rational",
    "floor_div",
    "gcd",
    "is_coprime",
    "neg_one_pow",
    "sawtooth",
    "fib",
    "kuch_pair",
    "symmetric_pair",
    "CheckReport",
    "Identity",
    "LawViolationError",
    "NotApplicableError",
    "ScanReport",
    "UnknownIdentityError",
    "b1_signed",
    "check_identity",
    "check_report_from_dict",
    "check_report_to_dict",
    "get_identity",
    "law_ids",
    "registry",
    "resolve_ids",
    "scan",
    "scan_report_from_dict",
    "scan_report_to_dict",
    "BivarPoly",
    "BridgeReport",
    "derivative_bridge",
    "poly_add",
    "poly_eval",
    "poly_mul",
    "poly_neg",
    "poly_partial_u",
    "two_term_lhs",
    "two_term_rhs",
    "verify_two_term",
    "FINITE_KINDS",
    "INFINITE_KINDS",
    "PoleError",
    "SeriesKind",
    "SeriesResult",
    "convergence_table",
    "cot_pi",
    "finite_series",
    "infinite_series",
    "series_applies",
    "tan_pi",
    "HardyKind",
    "ParityClass",
    "b1_sum",
    "b1_variant_no_j",
    "c1_sum",
    "dedekind_fast",
    "dedekind_naive",
    "hardy_sum",
    "mixed_sum",
    "parity_class",
    "s5_alt",
    "simsek_Y",
    "y_multi",
]

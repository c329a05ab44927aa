from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import finsum.identities as identities
from finsum.core import floor_div, neg_one_pow
from finsum.identities import (
    CONJECTURE,
    LAW,
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
from finsum.sums import b1_sum

ALL_IDS = [
    "DED-REC",
    "S-REC",
    "S-VAN",
    "S5-REC",
    "S5-VAN",
    "EF1",
    "EF2",
    "EF3",
    "EF4",
    "EF5",
    "EF6",
    "EF-VANISH-S",
    "EF-VANISH-S1",
    "EF-VANISH-S2",
    "EF-VANISH-S3",
    "EF-VANISH-S4",
    "EF-VANISH-S5",
    "EWSS",
    "Y-S5",
    "Y-REC",
    "C1-ODD",
    "PEELA",
    "B1-NEG",
    "B1-S",
    "B1-S5",
    "B1-Y",
    "B1-MIX",
    "B1-REC",
    "B1-DED1",
    "B1-DED2",
    "B1-DED3",
    "Y1-A",
    "Y1-B",
    "FIB-SYM",
    "FIB-KUCH",
    "FIB-B1",
]


class TestRegistry:
    def test_complete_and_ordered(self):
        assert [ident.id for ident in registry()] == ALL_IDS

    def test_modes(self):
        conjectures = {i.id for i in registry() if i.mode == CONJECTURE}
        assert conjectures == {"Y1-A", "Y1-B"}
        assert len(law_ids()) == len(ALL_IDS) - 2

    def test_lookup(self):
        assert get_identity("DED-REC").mode == LAW
        with pytest.raises(UnknownIdentityError):
            get_identity("NOPE")

    def test_registry_examples(self):
        r = check_identity("S-REC", 5, 2)
        assert r.passed and r.lhs == 1 and r.rhs == 1
        r = check_identity("B1-REC", 3, 5)
        assert r.passed and r.lhs == 4 and r.rhs == 4
        r = check_identity("Y-REC", 1, 3)
        assert r.passed and r.lhs == 4 and r.rhs == 4


class TestResolveIds:
    def test_all_in_registry_order(self):
        assert resolve_ids(["all"]) == ALL_IDS

    def test_all_laws(self):
        names = resolve_ids(["all-laws"])
        assert "Y1-A" not in names and "Y1-B" not in names
        assert names == [i for i in ALL_IDS if i not in ("Y1-A", "Y1-B")]

    def test_vanish_group(self):
        assert resolve_ids(["EF-VANISH"]) == [
            "EF-VANISH-S",
            "EF-VANISH-S1",
            "EF-VANISH-S2",
            "EF-VANISH-S3",
            "EF-VANISH-S4",
            "EF-VANISH-S5",
        ]

    def test_dedup_preserves_first_position(self):
        assert resolve_ids(["S-REC", "all-laws"])[0] == "S-REC"
        assert resolve_ids(["S-REC", "S-REC"]) == ["S-REC"]

    def test_unknown_raises(self):
        with pytest.raises(UnknownIdentityError):
            resolve_ids(["S-REC", "BOGUS"])


class TestCheckIdentity:
    def test_pass_examples(self):
        r = check_identity("B1-S", 3, 2)
        assert r.passed and r.lhs == 1 and r.rhs == 1
        r = check_identity("C1-ODD", 1, 3)
        assert r.passed and r.lhs == Fraction(1, 3)

    def test_fail_example(self):
        r = check_identity("Y1-B", 5, 2)
        assert not r.passed
        assert r.lhs == -4 and r.rhs == -8

    def test_not_applicable(self):
        with pytest.raises(NotApplicableError):
            check_identity("B1-S", 3, 3)  # h + k even
        with pytest.raises(NotApplicableError):
            check_identity("DED-REC", 2, 6)  # not coprime
        with pytest.raises(NotApplicableError):
            check_identity("FIB-KUCH", 3, 5)  # not in the pair family

    def test_unknown(self):
        with pytest.raises(UnknownIdentityError):
            check_identity("NOPE", 1, 2)


class TestB1Signed:
    def test_extends_b1(self):
        assert b1_signed(3, 2) == b1_sum(3, 2)

    def test_rejects_zero_modulus(self):
        with pytest.raises(ValueError):
            b1_signed(3, 0)

    def test_matches_definitional_evaluation(self):
        # independent route: per-term floor and sign, no integer kernel
        for h in range(-7, 8):
            for k in list(range(-7, 0)) + list(range(1, 8)):
                expected = Fraction(0)
                for j in range(1, abs(k)):
                    q = floor_div(h * j, k)
                    expected += q * neg_one_pow(j + q)
                assert b1_signed(h, k) == expected, (h, k)

    @given(st.integers(-60, 60), st.integers(1, 60))
    def test_negation_symmetry(self, h, k):
        assert b1_signed(-h, -k) == b1_signed(h, k)


class TestScan:
    def test_s_rec_clean(self):
        report = scan(["S-REC"], 30, 30)[0]
        assert report.checked > 0
        assert report.failures == ()

    def test_b1_neg_clean(self):
        report = scan(["B1-NEG"], 20, 20)[0]
        assert report.failures == ()

    def test_y1_adjudication(self):
        reports = scan(["Y1-A", "Y1-B"], 30, 30)
        by_id = {r.identity: r for r in reports}
        assert by_id["Y1-A"].failures == ()
        failing = {(f.h, f.k): f for f in by_id["Y1-B"].failures}
        assert (5, 2) in failing
        assert failing[(5, 2)].lhs == -4
        assert failing[(5, 2)].rhs == -8

    def test_failures_sorted(self):
        report = scan(["Y1-B"], 25, 25)[0]
        keys = [(f.h, f.k) for f in report.failures]
        assert keys == sorted(keys)

    def test_bounds_validated(self):
        with pytest.raises(ValueError):
            scan(["S-REC"], 0, 10)
        with pytest.raises(ValueError):
            scan(["S-REC"], 10, 10, jobs=0)

    def test_parallel_matches_sequential(self):
        ids = ["S-REC", "B1-REC", "Y1-B"]
        seq = scan(ids, 20, 20, jobs=1)
        par = scan(ids, 20, 20, jobs=3)
        strip = lambda r: (r.identity, r.h_max, r.k_max, r.checked, r.failures)
        assert [strip(r) for r in seq] == [strip(r) for r in par]

    def test_law_violation_aborts(self, monkeypatch):
        bogus = Identity(
            id="BOGUS-LAW",
            description="always fails off the diagonal",
            mode=LAW,
            applies=lambda h, k: h >= 1 and k >= 1,
            lhs=lambda h, k: Fraction(h),
            rhs=lambda h, k: Fraction(k),
        )
        monkeypatch.setattr(identities, "_registry_map", lambda: {"BOGUS-LAW": bogus})
        with pytest.raises(LawViolationError) as exc_info:
            scan(["BOGUS-LAW"], 3, 3)
        assert "BOGUS-LAW" in str(exc_info.value)
        assert exc_info.value.report.failures


class TestEquivalentForms:
    def test_sum_odd_b1_forms_agree(self):
        rhs_a = get_identity("B1-S").rhs
        rhs_b = get_identity("B1-DED1").rhs
        rhs_c = get_identity("B1-DED2").rhs
        for h in range(1, 31):
            for k in range(1, 31):
                if gcd(h, k) == 1 and (h + k) % 2 == 1:
                    vals = {rhs_a(h, k), rhs_b(h, k), rhs_c(h, k), b1_sum(h, k)}
                    assert len(vals) == 1, (h, k)

    def test_both_odd_b1_forms_agree(self):
        rhs_a = get_identity("B1-S5").rhs
        rhs_b = get_identity("B1-Y").rhs
        rhs_c = get_identity("B1-DED3").rhs
        for h in range(1, 31, 2):
            for k in range(1, 31, 2):
                if gcd(h, k) == 1:
                    vals = {rhs_a(h, k), rhs_b(h, k), rhs_c(h, k), b1_sum(h, k)}
                    assert len(vals) == 1, (h, k)


class TestSerialization:
    def test_check_report_round_trip(self):
        report = check_identity("Y1-B", 5, 2)
        assert check_report_from_dict(check_report_to_dict(report)) == report

    def test_check_report_dict_shape(self):
        d = check_report_to_dict(check_identity("C1-ODD", 1, 3))
        assert d == {
            "id": "C1-ODD",
            "h": 1,
            "k": 3,
            "lhs": "1/3",
            "rhs": "1/3",
            "pass": True,
        }

    def test_scan_report_round_trip(self):
        report = scan(["Y1-B"], 12, 12)[0]
        assert scan_report_from_dict(scan_report_to_dict(report)) == report

    def test_fractions_serialized_as_strings(self):
        d = scan_report_to_dict(scan(["Y1-B"], 12, 12)[0])
        for f in d["failures"]:
            assert isinstance(f["lhs"], str) and isinstance(f["rhs"], str)

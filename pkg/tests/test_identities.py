"""The identity registry: statuses, counterexamples, grids, determinism."""

import json
from fractions import Fraction as F

import pytest

from umbralkit import (
    DomainError,
    IdentityReport,
    UnknownIdentity,
    aggregate_pass,
    b2_convolution,
    b2_convolution_enumerated,
    bernoulli_value,
    default_grid,
    describe,
    narumi_value,
    run_registry,
    verify_identity,
)
from umbralkit.identities import IDENTITY_TAGS, verify_identity_report_errors


class TestSingleIdentities:
    @pytest.mark.parametrize(
        "tag,params",
        [
            ("C5", {}),
            ("T2", {"a": 1, "b": F(1), "lam": None}),
            ("T3", {"a": 2, "b": F(1), "c": F(1)}),
            ("T4", {"a": -1}),
            ("R27", {"a": 1}),
            ("T6", {"a": 1, "c": F(-1), "lam": None}),
            ("T7", {"c": F(1, 3)}),
            ("R35", {"c": F(1)}),
            ("P8", {"a": 1, "c": F(1), "lam": None}),
            ("T9", {"c": F(-1)}),
            ("T10", {"a": 1, "b": F(2), "c": F(-1), "m": 1, "lam": None}),
            ("DAE", {"lam": None}),
            ("E14", {"a": F(2)}),
            ("E25", {}),
        ],
    )
    def test_passes(self, tag, params):
        report = verify_identity(tag, params, 4)
        assert report.status == "pass"
        assert report.counterexamples == ()
        assert report.ok

    def test_t2_first_degree_value(self):
        # S_1(x) = b H_1^(1)(x|L): hand expansion of (e^{bt}-1)/t at t=0 is b
        from umbralkit import QL, sheffer_transfer, bespoke_pair, frobenius_euler_poly

        b = F(3)
        pair = bespoke_pair("T2", 8, order=1, b=b, lam=None)
        got = sheffer_transfer(pair, 1)
        assert got == frobenius_euler_poly(1, 1) * QL.coerce(b)

    def test_lambda_specialization_matches(self):
        for tag, params in [
            ("T2", {"a": 1, "b": F(2)}),
            ("T6", {"a": 2, "c": F(1, 3)}),
            ("P8", {"a": -1, "c": F(-1)}),
            ("T10", {"a": 1, "b": F(1), "c": F(1), "m": 2}),
            ("DAE", {}),
        ]:
            for lam0 in (F(-1), F(2), F(1, 2)):
                report = verify_identity(tag, {**params, "lam": lam0}, 3)
                assert report.status == "pass", (tag, lam0, report)


class TestR42:
    def test_discrepancy(self):
        report = verify_identity("R42", {}, 8)
        assert report.status == "paper_discrepancy"
        first = report.counterexamples[0]
        assert first.indices == (1, 1)
        assert first.lhs == "-1/2"
        assert first.rhs == "1/2"
        assert "Stirling-1" in report.note
        assert report.ok

    def test_corrected_form_passes(self):
        # the S1 variant agrees with the direct expansion through n = 8
        from umbralkit import binom, narumi_number, stirling1

        for n in range(1, 9):
            for l in range(n + 1):
                assert narumi_number(n, l) == stirling1(l + n, n) / binom(l + n, n)


class TestConvolutionOracles:
    def test_series_vs_enumeration(self):
        for c in (F(1), F(-2), F(1, 2)):
            for n in range(1, 4):
                for l in range(3):
                    assert b2_convolution(n, l, c) == b2_convolution_enumerated(
                        n, l, c
                    )

    def test_matches_bernoulli_route(self):
        c = F(1)
        assert b2_convolution(1, 1, c) == bernoulli_value(1, 1, c + 1) == F(3, 2)

    def test_matches_narumi_route(self):
        c = F(1)
        assert narumi_value(-1, 1, c) == F(3, 2)


class TestDomainHandling:
    def test_unknown_identity(self):
        with pytest.raises(UnknownIdentity):
            verify_identity("T99", {}, 4)
        with pytest.raises(UnknownIdentity):
            describe("nope")

    def test_c_zero_rejected(self):
        with pytest.raises(DomainError):
            verify_identity("T6", {"a": 1, "c": F(0), "lam": None}, 4)

    def test_b_zero_rejected(self):
        with pytest.raises(DomainError):
            verify_identity("T2", {"a": 1, "b": F(0), "lam": None}, 4)

    def test_e14_zero_a_rejected(self):
        with pytest.raises(DomainError):
            verify_identity("E14", {"a": F(0)}, 4)

    def test_lambda_one_rejected(self):
        with pytest.raises(DomainError):
            verify_identity("DAE", {"lam": F(1)}, 4)

    def test_unknown_parameter_rejected(self):
        with pytest.raises(DomainError):
            verify_identity("C5", {"c": F(1)}, 4)

    def test_grid_entry_becomes_domain_error_report(self):
        report = verify_identity_report_errors("T6", {"a": 1, "c": F(0), "lam": None}, 4)
        assert report.status == "domain_error"
        assert "c != 0" in report.note
        assert not report.ok

    def test_registry_with_bad_entry(self):
        reports = run_registry([("T6", {"a": 1, "c": F(0), "lam": None})], 4)
        assert reports[0].status == "domain_error"
        assert not aggregate_pass(reports)


class TestRegistry:
    def test_default_grid_covers_all_tags(self):
        tags = {tag for tag, _ in default_grid()}
        assert tags == set(IDENTITY_TAGS)

    def test_deterministic(self):
        grid = [("C5", {}), ("T9", {"c": F(1)}), ("R42", {})]
        a = run_registry(grid, 5)
        b = run_registry(list(reversed(grid)), 5)
        assert a == b  # sorted output order, identical reports

    def test_empty_grid(self):
        assert run_registry([], 4) == []
        assert aggregate_pass([])

    def test_report_json_schema(self):
        report = verify_identity("T9", {"c": F(1, 3)}, 3)
        data = json.loads(report.to_json())
        assert set(data) == {"id", "params", "n_max", "status", "counterexamples", "note"}
        assert data["id"] == "T9"
        assert data["params"] == {"c": "1/3"}
        assert data["n_max"] == 3
        assert data["status"] == "pass"
        assert data["counterexamples"] == []

    def test_counterexample_rendering(self):
        report = verify_identity("R42", {}, 2)
        data = report.to_dict()
        first = data["counterexamples"][0]
        assert first == {"indices": [1, 1], "lhs": "-1/2", "rhs": "1/2"}

    def test_ok_semantics(self):
        fake_fail = IdentityReport("C5", (), 4, "fail")
        undocumented = IdentityReport("C5", (), 4, "paper_discrepancy")
        assert not fake_fail.ok
        assert not undocumented.ok  # discrepancy without a note is not ok

"""
Unit Tests for the Weighted Copson Inequality

Reports, remainder identity and the pointwise lemma scans.
"""

import math

import numpy as np
import pytest

from src.copson.lemmas import LEMMAS, lemma_grid, lemma_margins_at, lemma_report
from src.copson.reports import (
    COPSON_IDENTITY_CHECK,
    copson_identity,
    copson_identity_residual,
    copson_report,
    improved_copson_report,
)
from src.copson.terms import CopsonTerms
from src.core.errors import AssertionViolation, InputError
from src.core.sequences import FiniteSequence
from src.inequalities.report import InequalityCheck, ReportFlag


class TestCopsonReport:
    """Tests for Σ V_n|A_n|^2 <= Σ S_n^{2-c}|ΔA_n|^2/n."""

    def test_single_entry(self):
        report = improved_copson_report(FiniteSequence.from_values([1.0]))

        assert report.check == InequalityCheck.COPSON_IMPROVED
        assert report.lhs == pytest.approx(1.0 + math.sqrt(3.0) / 2.0)
        assert report.weighted_sum == pytest.approx(0.6412805, abs=1e-7)
        assert report.classical_sum == pytest.approx(0.0625)
        assert report.proven
        report.assert_valid()

    def test_generic_exponent_matches_improved(self):
        A = FiniteSequence.from_values([1.0, -0.5, 2.0j])
        generic = copson_report(A, 1.5)
        improved = improved_copson_report(A)

        assert generic.check == InequalityCheck.COPSON
        assert generic.lhs == improved.lhs
        assert generic.weighted_sum == improved.weighted_sum

    @pytest.mark.parametrize("c", [1.1, 1.2, 1.8, 2.0])
    def test_other_exponents_are_exploratory(self, random_sequences, c):
        for A in random_sequences(20):
            report = copson_report(A, c)

            assert not report.proven
            assert ReportFlag.UNPROVEN in report.flags
            assert report.holds

    def test_random_inputs_hold(self, random_sequences):
        for A in random_sequences(100):
            improved_copson_report(A).assert_valid()

    def test_rejects_exponent_out_of_range(self):
        with pytest.raises(InputError):
            copson_report(FiniteSequence.from_values([1.0]), 2.5)


class TestCopsonIdentity:
    """Tests for the Copson remainder identity."""

    @pytest.mark.parametrize("c", [1.1, 1.5, 2.0])
    def test_random_inputs(self, random_sequences, c):
        for A in random_sequences(200):
            report = copson_identity(A, c)

            assert report.check == COPSON_IDENTITY_CHECK
            assert copson_identity_residual(A, c) <= 1e-10 * max(1.0, report.lhs)
            report.assert_valid()

    def test_zero_sequence(self):
        assert copson_identity_residual(FiniteSequence.zeros(), 1.5) == 0.0


class TestCopsonTerms:
    """Tests for the triangular-number data."""

    def test_values(self):
        terms = CopsonTerms.at(3)

        assert terms.S_n == 6
        assert terms.S_next == 10
        assert terms.tau_n == pytest.approx((math.sqrt(3) - math.sqrt(2)) / 3)
        assert terms.scale(2.0) == pytest.approx(1.0 / 3.0)

    def test_rejects_zero_index(self):
        with pytest.raises(InputError):
            CopsonTerms.at(0)


class TestLemmaScans:
    """Tests for the pointwise lemmas behind the improved weight."""

    def test_margins_at_one(self):
        margins = lemma_margins_at(1.5, 1)

        assert margins["monotone-scale"] == pytest.approx(1.0 - math.sqrt(3.0) / 2.0)
        assert margins["midpoint-above-comparator"] == pytest.approx(0.1708, abs=1e-4)
        assert margins["weight-chain"] == min(
            margins["weight-above-midpoint"], margins["midpoint-above-comparator"]
        )

    def test_monotone_scale_fails_below_range(self):
        """P_1 - P_2 = 1 - 3^{0.8}/2 < 0 at c = 1.2."""
        margin = lemma_margins_at(1.2, 1)["monotone-scale"]

        assert margin == pytest.approx(1.0 - 3.0 ** 0.8 / 2.0)
        assert margin == pytest.approx(-0.2041, abs=1e-4)

    @pytest.mark.parametrize("c", [1.2, 1.5, 2.0])
    @pytest.mark.parametrize("n", [1, 2, 17, 1000])
    def test_scalar_and_vector_agree(self, c, n):
        scalar = lemma_margins_at(c, n)

        for lemma in LEMMAS:
            vector = lemma.margin(c, np.array([n], dtype=np.int64))[0]
            assert vector == pytest.approx(scalar[lemma.lemma_id], rel=1e-9, abs=1e-15)

    def test_all_lemmas_hold_at_three_halves(self):
        report = lemma_report(1.5, 10 ** 5)

        for result in report.results:
            assert result.proven
            assert result.first_violation_n is None
            assert result.min_margin > 0.0

    @pytest.mark.parametrize("c", [1.5, 1.75, 2.0])
    @pytest.mark.parametrize("lemma_id", ["monotone-scale", "weight-above-midpoint"])
    def test_upper_range_lemmas_hold(self, c, lemma_id):
        result = lemma_report(c, 10 ** 5).result(lemma_id)

        assert result.proven
        assert result.first_violation_n is None
        assert result.min_margin > 0.0

    @pytest.mark.parametrize("c", [1.1, 1.3])
    def test_midpoint_above_comparator_holds(self, c):
        result = lemma_report(c, 10 ** 5).result("midpoint-above-comparator")

        assert result.proven
        assert result.first_violation_n is None
        assert result.min_margin > 0.0

    def test_exploratory_violation_recorded(self):
        """Below 3/2 the scale is not monotone; the scan records where."""
        report = lemma_report(1.2, 1000)
        result = report.result("monotone-scale")

        assert not result.proven
        assert result.first_violation_n == 1

    def test_strict_mode_raises_inside_proven_range(self, monkeypatch):
        """A lemma failing inside its proven range is an assertion violation."""
        from src.copson import lemmas

        broken = lemmas.CopsonLemma(
            "monotone-scale", "copson-monotone-scale",
            lambda c, ns: -lemmas.monotone_scale_margin(c, ns), 1.5, 2.0,
        )
        monkeypatch.setattr(lemmas, "LEMMAS", [broken])

        with pytest.raises(AssertionViolation) as excinfo:
            lemma_report(1.5, 10)

        assert excinfo.value.check == "copson-monotone-scale"
        assert excinfo.value.index == 1
        assert lemma_report(1.5, 10, strict=False).results[0].first_violation_n == 1

    def test_grid_rows(self):
        reports = lemma_grid([1.5, 2.0], 100)
        rows = [row for report in reports for row in report.rows()]

        assert len(rows) == 2 * len(LEMMAS)
        assert {row["c"] for row in rows} == {1.5, 2.0}
        assert set(rows[0]) >= {"c", "lemma_id", "min_margin", "argmin_n", "first_violation_n"}

    def test_rejects_short_scan(self):
        with pytest.raises(InputError):
            lemma_report(1.5, 1)

"""
Unit Tests for Inequality Reports

Difference-form Hardy reports, their remainder identities and the
coefficient-form classical and Copson inequalities with certified tails.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings as hsettings, strategies as st

from src.core.errors import AssertionViolation, InputError
from src.core.rules import ConstRule, LinearRule, PowerRule, SqrtRule
from src.core.sequences import FiniteSequence
from src.inequalities.classical import (
    classical_hardy_report,
    copson_general_report,
    copson_hardy_reduction,
    sharpness_ratio,
)
from src.inequalities.hardy import (
    HARDY_IDENTITY_CHECK,
    hardy_identity,
    hardy_identity_residual,
    hardy_remainder_squares,
    hardy_report,
    weighted_hardy_report,
)
from src.inequalities.report import InequalityCheck, InequalityReport, ReportFlag
from tests.conftest import finite_floats

IDENTITY_PAIRS = [
    (ConstRule(), SqrtRule()),
    (PowerRule(exponent=-0.5), PowerRule(exponent=0.3)),
    (LinearRule(), SqrtRule()),
]


class TestHardyReport:
    """Tests for the weighted Hardy inequality in difference form."""

    @pytest.fixture
    def unit_step(self):
        """A = (1, 0, 0, ...)."""
        return FiniteSequence.from_values([1.0])

    def test_single_entry(self, unit_step):
        report = hardy_report(unit_step, ConstRule(), SqrtRule())

        assert report.check == InequalityCheck.HARDY
        assert report.lhs == pytest.approx(2.0)
        assert report.weighted_sum == pytest.approx(2.0 - math.sqrt(2.0))
        assert report.remainder == pytest.approx(math.sqrt(2.0))
        assert report.classical_sum == pytest.approx(0.25)
        assert report.margin == pytest.approx(1.75 - math.sqrt(2.0))
        assert report.proven
        assert report.assert_valid() is report

    def test_zero_sequence_is_degenerate(self):
        report = hardy_report(FiniteSequence.zeros(), ConstRule(), SqrtRule())

        assert report.degenerate
        assert report.lhs == report.weighted_sum == report.remainder == 0.0
        report.assert_valid()

    def test_rejects_plateau(self):
        """Partial sums must vanish beyond their support."""
        with pytest.raises(InputError):
            hardy_report(FiniteSequence.from_values([1, 2], plateau=2), ConstRule(), SqrtRule())

    def test_random_inputs_hold(self, random_sequences):
        for A in random_sequences(50):
            for lam, g in IDENTITY_PAIRS:
                hardy_report(A, lam, g).assert_valid()

    def test_linear_g_is_unproven(self, unit_step):
        report = hardy_report(unit_step, ConstRule(), LinearRule())

        assert not report.proven
        assert ReportFlag.UNPROVEN in report.flags
        assert report.holds

    def test_power_report_alpha_zero_matches_keller(self, random_sequences):
        """w_n(0, 1/2) is Keller's weight, so both reports agree."""
        for A in random_sequences(10):
            power = weighted_hardy_report(A, 0.0, 0.5)
            keller = hardy_report(A, ConstRule(), SqrtRule())

            assert power.check == InequalityCheck.POWER
            assert power.lhs == pytest.approx(keller.lhs, rel=1e-14)
            assert power.weighted_sum == pytest.approx(keller.weighted_sum, rel=1e-12)

    def test_power_report_in_proven_range(self, random_sequences):
        for A in random_sequences(20):
            report = weighted_hardy_report(A, 0.5, 0.25).assert_valid()
            assert report.proven

    def test_to_row_columns(self, unit_step):
        row = hardy_report(unit_step, ConstRule(), SqrtRule()).to_row()

        assert row["check"] == InequalityCheck.HARDY
        assert row["tail_lo"] is None
        assert row["flags"] == ""

    def test_failed_report_raises(self):
        report = InequalityReport(
            check=InequalityCheck.HARDY, lhs=1.0, weighted_sum=2.0, remainder=-1.0,
            classical_sum=0.5, margin=1.5,
        )

        with pytest.raises(AssertionViolation) as excinfo:
            report.assert_valid()

        assert excinfo.value.check == InequalityCheck.HARDY

    def test_unproven_margin_only_warns(self):
        report = InequalityReport(
            check=InequalityCheck.HARDY, lhs=1.0, weighted_sum=0.1, remainder=0.9,
            classical_sum=0.5, margin=-0.4, proven=False,
        )

        assert report.assert_valid() is report
        assert not report.improves

    @given(
        st.lists(finite_floats, min_size=1, max_size=40),
        finite_floats.filter(lambda t: abs(t) >= 1e-3),
    )
    @hsettings(max_examples=60, deadline=None)
    def test_sides_scale_with_modulus_squared(self, values, t):
        """Both sides of the report are quadratic in A."""
        A = FiniteSequence.from_values(values)
        base = hardy_report(A, ConstRule(), SqrtRule())
        scaled = hardy_report(A * t, ConstRule(), SqrtRule())

        assert scaled.lhs == pytest.approx(t * t * base.lhs, rel=1e-9, abs=1e-300)
        assert scaled.weighted_sum == pytest.approx(t * t * base.weighted_sum, rel=1e-9, abs=1e-300)

    def test_strict_report_rejects_equality(self):
        fields = dict(
            check=InequalityCheck.CLASSICAL, lhs=1.0, weighted_sum=1.0, remainder=0.0,
            classical_sum=1.0, margin=0.0,
        )

        assert InequalityReport(**fields).holds
        strict = InequalityReport(**fields, strict=True)
        assert not strict.holds
        with pytest.raises(AssertionViolation):
            strict.assert_valid()


class TestHardyIdentity:
    """Tests for the exact remainder identity."""

    def test_single_entry(self):
        A = FiniteSequence.from_values([1.0])

        assert hardy_identity_residual(A, ConstRule(), SqrtRule()) <= 1e-14

    def test_zero_sequence(self):
        assert hardy_identity_residual(FiniteSequence.zeros(), ConstRule(), SqrtRule()) == 0.0

    @pytest.mark.parametrize("lam,g", IDENTITY_PAIRS, ids=["keller", "power", "linear-lambda"])
    def test_random_inputs(self, random_sequences, lam, g):
        for A in random_sequences(200):
            report = hardy_identity(A, lam, g)

            assert report.check == HARDY_IDENTITY_CHECK
            assert report.residual <= 1e-10 * max(1.0, report.lhs)
            assert report.weighted_residual <= 1e-10 * max(1.0, report.lhs)
            report.assert_valid()

    def test_squares_equal_remainder(self, random_sequences):
        for A in random_sequences(20):
            squares = hardy_remainder_squares(A, ConstRule(), SqrtRule())
            remainder = hardy_report(A, ConstRule(), SqrtRule()).remainder

            lhs = hardy_identity(A, ConstRule(), SqrtRule()).lhs
            assert squares == pytest.approx(remainder, abs=1e-10 * max(1.0, lhs))
            assert squares >= 0.0

    def test_to_row_has_weighted_residual(self):
        row = hardy_identity(FiniteSequence.from_values([1.0, 2.0]), ConstRule(), SqrtRule()).to_row()

        assert set(row) >= {"check", "lhs", "residual", "weighted_residual"}


class TestClassicalHardy:
    """Tests for Σ|A_n/n|^p < (p/(p-1))^p Σ|a_n|^p."""

    def test_single_coefficient_brackets_zeta_two(self):
        report = classical_hardy_report(FiniteSequence.from_values([1.0]), 2.0)

        assert report.check == InequalityCheck.CLASSICAL
        assert report.tail_lo <= math.pi ** 2 / 6 <= report.tail_hi
        assert report.tail_hi - report.tail_lo < 2e-6
        assert report.classical_sum == pytest.approx(4.0)
        assert ReportFlag.TAIL in report.flags
        report.assert_valid()

    def test_rejects_zero_coefficients(self):
        with pytest.raises(InputError):
            classical_hardy_report(FiniteSequence.zeros(), 2.0)

    def test_rejects_p_at_most_one(self):
        with pytest.raises(InputError):
            classical_hardy_report(FiniteSequence.from_values([1.0]), 1.0)

    @pytest.mark.parametrize("p", [1.5, 2.0, 3.0])
    def test_random_inputs_hold(self, random_sequences, p):
        for a in random_sequences(20, max_length=32):
            report = classical_hardy_report(a, p).assert_valid()
            assert report.tail_hi < report.classical_sum
            assert report.strict

    def test_sharpness_sweep(self):
        """The ratio of the sides stays in [1, 4] and shrinks as the decay nears 1/2."""
        slow = sharpness_ratio(0.51, 10 ** 4)
        fast = sharpness_ratio(1.0, 10 ** 4)

        assert 1.0 <= slow <= 4.0
        assert 1.0 <= fast <= 4.0
        assert slow < fast


class TestCopsonGeneral:
    """Tests for the general Copson inequality."""

    def test_reduces_to_classical(self, random_sequences):
        """q ≡ 1 and c = p give the classical inequality."""
        for a in random_sequences(5, max_length=16):
            assert copson_hardy_reduction(a, 2.0).agrees

    def test_single_coefficient(self):
        report = copson_general_report(FiniteSequence.from_values([1.0]), ConstRule(), 2.0, 2.0)

        assert report.check == InequalityCheck.COPSON_GENERAL
        assert report.classical_sum == pytest.approx(4.0)
        assert report.tail_lo <= math.pi ** 2 / 6 <= report.tail_hi
        report.assert_valid()

    @pytest.mark.parametrize("c", [1.2, 1.5, 2.0])
    def test_linear_multipliers(self, random_sequences, c):
        for a in random_sequences(10, max_length=16):
            copson_general_report(a, LinearRule(), 2.0, c).assert_valid()

    def test_rejects_exponent_above_p(self):
        with pytest.raises(InputError):
            copson_general_report(FiniteSequence.from_values([1.0]), ConstRule(), 2.0, 2.5)

    def test_zero_coefficients_degenerate(self):
        report = copson_general_report(FiniteSequence.zeros(), ConstRule(), 2.0, 1.5)

        assert report.degenerate
        assert np.isclose(report.lhs, 0.0)

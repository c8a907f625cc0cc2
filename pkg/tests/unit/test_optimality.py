"""
Unit Tests for Cutoff Sequences and Optimality Probes
"""

import math

import numpy as np
import pytest

from src.core.errors import AssertionViolation, HypothesisError, InputError
from src.core.rules import ConstRule, LogRule, PowerRule, SqrtRule
from src.optimality.cutoffs import CutoffKind, CutoffSequence, copson_cutoff, hardy_cutoff
from src.optimality.probes import (
    OptimalityProbe,
    ProbeCheck,
    assert_probes,
    copson_comparison_holds,
    cutoff_remainder,
    decay_bound,
    limcond_sum,
    majorant,
    remainder_sweep,
)

HARDY_REMAINDERS = {10: 0.43425564, 100: 0.21714714, 1000: 0.14476483}
DECAY_BOUNDS = {10: 0.44382033, 100: 0.21738303, 1000: 0.14477531}


class TestCutoffSequences:
    """Tests for the logarithmic cutoffs."""

    def test_hardy_shape(self):
        cutoff = hardy_cutoff(10)

        assert cutoff.at(1) == 1.0
        assert cutoff.at(9) == 1.0
        assert cutoff.at(10) == pytest.approx(1.0)
        assert cutoff.at(31) == pytest.approx(2.0 - math.log(31) / math.log(10))
        assert cutoff.at(31) == pytest.approx(0.5086, abs=1e-4)
        assert cutoff.at(100) == pytest.approx(0.0, abs=1e-15)
        assert cutoff.at(101) == 0.0
        assert cutoff.is_nonincreasing()

    def test_copson_starts_below_one(self):
        cutoff = copson_cutoff(10)

        assert cutoff.at(10) == pytest.approx(2.0 - (20.0 / 11.0) ** 0.25)
        assert cutoff.at(10) == pytest.approx(0.8388, abs=1e-4)
        assert cutoff.at(9) == 1.0
        assert cutoff.is_nonincreasing()

    def test_large_lambda_is_clamped(self):
        """λ_N > 1 pushes the formula below zero; values stay in [0, 1]."""
        cutoff = hardy_cutoff(10, PowerRule(exponent=0.5))
        values = cutoff.values

        assert values.min() >= 0.0
        assert values.max() <= 1.0
        assert cutoff.raw([10])[0] == pytest.approx(2.0 - math.sqrt(10.0))

    def test_stable_steps_match_differences(self):
        cutoff = hardy_cutoff(30)
        ns = np.arange(31, 900)
        direct = cutoff.values_at(ns) - cutoff.values_at(ns - 1)

        np.testing.assert_allclose(cutoff.steps(ns), direct, rtol=1e-9, atol=1e-15)
        np.testing.assert_allclose(cutoff.raw_step(ns), direct, rtol=1e-9, atol=1e-15)

    def test_copson_steps_match_differences(self):
        cutoff = copson_cutoff(30)
        ns = np.arange(31, 900)

        np.testing.assert_allclose(
            cutoff.raw_step(ns), cutoff.raw(ns) - cutoff.raw(ns - 1), rtol=1e-9, atol=1e-15
        )

    def test_as_sequence_support(self):
        seq = hardy_cutoff(5).as_sequence()

        assert seq[1] == 1.0
        assert seq.end <= 25
        assert seq[26] == 0

    def test_parameter_checks(self):
        with pytest.raises(InputError):
            hardy_cutoff(1)
        with pytest.raises(InputError):
            hardy_cutoff(20, max_n=10)
        with pytest.raises(InputError):
            CutoffSequence(N=5, kind="gaussian")

    def test_lambda_hypotheses(self):
        with pytest.raises(HypothesisError):
            hardy_cutoff(10, ConstRule(value=0.5))
        with pytest.raises(HypothesisError):
            hardy_cutoff(10, PowerRule(exponent=-0.5))
        hardy_cutoff(10, LogRule())


class TestOptimalityProbes:
    """Tests for remainder sums against the decay bound."""

    def test_decay_bound_values(self):
        for N, bound in DECAY_BOUNDS.items():
            assert decay_bound(N) == pytest.approx(bound, rel=1e-7)

    def test_hardy_sweep(self):
        """λ ≡ 1, β = 1/2: the remainder decreases and stays below the bound."""
        probes = remainder_sweep(CutoffKind.HARDY, [10, 100, 1000])

        for item in probes:
            assert item.proven
            assert item.remainder == pytest.approx(HARDY_REMAINDERS[item.N], rel=1e-6)
            assert item.bound_value == pytest.approx(DECAY_BOUNDS[item.N], rel=1e-7)
            assert not item.exceeds_bound
            assert item.majorant_within_bound
            assert item.check == ProbeCheck.HARDY
        assert assert_probes(probes) is probes

    def test_clamped_and_window_agree_for_unit_lambda(self):
        item = remainder_sweep(CutoffKind.HARDY, [50])[0]

        assert item.window_remainder == pytest.approx(item.remainder, rel=1e-10)

    def test_copson_sweep_asserts_majorant_only(self):
        probes = remainder_sweep(CutoffKind.COPSON, [10, 100])

        for item in probes:
            assert not item.proven
            assert item.check == ProbeCheck.COPSON
            assert item.majorant_within_bound
        assert_probes(probes)

    def test_copson_window_sits_just_above_bound(self):
        """The unclamped Copson window sum exceeds the decay bound by a vanishing factor."""
        ratios = [
            item.window_remainder / item.bound_value
            for item in remainder_sweep(CutoffKind.COPSON, [10, 100])
        ]

        assert 1.0 < ratios[1] < ratios[0] < 1.05

    def test_majorant_decreases(self):
        values = [majorant(N) for N in (10, 100, 1000)]

        assert values[0] > values[1] > values[2]

    def test_limcond_sum_matches_remainder(self):
        """With g = √n the limit-condition sum is the β = 1/2 remainder."""
        cutoff = hardy_cutoff(40)

        assert limcond_sum(ConstRule(), SqrtRule(), 40) == pytest.approx(
            cutoff_remainder(cutoff, 0.5), rel=1e-12
        )

    def test_limcond_sum_vanishes(self):
        assert limcond_sum(ConstRule(), SqrtRule(), 1000) < limcond_sum(ConstRule(), SqrtRule(), 10)

    def test_row_columns(self):
        row = remainder_sweep(CutoffKind.HARDY, [10])[0].to_row()

        assert set(row) >= {"N", "remainder", "bound_value", "ratio", "exceeds_bound"}
        assert row["ratio"] == pytest.approx(HARDY_REMAINDERS[10] / DECAY_BOUNDS[10], rel=1e-6)

    def test_rejects_bad_beta_and_kind(self):
        with pytest.raises(InputError):
            remainder_sweep(CutoffKind.HARDY, [10], beta=0.75)
        with pytest.raises(InputError):
            remainder_sweep("gaussian", [10])

    def test_failed_claim_raises(self):
        broken = OptimalityProbe(
            kind=CutoffKind.HARDY, N=10, remainder=1.0, window_remainder=1.0,
            majorant=0.1, bound_value=0.44382033, proven=True,
        )

        with pytest.raises(AssertionViolation) as excinfo:
            assert_probes([broken])

        assert excinfo.value.check == ProbeCheck.HARDY
        assert excinfo.value.index == 10

    def test_non_decreasing_majorant_raises(self):
        first = OptimalityProbe(
            kind=CutoffKind.COPSON, N=10, remainder=0.5, window_remainder=0.5,
            majorant=0.2, bound_value=0.44, proven=False,
        )
        second = first.model_copy(update={"N": 20, "majorant": 0.3, "bound_value": 0.4})

        with pytest.raises(AssertionViolation):
            assert_probes([first, second])

    def test_copson_comparison(self):
        assert copson_comparison_holds(10 ** 5)
        with pytest.raises(InputError):
            copson_comparison_holds(1)

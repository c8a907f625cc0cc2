"""
Unit Tests for Sequence Rules

Evaluation conventions, closed forms, tail brackets and parsing.
"""

import math

import mpmath
import numpy as np
import pytest
from pydantic import ValidationError

from src.core.errors import InputError
from src.core.rules import (
    DIVERGENT,
    ConstRule,
    CopsonRule,
    FischerRule,
    GeometricRule,
    KellerRule,
    LinearRule,
    LogRule,
    PowerRule,
    SqrtRule,
    TableRule,
    TriangularRule,
    rule_from_dict,
)
from src.weights.copson import copson_weight
from src.weights.formulas import fischer_weight
from src.weights.keller import keller_weight

ALL_RULES = [
    ConstRule(value=2.0),
    PowerRule(exponent=-0.5),
    SqrtRule(),
    LinearRule(),
    TriangularRule(),
    LogRule(),
    GeometricRule(ratio=0.5),
    KellerRule(),
    FischerRule(p=3.0),
    CopsonRule(c=1.5),
    TableRule(values=[1.0, 2.0], beyond=LinearRule()),
]


class TestRuleEvaluation:
    """Tests shared by every rule."""

    @pytest.mark.parametrize("rule", ALL_RULES, ids=lambda r: r.label())
    def test_index_zero_is_zero(self, rule):
        """g_0 = 0 for every rule."""
        assert rule.at(0) == 0.0

    @pytest.mark.parametrize("rule", ALL_RULES, ids=lambda r: r.label())
    def test_positive_from_one(self, rule):
        """Every rule is strictly positive on n >= 1."""
        assert np.all(rule.window(1, 200) > 0.0)

    @pytest.mark.parametrize("rule", ALL_RULES, ids=lambda r: r.label())
    def test_float_and_reference_agree(self, rule):
        """Binary64 and mpmath evaluations agree at a few indices."""
        for n in (1, 7, 150):
            assert rule.at(n) == pytest.approx(float(rule.at_mp(n)), rel=1e-10)

    def test_negative_index_rejected(self):
        with pytest.raises(InputError):
            LinearRule().array([-1])

    def test_weight_rules_match_weight_functions(self):
        """Keller, p-weight and Copson rules evaluate the weight functions."""
        assert KellerRule().at(10) == pytest.approx(keller_weight(10), rel=1e-14)
        assert FischerRule(p=3.0).at(4) == pytest.approx(fischer_weight(3.0, 4), rel=1e-14)
        assert CopsonRule(c=1.5).at(9) == pytest.approx(copson_weight(1.5, 9), rel=1e-14)


class TestClosedForms:
    """Tests for cumulative sums and reciprocal steps."""

    def test_cumulative_closed_forms(self):
        assert LinearRule().cumulative(4) == 10
        assert ConstRule(value=3.0).cumulative(5) == 15
        assert GeometricRule(ratio=2.0).cumulative(3) == pytest.approx(14.0)
        assert TriangularRule().cumulative(3) == pytest.approx(10.0)

    def test_power_reciprocal_step(self):
        """n^{-e} - (n+1)^{-e} in stable form matches the direct difference."""
        rule = PowerRule(exponent=0.5)
        ns = np.array([1, 2, 10, 1000])
        direct = 1.0 / np.sqrt(ns) - 1.0 / np.sqrt(ns + 1)
        np.testing.assert_allclose(rule.reciprocal_step(ns), direct, rtol=1e-12)

    def test_is_nondecreasing(self):
        assert LogRule().is_nondecreasing(10_000)
        assert ConstRule().is_nondecreasing(100)
        assert not PowerRule(exponent=-1.0).is_nondecreasing(100)


class TestTailBrackets:
    """Tests for certified tail brackets."""

    def test_power_bracket_contains_hurwitz_zeta(self):
        """Σ_{n>10} n^{-2} lies between the two integral bounds."""
        lo, hi = PowerRule(exponent=-2.0).tail_bracket(10)
        exact = float(mpmath.zeta(2, 11))

        assert lo <= exact <= hi

    def test_geometric_bracket_is_exact(self):
        lo, hi = GeometricRule(ratio=0.5).tail_bracket(3)

        assert lo == hi == pytest.approx(0.125)

    def test_divergent_tails(self):
        assert ConstRule().tail_bracket(5) == DIVERGENT
        assert PowerRule(exponent=-1.0).tail_bracket(5) == DIVERGENT
        assert LogRule().tail_bracket(5) == DIVERGENT

    def test_table_without_continuation_has_no_tail(self):
        assert TableRule(values=[1.0, 2.0]).tail_bracket(1) is None

    def test_table_with_continuation(self):
        """Remaining table entries plus the continuation's bracket."""
        rule = TableRule(values=[1.0, 0.5, 0.25], beyond=GeometricRule(ratio=0.5))
        lo, hi = rule.tail_bracket(1)

        assert lo == pytest.approx(0.75 + 0.125)
        assert hi == pytest.approx(lo)


class TestRuleParsing:
    """Tests for the JSON rule form."""

    def test_round_trip_dict(self):
        rule = rule_from_dict({"rule": "power", "exponent": -2})

        assert isinstance(rule, PowerRule)
        assert rule.exponent == -2.0

    def test_rejects_non_positive_constant(self):
        with pytest.raises(ValidationError):
            rule_from_dict({"rule": "const", "value": -1})

    def test_rejects_unknown_rule(self):
        with pytest.raises(ValidationError):
            rule_from_dict({"rule": "spline"})

    def test_table_past_end_without_continuation(self):
        with pytest.raises(InputError):
            TableRule(values=[1.0]).at(2)

    def test_copson_exponent_range(self):
        with pytest.raises(ValidationError):
            CopsonRule(c=2.5)
        assert math.isclose(CopsonRule().c, 1.5)

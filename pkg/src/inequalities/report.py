"""
Inequality Reports

Both sides of an inequality evaluated on one input, with the derived
remainder and margin, optional certified tail interval and the flags the
command line writes next to every row.
"""

import logging
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from ..config import settings
from ..core.errors import AssertionViolation

logger = logging.getLogger(__name__)


class ReportFlag:
    """Flag strings attached to reports."""

    DEGENERATE = "degenerate"
    UNPROVEN = "unproven-range"
    TAIL = "tail-bracketed"
    BELOW_TOLERANCE = "below-tolerance"


class InequalityCheck:
    """Identifiers of the inequality checks."""

    HARDY = "hardy-weighted-inequality"
    POWER = "power-weighted-inequality"
    CLASSICAL = "classical-hardy-inequality"
    COPSON_GENERAL = "copson-general-inequality"
    COPSON_IMPROVED = "copson-improved-inequality"
    COPSON = "copson-weighted-inequality"


class InequalityReport(BaseModel):
    """
    Evaluated inequality on one finitely supported input.

    For the difference-form inequalities lhs is Σ|ΔA_n|^2/λ_n, weighted_sum
    is Σ w_n|A_n|^2, remainder = lhs - weighted_sum and margin =
    weighted_sum - classical_sum.

    For the coefficient-form inequalities (classical Hardy and the general
    Copson inequality) the infinite left side is certified by the interval
    [tail_lo, tail_hi]; weighted_sum is tail_hi and remainder = margin =
    classical_sum - tail_hi.

    Attributes:
        check: Identifier of what was checked
        lhs: Left side (midpoint of the interval when bracketed)
        weighted_sum: Improved side
        remainder: Slack of the inequality itself
        classical_sum: Pre-improvement comparator side
        margin: Slack of the improvement
        tail_lo: Certified lower end of lhs, when a tail was bracketed
        tail_hi: Certified upper end of lhs, when a tail was bracketed
        proven: Whether the improvement claim is proven for these parameters
        strict: The inequality is strict, so holds needs remainder > 0
        flags: Report flags
    """

    check: str
    lhs: float
    weighted_sum: float
    remainder: float
    classical_sum: float
    margin: float
    tail_lo: Optional[float] = None
    tail_hi: Optional[float] = None
    proven: bool = True
    strict: bool = False
    flags: List[str] = Field(default_factory=list)

    @property
    def tail(self) -> Optional[Tuple[float, float]]:
        if self.tail_lo is None or self.tail_hi is None:
            return None
        return (self.tail_lo, self.tail_hi)

    @property
    def degenerate(self) -> bool:
        return ReportFlag.DEGENERATE in self.flags

    @property
    def tolerance(self) -> float:
        """Hybrid tolerance scaled by the largest aggregate of the report."""
        scale = max(abs(self.lhs), abs(self.weighted_sum), abs(self.classical_sum))
        return settings.tol(scale)

    @property
    def holds(self) -> bool:
        """The inequality itself: remainder > 0 when strict, else remainder >= -tol."""
        if self.strict:
            return self.remainder > 0.0
        return self.remainder >= -self.tolerance

    @property
    def improves(self) -> bool:
        """The improvement over the classical side: margin >= -tol."""
        return self.margin >= -self.tolerance

    def assert_valid(self) -> "InequalityReport":
        """
        Raise when a proven claim fails.

        The inequality must always hold; the improvement is asserted only
        when the report is in its proven range.

        Raises:
            AssertionViolation: naming the report's check
        """
        if not self.holds:
            logger.error("%s fails: remainder %.3e", self.check, self.remainder)
            raise AssertionViolation(
                self.check, "inequality fails beyond tolerance", value=self.remainder
            )
        if self.proven and not self.improves:
            logger.error("%s improvement fails: margin %.3e", self.check, self.margin)
            raise AssertionViolation(
                self.check, "improved side falls below the classical side", value=self.margin
            )
        if not self.improves:
            logger.warning(
                "%s: margin %.3e outside the proven range", self.check, self.margin
            )
        return self

    def to_row(self) -> Dict[str, object]:
        """Flat row with the report columns."""
        return {
            "check": self.check,
            "lhs": self.lhs,
            "weighted_sum": self.weighted_sum,
            "remainder": self.remainder,
            "classical_sum": self.classical_sum,
            "margin": self.margin,
            "tail_lo": self.tail_lo,
            "tail_hi": self.tail_hi,
            "proven": self.proven,
            "flags": ";".join(self.flags),
        }


class IdentityReport(BaseModel):
    """
    Both sides of an exact remainder identity.

    Attributes:
        check: Identifier of the identity
        lhs: Difference side Σ|ΔA_n|^2/λ_n (or its Copson analogue)
        weighted_sum: Σ w_n|A_n|^2
        squares: Explicit square-sum of the identity
        telescoped: Telescoped sum that rearranges into weighted_sum
        residual: |lhs - squares - telescoped|
    """

    check: str
    lhs: float
    weighted_sum: float
    squares: float
    telescoped: float
    residual: float

    @property
    def tolerance(self) -> float:
        return settings.tol(max(abs(self.lhs), abs(self.weighted_sum), abs(self.squares)))

    @property
    def weighted_residual(self) -> float:
        """|lhs - weighted_sum - squares|, the identity written with the weights."""
        return abs(self.lhs - self.weighted_sum - self.squares)

    @property
    def holds(self) -> bool:
        return max(self.residual, self.weighted_residual) <= self.tolerance

    def assert_valid(self) -> "IdentityReport":
        """Raise AssertionViolation when the residual exceeds the tolerance."""
        if not self.holds:
            logger.error("%s residual %.3e", self.check, self.residual)
            raise AssertionViolation(
                self.check,
                "remainder identity residual above tolerance",
                value=max(self.residual, self.weighted_residual),
            )
        return self

    def to_row(self) -> Dict[str, object]:
        row = self.model_dump()
        row["weighted_residual"] = self.weighted_residual
        return row

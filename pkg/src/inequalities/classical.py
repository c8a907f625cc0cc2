"""
Coefficient-form Inequalities

The classical discrete Hardy inequality

    Σ_n |A_n / n|^p < (p/(p-1))^p Σ_n |a_n|^p,   A_n = a_1 + ... + a_n

and the general Copson inequality

    Σ_n q_n Q_n^{-c} |A_n|^p <= (p/(c-1))^p Σ_n q_n Q_n^{p-c} |a_n|^p

for finitely supported a. Beyond the support A_n is constant, so the left
side has an infinite tail; it is summed explicitly for
Settings.tail_explicit_terms indices and the rest is bracketed by integral
comparison. Reports carry the certified interval of the left side.
"""

import logging
from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel

from ..config import settings
from ..core.errors import InputError
from ..core.rules import UNIT, PowerRule, SequenceRule
from ..core.sequences import FiniteSequence, partial_sums
from ..core.summation import compensated_sum
from .report import InequalityCheck, InequalityReport, ReportFlag

logger = logging.getLogger(__name__)


def _check_p(p: float) -> None:
    if not p > 1.0:
        raise InputError(f"the inequality needs p > 1, got {p}")


def _interval_report(
    check: str,
    explicit: float,
    bracket: Tuple[float, float],
    classical: float,
    flags: list,
    strict: bool = False
) -> InequalityReport:
    lo, hi = explicit + bracket[0], explicit + bracket[1]
    if bracket[1] > 0.0:
        flags = flags + [ReportFlag.TAIL]
    return InequalityReport(
        check=check,
        lhs=0.5 * (lo + hi),
        weighted_sum=hi,
        remainder=classical - hi,
        classical_sum=classical,
        margin=classical - hi,
        tail_lo=lo,
        tail_hi=hi,
        strict=strict,
        flags=flags,
    )


def classical_hardy_report(
    a: FiniteSequence,
    p: float,
    tail_terms: Optional[int] = None
) -> InequalityReport:
    """
    Both sides of the classical Hardy inequality.

    The tail Σ_{n>m}|A_m|^p n^{-p} beyond the support end m is summed for
    tail_terms indices and the remainder lies in [∫_{M+1}^∞, ∫_M^∞] x^{-p}
    dx with M = m + tail_terms.

    Args:
        a: Finitely supported, nonzero coefficients
        p: Exponent > 1
        tail_terms: Explicit tail indices (defaults to Settings.tail_explicit_terms)

    Returns:
        InequalityReport with [tail_lo, tail_hi] certifying the left side

    Raises:
        InputError: p <= 1 or a identically zero
    """
    _check_p(p)
    if a.has_plateau:
        raise InputError("coefficients a must be finitely supported")
    if a.is_zero():
        raise InputError("the classical Hardy inequality is strict only for nonzero a")
    tail_terms = settings.tail_explicit_terms if tail_terms is None else tail_terms

    A = partial_sums(a, UNIT)
    m = A.end
    ns = np.arange(1, m + 1, dtype=np.float64)
    head = compensated_sum(np.abs(A.dense(m) / ns) ** p)

    level = abs(A.plateau) ** p
    tail_ns = np.arange(m + 1, m + tail_terms + 1, dtype=np.float64)
    explicit_tail = level * compensated_sum(tail_ns ** -p)
    lo, hi = PowerRule(exponent=-p).tail_bracket(m + tail_terms)
    bracket = (level * lo, level * hi)

    classical = (p / (p - 1.0)) ** p * compensated_sum(np.abs(a.values) ** p)
    report = _interval_report(
        InequalityCheck.CLASSICAL, head + explicit_tail, bracket, classical, [], strict=True
    )
    logger.debug("classical Hardy p=%g: lhs in [%.12g, %.12g]", p, report.tail_lo, report.tail_hi)
    return report


def copson_general_report(
    a: FiniteSequence,
    q: SequenceRule,
    p: float,
    c: float,
    tail_terms: Optional[int] = None
) -> InequalityReport:
    """
    Both sides of the general Copson inequality.

    Beyond the explicit tail the sum Σ_{n>M} q_n Q_n^{-c} is at most
    ∫_{Q_M}^∞ t^{-c} dt = Q_M^{1-c}/(c-1), since q_n Q_n^{-c} is below the
    integral of t^{-c} over [Q_{n-1}, Q_n]; the lower end is the explicit
    sum itself.

    Args:
        a: Finitely supported coefficients
        q: Positive multiplier sequence
        p: Exponent > 1
        c: Exponent with 1 < c <= p
        tail_terms: Explicit tail indices (defaults to Settings.tail_explicit_terms)

    Raises:
        InputError: c outside (1, p]
    """
    _check_p(p)
    if not 1.0 < c <= p:
        raise InputError(f"the Copson exponent must lie in (1, p] = (1, {p}], got {c}")
    if a.has_plateau:
        raise InputError("coefficients a must be finitely supported")
    tail_terms = settings.tail_explicit_terms if tail_terms is None else tail_terms

    if a.is_zero():
        return InequalityReport(
            check=InequalityCheck.COPSON_GENERAL, lhs=0.0, weighted_sum=0.0, remainder=0.0,
            classical_sum=0.0, margin=0.0, tail_lo=0.0, tail_hi=0.0,
            flags=[ReportFlag.DEGENERATE],
        )

    A = partial_sums(a, q)
    m = A.end
    ns = np.arange(1, m + tail_terms + 1, dtype=np.int64)
    q_vals = q.array(ns)
    Q_vals = np.cumsum(q_vals)

    head = compensated_sum(q_vals[:m] * Q_vals[:m] ** -c * np.abs(A.dense(m)) ** p)
    level = abs(A.plateau) ** p
    explicit_tail = level * compensated_sum(q_vals[m:] * Q_vals[m:] ** -c)
    upper = level * float(Q_vals[-1]) ** (1.0 - c) / (c - 1.0)

    support = np.arange(a.offset, a.end + 1, dtype=np.int64)
    weights = q.array(support) * Q_vals[support - 1] ** (p - c)
    classical = (p / (c - 1.0)) ** p * compensated_sum(weights * np.abs(a.values) ** p)

    return _interval_report(
        InequalityCheck.COPSON_GENERAL, head + explicit_tail, (0.0, upper), classical, []
    )


class ReductionCheck(BaseModel):
    """The general Copson report with q ≡ 1 and c = p next to the classical one."""

    p: float
    classical: InequalityReport
    copson: InequalityReport

    @property
    def agrees(self) -> bool:
        """Equal right sides and overlapping certified left sides."""
        tol = settings.tol(self.classical.classical_sum)
        same_rhs = abs(self.classical.classical_sum - self.copson.classical_sum) <= tol
        overlap = (
            self.copson.tail_lo <= self.classical.tail_hi + tol
            and self.classical.tail_lo <= self.copson.tail_hi + tol
        )
        return same_rhs and overlap


def copson_hardy_reduction(a: FiniteSequence, p: float) -> ReductionCheck:
    """
    With q ≡ 1 and c = p the Copson inequality is the classical one.

    Args:
        a: Finitely supported, nonzero coefficients
        p: Exponent > 1
    """
    return ReductionCheck(
        p=p,
        classical=classical_hardy_report(a, p),
        copson=copson_general_report(a, UNIT, p, p),
    )


def sharpness_ratio(exponent: float, length: int, p: float = 2.0) -> float:
    """
    Ratio of the two sides of the classical inequality for a_n = n^{-exponent}
    truncated at length. It stays >= 1 and falls toward 1 as exponent -> 1/p
    and length grows, so no smaller constant works.

    Args:
        exponent: Decay exponent of a_n
        length: Truncation length
        p: Exponent > 1

    Returns:
        classical_sum / certified upper end of the left side
    """
    if length < 1:
        raise InputError(f"truncation length must be >= 1, got {length}")
    a = FiniteSequence.from_values(np.arange(1, length + 1, dtype=np.float64) ** -exponent)
    report = classical_hardy_report(a, p)
    return report.classical_sum / report.tail_hi

"""
Hardy Inequality Engine

Difference-form Hardy inequalities on finitely supported A with A_0 = 0:

    Σ_n w_n |A_n|^2 <= Σ_n |A_n - A_{n-1}|^2 / λ_n

and the exact remainder identity behind them. The slack of the inequality
is the explicit square-sum

    Σ_{n>=2} |√(g_{n-1}/g_n) A_n - √(g_n/g_{n-1}) A_{n-1}|^2 / λ_n

while the weighted side appears after summing by parts the telescoped
terms (h_n/λ_n)(|A_n|^2/g_n - |A_{n-1}|^2/g_{n-1}) with h_n = g_n - g_{n-1}.
"""

import logging
from typing import Callable

import numpy as np

from ..core.errors import InputError
from ..core.rules import SequenceRule
from ..core.sequences import FiniteSequence
from ..core.summation import compensated_sum
from ..weights.base_weight import BaseWeight
from ..weights.families import LambdaGWeight, PowerWeight
from .report import IdentityReport, InequalityCheck, InequalityReport, ReportFlag

logger = logging.getLogger(__name__)

HARDY_IDENTITY_CHECK = "hardy-remainder-identity"

ReciprocalRule = Callable[[np.ndarray], np.ndarray]


def compact_support(A: FiniteSequence) -> np.ndarray:
    """
    A_0, A_1, ..., A_{end+1} for a compactly supported A.

    Raises:
        InputError: if A has a nonzero plateau
    """
    if A.has_plateau:
        raise InputError(
            "the difference-form inequality needs A with zero plateau (A_n = 0 beyond its support)"
        )
    stop = max(A.end, 0)
    return np.concatenate(([0j], A.dense(stop), [0j]))


def difference_sum(ext: np.ndarray, inv_lam: np.ndarray) -> float:
    """Σ_{n=1}^{end+1} |A_n - A_{n-1}|^2 / λ_n from the extended values."""
    diff = ext[1:] - ext[:-1]
    return compensated_sum(inv_lam * np.abs(diff) ** 2)


def square_sum(ext: np.ndarray, inv_lam: np.ndarray, g_vals: np.ndarray) -> float:
    """
    The explicit squares for n = 2..end+1; the n = 1 square multiplies
    A_0 = 0 and is taken as 0.

    Args:
        ext: A_0..A_{end+1}
        inv_lam: 1/λ_n for n = 1..end+1
        g_vals: g_n for n = 0..end+1
    """
    if ext.size < 3:
        return 0.0
    ratio = np.sqrt(g_vals[1:-1] / g_vals[2:])
    terms = np.abs(ratio * ext[2:] - ext[1:-1] / ratio) ** 2
    return compensated_sum(inv_lam[1:] * terms)


def telescoped_sum(ext: np.ndarray, inv_lam: np.ndarray, g_vals: np.ndarray) -> float:
    """Σ_{n=1}^{end+1} (h_n/λ_n)(|A_n|^2/g_n - |A_{n-1}|^2/g_{n-1}), g_0 term taken as 0."""
    mag = np.abs(ext) ** 2
    current = mag[1:] / g_vals[1:]
    previous = np.zeros_like(current)
    previous[1:] = mag[1:-1] / g_vals[1:-1]
    steps = g_vals[1:] - g_vals[:-1]
    return compensated_sum(steps * inv_lam * (current - previous))


def _indices(ext: np.ndarray) -> np.ndarray:
    return np.arange(1, ext.size, dtype=np.int64)


def difference_report(
    A: FiniteSequence,
    reciprocal: ReciprocalRule,
    family: BaseWeight,
    check: str
) -> InequalityReport:
    """
    Evaluate a difference-form inequality for one weight family.

    Args:
        A: Compactly supported partial sums
        reciprocal: Map from indices to 1/λ_n
        family: Weight family providing w_n and its comparator
        check: Report identifier

    Returns:
        InequalityReport with remainder = lhs - weighted_sum
    """
    ext = compact_support(A)
    stop = ext.size - 2
    proven = family.in_proven_range(stop + 1)
    flags = [] if proven else [ReportFlag.UNPROVEN]

    if A.is_zero():
        return InequalityReport(
            check=check, lhs=0.0, weighted_sum=0.0, remainder=0.0, classical_sum=0.0,
            margin=0.0, proven=proven, flags=flags + [ReportFlag.DEGENERATE],
        )

    ns = _indices(ext)
    lhs = difference_sum(ext, reciprocal(ns))
    mag = np.abs(ext[1:-1]) ** 2
    weighted = compensated_sum(family.values(ns[:-1]) * mag)
    classical = compensated_sum(family.comparator(ns[:-1]) * mag)

    report = InequalityReport(
        check=check,
        lhs=lhs,
        weighted_sum=weighted,
        remainder=lhs - weighted,
        classical_sum=classical,
        margin=weighted - classical,
        proven=proven,
        flags=flags,
    )
    logger.debug(
        "%s on support %d: remainder %.3e, margin %.3e",
        check, stop, report.remainder, report.margin
    )
    return report


def _reciprocal(lam: SequenceRule) -> ReciprocalRule:
    return lambda ns: 1.0 / lam.array(ns)


def hardy_report(A: FiniteSequence, lam: SequenceRule, g: SequenceRule) -> InequalityReport:
    """
    The weighted Hardy inequality Σ w_n(λ, g)|A_n|^2 <= Σ|ΔA_n|^2/λ_n.

    The classical side uses the w_n(λ, g) comparator: β(1-β)/(2n^2)(1/λ_n +
    1/λ_{n+1}) for g_n = n^β, the β = 1/2 comparator otherwise.

    Args:
        A: Partial sums with A_0 = 0 and zero plateau
        lam: Positive sequence λ
        g: Positive sequence g

    Raises:
        InputError: if A has a nonzero plateau
    """
    return difference_report(A, _reciprocal(lam), LambdaGWeight(lam, g), InequalityCheck.HARDY)


def weighted_hardy_report(A: FiniteSequence, alpha: float, beta: float) -> InequalityReport:
    """
    Σ w_n(α, β)|A_n|^2 <= Σ n^α |ΔA_n|^2 against the classical weights
    (α-1)^2/4 · n^{α-2}.

    Args:
        A: Partial sums with A_0 = 0 and zero plateau
        alpha: Exponent of the difference weight n^α
        beta: Exponent of g_n = n^β
    """
    return difference_report(
        A,
        lambda ns: ns.astype(np.float64) ** alpha,
        PowerWeight(alpha, beta),
        InequalityCheck.POWER,
    )


def identity_report(
    A: FiniteSequence,
    reciprocal: ReciprocalRule,
    g: SequenceRule,
    family: BaseWeight,
    check: str
) -> IdentityReport:
    """
    Both sides of the remainder identity for one (λ, g) pair.

    Args:
        A: Compactly supported partial sums
        reciprocal: Map from indices to 1/λ_n
        g: Positive sequence g (g_0 = 0)
        family: Weight family with w_n matching (λ, g)
        check: Identity identifier
    """
    ext = compact_support(A)
    ns = _indices(ext)
    inv_lam = reciprocal(ns)
    g_vals = g.array(np.arange(0, ext.size, dtype=np.int64))

    lhs = difference_sum(ext, inv_lam)
    squares = square_sum(ext, inv_lam, g_vals)
    telescoped = telescoped_sum(ext, inv_lam, g_vals)
    weighted = compensated_sum(family.values(ns[:-1]) * np.abs(ext[1:-1]) ** 2)

    return IdentityReport(
        check=check,
        lhs=lhs,
        weighted_sum=weighted,
        squares=squares,
        telescoped=telescoped,
        residual=abs(lhs - squares - telescoped),
    )


def hardy_identity(A: FiniteSequence, lam: SequenceRule, g: SequenceRule) -> IdentityReport:
    """Remainder identity for the weighted Hardy inequality."""
    return identity_report(A, _reciprocal(lam), g, LambdaGWeight(lam, g), HARDY_IDENTITY_CHECK)


def hardy_identity_residual(A: FiniteSequence, lam: SequenceRule, g: SequenceRule) -> float:
    """
    |square-sum + telescoped sum - Σ|ΔA_n|^2/λ_n|.

    Args:
        A: Partial sums with A_0 = 0 and zero plateau
        lam: Positive sequence λ
        g: Positive sequence g

    Returns:
        Residual, expected below 1e-10 · max(1, lhs)
    """
    return hardy_identity(A, lam, g).residual


def hardy_remainder_squares(A: FiniteSequence, lam: SequenceRule, g: SequenceRule) -> float:
    """The explicit square-sum that equals hardy_report(A, λ, g).remainder."""
    return hardy_identity(A, lam, g).squares


"""
Copson Reports

The weighted Copson inequality in difference form,

    Σ V_n(c) |A_n|^2 <= Σ S_n^{2-c} |ΔA_n|^2 / n,

against the classical weights (c-1)^2/4 · n/S_n^c, and its remainder
identity. It is the Hardy engine with 1/λ_n = S_n^{2-c}/n and g_n = √n.
"""

from ..core.rules import SqrtRule
from ..core.sequences import FiniteSequence
from ..inequalities.hardy import difference_report, identity_report
from ..inequalities.report import IdentityReport, InequalityCheck, InequalityReport
from ..weights.copson import copson_scale
from ..weights.families import CopsonWeight

COPSON_IDENTITY_CHECK = "copson-remainder-identity"
IMPROVED_EXPONENT = 1.5


def _reciprocal(c: float):
    return lambda ns: copson_scale(c, ns)


def copson_report(A: FiniteSequence, c: float) -> InequalityReport:
    """
    Weighted Copson inequality for any c in (1, 2].

    Only c = 3/2 is in the proven improvement range; other exponents are
    reported with the unproven-range flag.
    """
    return difference_report(A, _reciprocal(c), CopsonWeight(c), InequalityCheck.COPSON)


def improved_copson_report(A: FiniteSequence) -> InequalityReport:
    """
    The improved Copson inequality at c = 3/2:

        Σ √S_n |ΔA_n|^2 / n >= Σ V_n |A_n|^2 > Σ n/(16 S_n √S_n) |A_n|^2

    Args:
        A: Partial sums with A_0 = 0 and zero plateau
    """
    return difference_report(
        A, _reciprocal(IMPROVED_EXPONENT), CopsonWeight(IMPROVED_EXPONENT),
        InequalityCheck.COPSON_IMPROVED,
    )


def copson_identity(A: FiniteSequence, c: float) -> IdentityReport:
    """
    Remainder identity of the weighted Copson inequality.

    The square terms are S_n^{2-c} |A_n/√n ((n-1)/n)^{1/4} - A_{n-1}/√n (n/(n-1))^{1/4}|^2;
    at n = 1 the singular factor multiplies A_0 = 0 and the term is 0.
    """
    return identity_report(A, _reciprocal(c), SqrtRule(), CopsonWeight(c), COPSON_IDENTITY_CHECK)


def copson_identity_residual(A: FiniteSequence, c: float) -> float:
    """
    |Σ S_n^{2-c}|ΔA_n|^2/n - Σ V_n|A_n|^2 - square-sum|.

    Args:
        A: Partial sums with A_0 = 0 and zero plateau
        c: Exponent in (1, 2]

    Returns:
        Residual, expected below 1e-10 · max(1, lhs)
    """
    return copson_identity(A, c).weighted_residual

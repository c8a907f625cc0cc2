"""
Weight Series Expansion

Expansion of w_n(λ, β) = w_n(λ, g_n = n^β) in powers of x = 1/n:

    w_n = Σ_{k≥1} -binom(β, k) x^k [(-1)^k / λ_n + 1/λ_{n+1}]

The first term is β x (1/λ_n - 1/λ_{n+1}), which vanishes for constant λ;
the second is β(1-β) x^2 (1/λ_n + 1/λ_{n+1}) / 2.
"""

from typing import List

from ..core.errors import InputError
from ..core.rules import SequenceRule


def series_coefficient(beta: float, k: int) -> float:
    """-binom(β, k) for real β."""
    if k < 1:
        raise InputError(f"series order must be >= 1, got {k}")
    binom = 1.0
    for i in range(k):
        binom *= (beta - i) / (i + 1)
    return -binom


def series_terms(lam: SequenceRule, beta: float, n: int, order: int) -> List[float]:
    """The individual expansion terms k = 1..order at index n."""
    if n < 2:
        raise InputError(f"the expansion in 1/n needs n >= 2, got {n}")
    if order < 1:
        raise InputError(f"order must be >= 1, got {order}")
    x = 1.0 / n
    inv_n = 1.0 / lam.at(n)
    inv_next = 1.0 / lam.at(n + 1)
    terms = []
    for k in range(1, order + 1):
        sign = -1.0 if k % 2 else 1.0
        terms.append(series_coefficient(beta, k) * x ** k * (sign * inv_n + inv_next))
    return terms


def series_expansion(lam: SequenceRule, beta: float, n: int, order: int) -> float:
    """
    Partial sum of the expansion through the given order.

    Args:
        lam: Positive sequence λ
        beta: Exponent of g_n = n^β
        n: Index >= 2
        order: Number of terms >= 1

    Returns:
        Approximation of lambda_g_weight(λ, n^β, n) with error O(n^{-(order+1)})
    """
    # smallest terms first
    return sum(reversed(series_terms(lam, beta, n, order)))

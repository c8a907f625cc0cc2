"""
Keller Weight

The improved discrete Hardy weight w_n = 2 - √(1-1/n) - √(1+1/n) and its
power series w_n = Σ_{m≥1} c_m n^{-2m} with exact rational coefficients
c_m = C(4m, 2m) / ((4m-1) 2^{4m-1}).
"""

from fractions import Fraction
from math import comb, sqrt

import numpy as np

from ..core.errors import InputError
from ..core.stable import keller_kernel


def _check_index(n: int) -> None:
    if n < 1:
        raise InputError(f"weight index must be >= 1, got {n}")


def keller_weight(n: int) -> float:
    """
    Keller's weight at n in conjugated form.

    Accurate to a few ulps for every n up to 1e12 (the textbook form loses
    all digits near n = 1e8).

    Args:
        n: Index >= 1

    Returns:
        w_n > 1/(4n^2)
    """
    _check_index(n)
    return keller_kernel(1.0 / n)


def keller_weights(ns) -> np.ndarray:
    """Vectorised keller_weight over an index array."""
    ns = np.asarray(ns, dtype=np.float64)
    if ns.size and ns.min() < 1:
        raise InputError("weight indices must be >= 1")
    return np.atleast_1d(keller_kernel(1.0 / ns))


def keller_weight_naive(n: int) -> float:
    """Textbook subtraction form; kept to document the cancellation loss."""
    _check_index(n)
    x = 1.0 / n
    return 2.0 - sqrt(1.0 - x) - sqrt(1.0 + x)


def generalized_binomial(r: Fraction, k: int) -> Fraction:
    """binom(r, k) = r (r-1) ... (r-k+1) / k! for rational r."""
    if k < 0:
        raise InputError(f"binomial order must be >= 0, got {k}")
    result = Fraction(1)
    for i in range(k):
        result = result * (r - i) / (i + 1)
    return result


def keller_series_coefficient(m: int) -> Fraction:
    """
    Exact coefficient c_m of n^{-2m} in the Keller weight series.

    Args:
        m: Order >= 1

    Returns:
        C(4m, 2m) / ((4m - 1) 2^{4m-1}) as a Fraction
    """
    if m < 1:
        raise InputError(f"series order must be >= 1, got {m}")
    return Fraction(comb(4 * m, 2 * m), (4 * m - 1) * 2 ** (4 * m - 1))


def keller_partial_series(n: int, terms: int) -> Fraction:
    """Σ_{m=1}^{terms} c_m n^{-2m}, exactly."""
    _check_index(n)
    x2 = Fraction(1, n * n)
    total = Fraction(0)
    power = Fraction(1)
    for m in range(1, terms + 1):
        power *= x2
        total += keller_series_coefficient(m) * power
    return total


def keller_series_remainder_bound(n: int, terms: int) -> Fraction:
    """
    Upper bound for w_n minus the partial series through `terms` terms.

    The coefficients decrease, so the tail is dominated by a geometric
    series: c_{M+1} n^{-2(M+1)} / (1 - n^{-2}).
    """
    if n < 2:
        raise InputError(f"remainder bound needs n >= 2, got {n}")
    x2 = Fraction(1, n * n)
    return keller_series_coefficient(terms + 1) * x2 ** (terms + 1) / (1 - x2)

"""
Copson Weight

Triangular numbers S_n = n(n+1)/2 and the weight

    V_n = P_n (1 - √(1-1/n)) + P_{n+1} (1 - √(1+1/n)),  P_n = S_n^{2-c} / n

evaluated in the stable form V_n = P_{n+1} K(1/n) + (P_n - P_{n+1}) G(1/n)
where K is the conjugated Keller kernel and G(x) = x / (1 + √(1-x)).
"""

import numpy as np

from ..core.errors import InputError
from ..core.stable import keller_kernel, sqrt_gap


def check_copson_exponent(c: float) -> None:
    """Reject c outside (1, 2]."""
    if not 1.0 < c <= 2.0:
        raise InputError(f"the Copson exponent must lie in (1, 2], got {c}")


def triangular(ns) -> np.ndarray:
    """S_n = n(n+1)/2 as floats."""
    n = np.asarray(ns, dtype=np.float64)
    return n * (n + 1.0) / 2.0


def copson_scale(c: float, ns) -> np.ndarray:
    """P_n = S_n^{2-c} / n."""
    n = np.asarray(ns, dtype=np.float64)
    return triangular(n) ** (2.0 - c) / n


def copson_scale_step(c: float, ns) -> np.ndarray:
    """
    P_n - P_{n+1} without cancellation.

    P_{n+1}/P_n = (1 + 2/n)^{2-c} n/(n+1), so the difference is
    -P_n expm1((2-c) log1p(2/n) - log1p(1/n)).
    """
    n = np.asarray(ns, dtype=np.float64)
    exponent = (2.0 - c) * np.log1p(2.0 / n) - np.log1p(1.0 / n)
    return -copson_scale(c, n) * np.expm1(exponent)


def copson_weights(c: float, ns) -> np.ndarray:
    """Vectorised V_n(c)."""
    check_copson_exponent(c)
    ns = np.atleast_1d(np.asarray(ns, dtype=np.int64))
    if ns.size and ns.min() < 1:
        raise InputError("weight indices must be >= 1")
    n = ns.astype(np.float64)
    x = 1.0 / n
    return (
        copson_scale(c, n + 1.0) * np.atleast_1d(keller_kernel(x))
        + copson_scale_step(c, n) * np.atleast_1d(sqrt_gap(x))
    )


def copson_weight(c: float, n: int) -> float:
    """
    V_n(c) for 1 < c <= 2.

    Args:
        c: Copson exponent
        n: Index >= 1
    """
    return float(copson_weights(c, [n])[0])


def copson_weight_naive(c: float, n: int) -> float:
    """Textbook V_n(c) with the two square-root subtractions left in place."""
    check_copson_exponent(c)
    if n < 1:
        raise InputError(f"weight index must be >= 1, got {n}")
    p_n = float(copson_scale(c, n))
    p_next = float(copson_scale(c, n + 1))
    x = 1.0 / n
    return float(p_n + p_next - p_n * np.sqrt(1.0 - x) - p_next * np.sqrt(1.0 + x))

"""
Classical Comparators

The pre-improvement weights each family is measured against.
"""

import numpy as np

from .copson import triangular
from ..core.errors import InputError
from ..core.rules import SequenceRule


def _n(ns) -> np.ndarray:
    return np.atleast_1d(np.asarray(ns, dtype=np.float64))


def keller_comparator(ns) -> np.ndarray:
    """1 / (4n^2)."""
    n = _n(ns)
    return 0.25 / (n * n)


def beta_comparator(lam: SequenceRule, beta: float, ns) -> np.ndarray:
    """β(1-β)/(2n^2) · (1/λ_n + 1/λ_{n+1}); β = 1/2 gives (1/(8n^2))(1/λ_n + 1/λ_{n+1})."""
    n = _n(ns)
    idx = n.astype(np.int64)
    reciprocal = 1.0 / lam.array(idx) + 1.0 / lam.array(idx + 1)
    return beta * (1.0 - beta) / (2.0 * n * n) * reciprocal


def power_comparator(alpha: float, ns) -> np.ndarray:
    """(α-1)^2 / 4 · n^{α-2}."""
    n = _n(ns)
    return (alpha - 1.0) ** 2 / 4.0 * n ** (alpha - 2.0)


def power_improvement_bound(alpha: float, n: int) -> float:
    """
    Classical weight (α-1)^2/4 · n^{α-2} of the power-weight inequality.

    The improved weight w_n(α, (1-α)/2) dominates it for α in [1/3, 1) and
    at α = 0.

    Raises:
        InputError: n < 1 or α outside [0, 1)
    """
    if n < 1:
        raise InputError(f"weight index must be >= 1, got {n}")
    if not 0.0 <= alpha < 1.0:
        raise InputError(f"alpha must lie in [0, 1), got {alpha}")
    return float(power_comparator(alpha, n)[0])


def fischer_comparator(p: float, ns) -> np.ndarray:
    """((p-1)/p)^p n^{-p}."""
    n = _n(ns)
    return ((p - 1.0) / p) ** p * n ** -p


def copson_comparator(c: float, ns) -> np.ndarray:
    """(c-1)^2 / 4 · n / S_n^c; at c = 3/2 this is n / (16 S_n √S_n)."""
    n = _n(ns)
    return (c - 1.0) ** 2 / 4.0 * n / triangular(n) ** c

"""
Hardy Weight Formulas

Weights w_n(g), w_n(λ, g), w_n(α, β) and the p-weight, evaluated without
cancellation. Every scalar function has a vectorised twin taking an index
array; the scalar versions call the vectorised ones so both follow the
same evaluation path.

Stable form used for w_n(λ, g) when g_n = c n^β:

    w_n = D_β(1/n) / λ_{n+1} + (1/λ_n - 1/λ_{n+1}) (1 - (1 - 1/n)^β)

with D_β(x) = 2 - (1-x)^β - (1+x)^β from core.stable.
"""

import numpy as np

from ..core.errors import InputError
from ..core.rules import PowerRule, SequenceRule, UNIT
from ..core.stable import pow_pair_defect


def _indices(ns) -> np.ndarray:
    ns = np.atleast_1d(np.asarray(ns, dtype=np.int64))
    if ns.size and ns.min() < 1:
        raise InputError("weight indices must be >= 1")
    return ns


def lambda_g_weights(lam: SequenceRule, g: SequenceRule, ns) -> np.ndarray:
    """
    w_n(λ, g) = 1/λ_n + 1/λ_{n+1} - g_{n-1}/(λ_n g_n) - g_{n+1}/(λ_{n+1} g_n).

    Args:
        lam: Positive sequence λ
        g: Positive sequence g (g_0 = 0)
        ns: Index array (>= 1)

    Returns:
        Weight values; may be negative
    """
    ns = _indices(ns)
    inv_n = 1.0 / lam.array(ns)
    inv_next = 1.0 / lam.array(ns + 1)
    beta = g.power_exponent()

    if beta is None:
        g_n = g.array(ns)
        out = inv_n * (1.0 - g.array(ns - 1) / g_n) + inv_next * (1.0 - g.array(ns + 1) / g_n)
        return out

    x = 1.0 / ns.astype(np.float64)
    with np.errstate(divide="ignore", invalid="ignore"):
        if beta == 0.0:
            defect = np.zeros_like(x)
            lower_gap = np.zeros_like(x)
        elif beta == 1.0:
            defect = np.zeros_like(x)
            lower_gap = x
        else:
            defect = np.atleast_1d(pow_pair_defect(beta, x))
            lower_gap = -np.expm1(beta * np.log1p(-x))
        out = inv_next * defect + lam.reciprocal_step(ns) * lower_gap

    first = ns == 1
    if first.any():
        # g_0 = 0, so 1 - g_0/g_1 = 1
        out[first] = inv_n[first] + inv_next[first] * (1.0 - 2.0 ** beta)
    return out


def lambda_g_weight(lam: SequenceRule, g: SequenceRule, n: int) -> float:
    """Scalar w_n(λ, g); see lambda_g_weights."""
    return float(lambda_g_weights(lam, g, [n])[0])


def g_weights(g: SequenceRule, ns) -> np.ndarray:
    """w_n(g) = 2 - g_{n-1}/g_n - g_{n+1}/g_n, i.e. w_n(λ ≡ 1, g)."""
    return lambda_g_weights(UNIT, g, ns)


def g_weight(g: SequenceRule, n: int) -> float:
    """Scalar w_n(g)."""
    return float(g_weights(g, [n])[0])


def power_weights(alpha: float, beta: float, ns) -> np.ndarray:
    """
    w_n(α, β): 1 + 2^α - 2^{α+β} at n = 1, otherwise
    n^α [1 + (1+1/n)^α - (1-1/n)^β - (1+1/n)^{α+β}].

    For n >= 2 this is w_n(λ, g) with λ_n = n^{-α} and g_n = n^β.
    """
    ns = _indices(ns)
    out = lambda_g_weights(PowerRule(exponent=-alpha), PowerRule(exponent=beta), ns)
    out[ns == 1] = 1.0 + 2.0 ** alpha - 2.0 ** (alpha + beta)
    return out


def power_weight(alpha: float, beta: float, n: int) -> float:
    """Scalar w_n(α, β)."""
    return float(power_weights(alpha, beta, [n])[0])


def _check_p(p: float) -> None:
    if not p > 1.0:
        raise InputError(f"the p-weight needs p > 1, got {p}")


def fischer_weights(p: float, ns) -> np.ndarray:
    """
    (1 - ((n-1)/n)^r)^{p-1} - (((n+1)/n)^r - 1)^{p-1} with r = (p-1)/p.

    With u = 1 - (1-x)^r, v = (1+x)^r - 1 and u - v = D_r(x), the
    difference of powers is v^{p-1} expm1((p-1) log1p(D_r(x)/v)).
    """
    _check_p(p)
    ns = _indices(ns)
    r = (p - 1.0) / p
    x = 1.0 / ns.astype(np.float64)
    v = np.expm1(r * np.log1p(x))
    with np.errstate(divide="ignore", invalid="ignore"):
        defect = np.atleast_1d(pow_pair_defect(r, x))
        out = v ** (p - 1.0) * np.expm1((p - 1.0) * np.log1p(defect / v))
    first = ns == 1
    if first.any():
        out[first] = 1.0 - (2.0 ** r - 1.0) ** (p - 1.0)
    return out


def fischer_weight(p: float, n: int) -> float:
    """Scalar p-weight."""
    return float(fischer_weights(p, [n])[0])

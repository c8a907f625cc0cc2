"""
Cancellation-free Kernels

Shared primitives for evaluating differences of nearby powers without
catastrophic cancellation. Every function accepts scalars or numpy arrays
and returns the same shape (a float for scalar input).
"""

from typing import Union

import numpy as np

ArrayLike = Union[float, np.ndarray]


def _shaped(result: np.ndarray, like: ArrayLike) -> ArrayLike:
    """Return a Python float when the input was a scalar."""
    if np.ndim(like) == 0:
        return float(result)
    return result


def one_minus_pow(r: float, x: ArrayLike) -> ArrayLike:
    """
    1 - (1 + x)^r via expm1/log1p, valid for x > -1.

    Args:
        r: Exponent
        x: Offset from 1 (scalar or array)
    """
    arr = np.asarray(x, dtype=np.float64)
    return _shaped(-np.expm1(r * np.log1p(arr)), x)


def sqrt_gap(x: ArrayLike) -> ArrayLike:
    """1 - sqrt(1 - x) written as x / (1 + sqrt(1 - x)), for 0 <= x <= 1."""
    arr = np.asarray(x, dtype=np.float64)
    return _shaped(arr / (1.0 + np.sqrt(1.0 - arr)), x)


def keller_kernel(x: ArrayLike) -> ArrayLike:
    """
    2 - sqrt(1 - x) - sqrt(1 + x) in conjugated form.

    With s = sqrt(1 - x) + sqrt(1 + x) the value equals
    2x^2 / ((2 + s)(1 + sqrt(1 - x^2))), which has no subtraction of
    nearly equal quantities for small x.
    """
    arr = np.asarray(x, dtype=np.float64)
    s = np.sqrt(1.0 - arr) + np.sqrt(1.0 + arr)
    value = 2.0 * arr * arr / ((2.0 + s) * (1.0 + np.sqrt(1.0 - arr * arr)))
    return _shaped(value, x)


def pow_pair_defect(r: float, x: ArrayLike) -> ArrayLike:
    """
    2 - (1 - x)^r - (1 + x)^r for 0 < x <= 1 and r > 0.

    The pair sum is written as 2 e^{r t/2} cosh(h) with t = log1p(-x^2) and
    h = r atanh(x), so that

        2 - sum = -2 expm1(r t / 2) cosh(h) - 4 sinh(h / 2)^2

    and both terms are O(x^2) and individually accurate. At x = 1 the
    defect is 2 - 2^r.
    """
    arr = np.asarray(x, dtype=np.float64)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        t = np.log1p(-arr * arr)
        h = r * np.arctanh(arr)
        value = -2.0 * np.expm1(0.5 * r * t) * np.cosh(h) - 4.0 * np.sinh(0.5 * h) ** 2
    value = np.where(arr >= 1.0, 2.0 - 2.0 ** r, value)
    return _shaped(value, x)

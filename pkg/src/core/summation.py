"""
Compensated Summation

Error-free running accumulation and chunk-parallel window sums. Terms in
the remainder and weight sums span many orders of magnitude, so every
report sum in the package goes through this module.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, Tuple, Union

import numpy as np

from ..config import settings

logger = logging.getLogger(__name__)

Number = Union[float, complex]


def two_sum(u: float, v: float) -> Tuple[float, float]:
    """
    Error-free transformation of a sum.

    Returns:
        (s, t) with s = fl(u + v) and u + v = s + t exactly
    """
    s = u + v
    up = s - v
    vpp = s - up
    up -= u
    vpp -= v
    return s, -(up + vpp)


class Accumulator:
    """
    Running sum carried as an unevaluated pair (s, t).

    Adding a value keeps s + t within one ulp of the exact running sum,
    which is what a streaming window sum needs when the terms cannot be
    held in memory at once.
    """

    __slots__ = ("_s", "_t")

    def __init__(self, value: float = 0.0):
        self._s = float(value)
        self._t = 0.0

    def add(self, value: float) -> "Accumulator":
        """Add one term; returns self for chaining."""
        y, u = two_sum(float(value), self._t)
        self._s, self._t = two_sum(y, self._s)
        if self._s == 0.0:
            self._s = u
        else:
            self._t += u
        return self

    def extend(self, values: Iterable[float]) -> "Accumulator":
        """Add every term of an iterable."""
        for value in values:
            self.add(value)
        return self

    @property
    def value(self) -> float:
        """Current sum rounded to binary64."""
        return self._s + self._t

    def __float__(self) -> float:
        return self.value

    def __repr__(self) -> str:
        return f"Accumulator(value={self.value!r})"


def compensated_sum(values: Union[np.ndarray, Iterable[Number]]) -> Number:
    """
    Correctly rounded sum of real or complex terms.

    Real and imaginary parts are summed separately with math.fsum.

    Args:
        values: Terms to add

    Returns:
        float for real input, complex for complex input
    """
    array = np.asarray(values)
    if array.size == 0:
        return 0.0
    if np.iscomplexobj(array):
        real = math.fsum(array.real.ravel().tolist())
        imag = math.fsum(array.imag.ravel().tolist())
        return complex(real, imag)
    return math.fsum(array.astype(np.float64).ravel().tolist())


def chunk_bounds(start: int, stop: int, chunk_size: int) -> List[Tuple[int, int]]:
    """Split the half-open index window [start, stop) into fixed chunks."""
    return [
        (lo, min(lo + chunk_size, stop))
        for lo in range(start, stop, chunk_size)
    ]


def chunked_sum(
    term_fn: Callable[[np.ndarray], np.ndarray],
    start: int,
    stop: int,
    threads: Optional[int] = None,
    chunk_size: Optional[int] = None
) -> float:
    """
    Sum term_fn(n) over the integer window [start, stop).

    The window is cut into fixed chunks; each chunk is summed exactly with
    math.fsum and the chunk sums are reduced in chunk order, so the result
    does not depend on the number of worker threads.

    Args:
        term_fn: Vectorised map from an int64 index array to float terms
        start: First index (inclusive)
        stop: Last index (exclusive)
        threads: Worker threads (defaults to settings.threads)
        chunk_size: Indices per chunk (defaults to settings.chunk_size)

    Returns:
        The compensated window sum
    """
    threads = threads or settings.threads
    chunk_size = chunk_size or settings.chunk_size
    if stop <= start:
        return 0.0

    bounds = chunk_bounds(start, stop, chunk_size)
    logger.debug(
        "Summing window [%d, %d) in %d chunks on %d threads",
        start, stop, len(bounds), threads
    )

    def run(bound: Tuple[int, int]) -> float:
        lo, hi = bound
        terms = term_fn(np.arange(lo, hi, dtype=np.int64))
        return compensated_sum(terms)

    if threads == 1 or len(bounds) == 1:
        partials = [run(bound) for bound in bounds]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            partials = list(pool.map(run, bounds))

    return Accumulator().extend(partials).value


def chunked_map(
    fn: Callable[[np.ndarray], np.ndarray],
    start: int,
    stop: int,
    threads: Optional[int] = None,
    chunk_size: Optional[int] = None
) -> np.ndarray:
    """
    Evaluate fn on [start, stop) chunk by chunk and concatenate in order.

    Args:
        fn: Vectorised map from an int64 index array to values
        start: First index (inclusive)
        stop: Last index (exclusive)
        threads: Worker threads (defaults to settings.threads)
        chunk_size: Indices per chunk (defaults to settings.chunk_size)

    Returns:
        Array of fn values for every index in the window
    """
    threads = threads or settings.threads
    chunk_size = chunk_size or settings.chunk_size
    if stop <= start:
        return np.empty(0)

    bounds = chunk_bounds(start, stop, chunk_size)

    def run(bound: Tuple[int, int]) -> np.ndarray:
        lo, hi = bound
        return np.asarray(fn(np.arange(lo, hi, dtype=np.int64)))

    if threads == 1 or len(bounds) == 1:
        parts = [run(bound) for bound in bounds]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(run, bounds))

    return np.concatenate(parts)

"""
Associate Space Bound

A sequence b lies in the associate space of Γ_p when the row functionals

    R_n = (Σ_{k<n} |γ_k^{-1/p} (b_k - b_{k+1})|^{q*} + |γ_n^{-1/p} b_n|^{q*})^{1/q*}

stay bounded, with q* = p/(p-1). R_n is not monotone in general (b_n = 2^{-n}
has R_1 = 1/2 > R_2), so the scan keeps a running maximum.
"""

import logging
import math
from typing import Callable, List, Union

import numpy as np
from pydantic import BaseModel, Field

from ..config import settings
from ..core.errors import InputError
from ..core.rules import SequenceRule
from ..core.sequences import FiniteSequence
from .config import GammaSpaceConfig

logger = logging.getLogger(__name__)

Generator = Callable[[np.ndarray], np.ndarray]
DualInput = Union[FiniteSequence, SequenceRule, Generator]


class DualTrend:
    BOUNDED = "bounded-looking"
    GROWING = "growing"


class DualBoundReport(BaseModel):
    """
    Scan of the row functionals up to a horizon.

    Attributes:
        horizon: Last index scanned
        sup_value: max R_n over n <= horizon
        argmax_n: First index attaining the maximum
        trend: "bounded-looking" or "growing"
        slope: log-log slope of the running maximum over the last decade
        last_value: R_horizon
    """

    horizon: int = Field(..., ge=2)
    sup_value: float
    argmax_n: int
    trend: str
    slope: float
    last_value: float

    def to_row(self) -> dict:
        return self.model_dump()


def _values(b: DualInput, stop: int) -> np.ndarray:
    ns = np.arange(1, stop + 1, dtype=np.int64)
    if isinstance(b, FiniteSequence):
        return b.dense(stop)
    if isinstance(b, SequenceRule):
        return b.array(ns).astype(np.complex128)
    return np.asarray(b(ns), dtype=np.complex128)


def row_functionals(b: DualInput, cfg: GammaSpaceConfig, horizon: int) -> np.ndarray:
    """R_1 .. R_horizon, built from one running prefix sum."""
    if horizon < 2:
        raise InputError(f"dual bound needs horizon >= 2, got {horizon}")
    qs = cfg.conjugate
    values = _values(b, horizon + 1)
    ns = np.arange(1, horizon + 1, dtype=np.int64)
    scale = cfg.gamma.array(ns) ** (-1.0 / cfg.p)
    steps = np.abs(scale * (values[:-1] - values[1:])) ** qs
    prefix = np.concatenate(([0.0], np.cumsum(steps[:-1])))
    diagonal = np.abs(scale * values[:-1]) ** qs
    return (prefix + diagonal) ** (1.0 / qs)


def _decade_slope(running: np.ndarray) -> float:
    horizon = running.size
    start = max(horizon // 10, 1)
    lo, hi = running[start - 1], running[-1]
    if lo == 0.0:
        return 0.0 if hi == 0.0 else math.inf
    if horizon == start:
        return 0.0
    return math.log(hi / lo) / math.log(horizon / start)


def dual_bound(b: DualInput, cfg: GammaSpaceConfig, horizon: int) -> DualBoundReport:
    """
    Running supremum of the row functionals and its growth trend.

    Args:
        b: Candidate sequence, a rule or a generator index array -> values
        cfg: Space configuration
        horizon: Last index (>= 2)

    Returns:
        DualBoundReport; the trend is "growing" when the log-log slope of the
        running maximum over the last decade exceeds Settings.dual_growth_slope
    """
    rows = row_functionals(b, cfg, horizon)
    running = np.maximum.accumulate(rows)
    argmax = int(np.argmax(rows)) + 1
    slope = _decade_slope(running)
    trend = DualTrend.GROWING if slope > settings.dual_growth_slope else DualTrend.BOUNDED
    logger.info("dual bound to n=%d: sup %.6g at n=%d (%s)", horizon, running[-1], argmax, trend)
    return DualBoundReport(
        horizon=horizon,
        sup_value=float(running[-1]),
        argmax_n=argmax,
        trend=trend,
        slope=slope,
        last_value=float(rows[-1]),
    )


def dual_sweep(b: DualInput, cfg: GammaSpaceConfig, horizons: List[int]) -> List[DualBoundReport]:
    """dual_bound at each horizon."""
    return [dual_bound(b, cfg, h) for h in horizons]

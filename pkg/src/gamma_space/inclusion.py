"""
Inclusion Diagnostics

Witness sequences truncated at growing horizons:

    lp_in_Wp       x = (-1)^n has a bounded Γ_p norm under Keller-type
                   weights while its p-norm grows like horizon^{1/p}.
    linf_in_Gamma  x ≡ 1 has Γ_p norm at most (Σ Q_n^p γ_n)^{1/p}, provided
                   the comparison series converges.
"""

import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel

from ..config import settings
from ..core.errors import HypothesisError, InputError, TailNotComputableError
from ..core.rules import DIVERGENT, ConstRule, GeometricRule, PowerRule
from ..core.sequences import FiniteSequence
from ..core.summation import compensated_sum
from .config import GammaSpaceConfig
from .norm import gamma_norm, lp_norm

logger = logging.getLogger(__name__)


class InclusionKind:
    LP_IN_WP = "lp_in_Wp"
    LINF_IN_GAMMA = "linf_in_Gamma"


def comparison_series(
    cfg: GammaSpaceConfig,
    horizon: int,
    tail_terms: Optional[int] = None
) -> Tuple[float, float]:
    """
    Bracket Σ_n Q_n^p γ_n for q ≡ c (so Q_n = c·n).

    The first horizon + tail_terms terms are summed; the rest is bracketed
    by a ratio test for geometric γ and by integral comparison for power γ.

    Returns:
        (lo, hi); DIVERGENT when the series diverges

    Raises:
        TailNotComputableError: q is not constant or γ has no usable tail form
    """
    if not isinstance(cfg.q, ConstRule):
        raise TailNotComputableError(
            f"comparison series needs a constant q, got {cfg.q.label()}"
        )
    gamma, p, c = cfg.gamma, cfg.p, cfg.q.value
    if gamma.tail_bracket(1) == DIVERGENT:
        return DIVERGENT

    tail_terms = settings.tail_explicit_terms if tail_terms is None else tail_terms
    M = horizon + tail_terms
    ns = np.arange(1, M + 1, dtype=np.int64)
    head = compensated_sum((c * ns.astype(np.float64)) ** p * gamma.array(ns))

    if isinstance(gamma, GeometricRule):
        # term ratios ((n+1)/n)^p r decrease in n, so ρ bounds every later ratio
        first = (c * (M + 1.0)) ** p * gamma.at(M + 1)
        rho = ((M + 2.0) / (M + 1.0)) ** p * gamma.ratio
        if rho >= 1.0:
            raise TailNotComputableError(
                f"ratio bound {rho:.6g} >= 1 at n={M}; raise the horizon or tail terms"
            )
        return head + first, head + first / (1.0 - rho)

    exponent = gamma.power_exponent()
    if exponent is None:
        raise TailNotComputableError(
            f"no tail bracket for Σ Q_n^p γ_n with γ = {gamma.label()}"
        )
    bracket = PowerRule(exponent=p + exponent).tail_bracket(M)
    if bracket == DIVERGENT:
        return DIVERGENT
    scale = c ** p * gamma.at(1)
    return head + scale * bracket[0], head + scale * bracket[1]


class InclusionRow(BaseModel):
    """
    One truncation horizon.

    Attributes:
        horizon: Truncation index of the witness
        gamma_norm: Γ_p norm of the truncated witness
        gamma_norm_lo: Certified lower end of the norm
        gamma_norm_hi: Certified upper end of the norm
        p_norm: p-norm of the truncated witness (lp_in_Wp)
        bound: (Σ Q_n^p γ_n)^{1/p} upper bracket (linf_in_Gamma)
    """

    horizon: int
    gamma_norm: float
    gamma_norm_lo: float
    gamma_norm_hi: float
    p_norm: Optional[float] = None
    bound: Optional[float] = None


class InclusionReport(BaseModel):
    """Rows over the horizons plus the trend verdicts."""

    kind: str
    rows: List[InclusionRow]
    bounded: bool
    diverging: bool

    def to_rows(self) -> List[dict]:
        return [
            {"kind": self.kind, **row.model_dump(), "bounded": self.bounded, "diverging": self.diverging}
            for row in self.rows
        ]


def _slope(h0: int, h1: int, v0: float, v1: float) -> float:
    if v0 <= 0.0 or h1 == h0:
        return 0.0
    return math.log(v1 / v0) / math.log(h1 / h0)


def _lp_in_wp(cfg: GammaSpaceConfig, horizons: List[int]) -> InclusionReport:
    rows = []
    for h in horizons:
        x = FiniteSequence.from_values((-1.0) ** np.arange(1, h + 1))
        norm = gamma_norm(x, cfg)
        rows.append(InclusionRow(
            horizon=h,
            gamma_norm=norm.value,
            gamma_norm_lo=norm.lo,
            gamma_norm_hi=norm.hi,
            p_norm=lp_norm(x, cfg.p),
        ))
    limit = settings.dual_growth_slope
    norm_slopes = [
        _slope(a.horizon, b.horizon, a.gamma_norm, b.gamma_norm) for a, b in zip(rows, rows[1:])
    ]
    p_slopes = [_slope(a.horizon, b.horizon, a.p_norm, b.p_norm) for a, b in zip(rows, rows[1:])]
    bounded = not norm_slopes or norm_slopes[-1] <= limit
    diverging = bool(p_slopes) and all(s > limit for s in p_slopes)
    return InclusionReport(kind=InclusionKind.LP_IN_WP, rows=rows, bounded=bounded, diverging=diverging)


def _linf_in_gamma(cfg: GammaSpaceConfig, horizons: List[int]) -> InclusionReport:
    lo, hi = comparison_series(cfg, horizons[-1])
    if math.isinf(hi):
        raise HypothesisError(
            f"Σ Q_n^p γ_n diverges for γ = {cfg.gamma.label()}, p = {cfg.p:g}"
        )
    bound = hi ** (1.0 / cfg.p)
    rows = []
    for h in horizons:
        norm = gamma_norm(FiniteSequence.from_values(np.ones(h)), cfg)
        rows.append(InclusionRow(
            horizon=h,
            gamma_norm=norm.value,
            gamma_norm_lo=norm.lo,
            gamma_norm_hi=norm.hi,
            bound=bound,
        ))
    bounded = all(r.gamma_norm_lo <= bound + settings.tol(bound) for r in rows)
    return InclusionReport(kind=InclusionKind.LINF_IN_GAMMA, rows=rows, bounded=bounded, diverging=False)


def inclusion_diagnostic(
    kind: str,
    cfg: GammaSpaceConfig,
    horizons: Sequence[int]
) -> InclusionReport:
    """
    Evaluate a witness sequence at growing truncation horizons.

    Args:
        kind: "lp_in_Wp" or "linf_in_Gamma"
        cfg: Space configuration
        horizons: Truncation indices (>= 1)

    Returns:
        InclusionReport with rows sorted by horizon

    Raises:
        InputError: unknown kind or empty/invalid horizons
        HypothesisError: the comparison series diverges (linf_in_Gamma)
    """
    horizons = sorted(set(int(h) for h in horizons))
    if not horizons or horizons[0] < 1:
        raise InputError("inclusion diagnostics need horizons >= 1")
    if kind == InclusionKind.LP_IN_WP:
        report = _lp_in_wp(cfg, horizons)
    elif kind == InclusionKind.LINF_IN_GAMMA:
        report = _linf_in_gamma(cfg, horizons)
    else:
        raise InputError(f"unknown inclusion kind '{kind}' (choose lp_in_Wp or linf_in_Gamma)")
    logger.info("%s over %s: bounded=%s diverging=%s", kind, horizons, report.bounded, report.diverging)
    return report

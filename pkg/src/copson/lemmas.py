"""
Copson Lemma Scans

Four pointwise inequalities behind the improved Copson weight, with
P_n = S_n^{2-c}/n and mid_n = (P_n + P_{n+1}) / (8n^2):

    monotone-scale             P_n > P_{n+1}                      proven for 3/2 <= c <= 2
    weight-above-midpoint      V_n > mid_n                        proven for 3/2 <= c <= 2
    midpoint-above-comparator  mid_n > (c-1)^2/4 · n/S_n^c        proven for 1 < c <= 3/2
    weight-chain               V_n > mid_n > (c-1)^2/4 · n/S_n^c  proven at c = 3/2

Each scan records the minimum margin, where it occurs and the first index
with a non-positive margin. Inside a lemma's proven range a violation
raises AssertionViolation; outside it is only recorded.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional

import numpy as np
from pydantic import BaseModel, Field

from ..core.errors import AssertionViolation, InputError
from ..core.summation import chunked_map
from ..weights.comparators import copson_comparator
from ..weights.copson import check_copson_exponent, copson_scale, copson_scale_step, copson_weights
from .terms import CopsonTerms

logger = logging.getLogger(__name__)

MarginFn = Callable[[float, np.ndarray], np.ndarray]


def _midpoint(c: float, n: np.ndarray) -> np.ndarray:
    return (copson_scale(c, n) + copson_scale(c, n + 1.0)) / (8.0 * n * n)


def monotone_scale_margin(c: float, ns: np.ndarray) -> np.ndarray:
    """P_n - P_{n+1}."""
    return copson_scale_step(c, np.asarray(ns, dtype=np.float64))


def weight_midpoint_margin(c: float, ns: np.ndarray) -> np.ndarray:
    """V_n - mid_n."""
    n = np.asarray(ns, dtype=np.float64)
    return copson_weights(c, ns) - _midpoint(c, n)


def midpoint_comparator_margin(c: float, ns: np.ndarray) -> np.ndarray:
    """mid_n - (c-1)^2/4 · n/S_n^c."""
    n = np.asarray(ns, dtype=np.float64)
    return _midpoint(c, n) - copson_comparator(c, n)


def weight_chain_margin(c: float, ns: np.ndarray) -> np.ndarray:
    """The smaller of the two chain margins."""
    return np.minimum(weight_midpoint_margin(c, ns), midpoint_comparator_margin(c, ns))


@dataclass(frozen=True)
class CopsonLemma:
    """One pointwise inequality with its proven exponent range."""

    lemma_id: str
    check: str
    margin: MarginFn
    c_min: float
    c_max: float
    include_min: bool = True

    def proven_for(self, c: float) -> bool:
        above = c >= self.c_min if self.include_min else c > self.c_min
        return above and c <= self.c_max


LEMMAS: List[CopsonLemma] = [
    CopsonLemma("monotone-scale", "copson-monotone-scale", monotone_scale_margin, 1.5, 2.0),
    CopsonLemma(
        "weight-above-midpoint", "copson-weight-midpoint", weight_midpoint_margin, 1.5, 2.0
    ),
    CopsonLemma(
        "midpoint-above-comparator", "copson-midpoint-comparator", midpoint_comparator_margin,
        1.0, 1.5, include_min=False,
    ),
    CopsonLemma("weight-chain", "copson-weight-chain", weight_chain_margin, 1.5, 1.5),
]


class LemmaResult(BaseModel):
    """Scan result of one lemma."""

    lemma_id: str
    check: str
    proven: bool
    min_margin: float
    argmin_n: int
    first_violation_n: Optional[int] = None


class LemmaReport(BaseModel):
    """
    All lemma scans at one exponent.

    Attributes:
        c: Copson exponent
        n_min: First scanned index
        n_max: Last scanned index
        results: One entry per lemma
    """

    c: float
    n_min: int = 1
    n_max: int = Field(..., ge=2)
    results: List[LemmaResult]

    def result(self, lemma_id: str) -> LemmaResult:
        for result in self.results:
            if result.lemma_id == lemma_id:
                return result
        raise KeyError(lemma_id)

    def rows(self) -> List[Dict[str, object]]:
        """CSV rows with columns c, lemma_id, min_margin, argmin_n, first_violation_n."""
        return [
            {
                "c": self.c,
                "lemma_id": r.lemma_id,
                "min_margin": r.min_margin,
                "argmin_n": r.argmin_n,
                "first_violation_n": r.first_violation_n,
                "proven": r.proven,
                "check": r.check,
            }
            for r in self.results
        ]


def _scan(
    lemma: CopsonLemma,
    c: float,
    n_max: int,
    threads: Optional[int],
    chunk_size: Optional[int]
) -> LemmaResult:
    margins = chunked_map(lambda ns: lemma.margin(c, ns), 1, n_max + 1, threads, chunk_size)
    bad = np.flatnonzero(~(margins > 0.0))
    idx = int(np.argmin(margins))
    return LemmaResult(
        lemma_id=lemma.lemma_id,
        check=lemma.check,
        proven=lemma.proven_for(c),
        min_margin=float(margins[idx]),
        argmin_n=idx + 1,
        first_violation_n=int(bad[0]) + 1 if bad.size else None,
    )


def lemma_report(
    c: float,
    n_max: int,
    threads: Optional[int] = None,
    chunk_size: Optional[int] = None,
    strict: bool = True
) -> LemmaReport:
    """
    Scan every lemma over n = 1..n_max.

    Args:
        c: Exponent in (1, 2]
        n_max: Last index (>= 2)
        threads: Worker threads for the chunked scan
        chunk_size: Indices per chunk
        strict: Raise on violations inside proven ranges

    Raises:
        InputError: c outside (1, 2] or n_max < 2
        AssertionViolation: a lemma fails inside its proven range (strict mode)
    """
    check_copson_exponent(c)
    if n_max < 2:
        raise InputError(f"lemma scans need n_max >= 2, got {n_max}")

    results = [_scan(lemma, c, n_max, threads, chunk_size) for lemma in LEMMAS]
    report = LemmaReport(c=c, n_max=n_max, results=results)

    for result in results:
        if result.first_violation_n is None:
            continue
        if result.proven and strict:
            logger.error("%s violated at c=%g", result.check, c)
            raise AssertionViolation(
                result.check,
                f"lemma {result.lemma_id} fails at c={c:g}",
                index=result.first_violation_n,
                value=result.min_margin,
            )
        logger.warning(
            "%s: first violation at n=%d for c=%g (outside the proven range)",
            result.lemma_id, result.first_violation_n, c
        )
    return report


def lemma_grid(
    c_values: Iterable[float],
    n_max: int,
    threads: Optional[int] = None,
    chunk_size: Optional[int] = None,
    strict: bool = True
) -> List[LemmaReport]:
    """lemma_report for every exponent in c_values."""
    return [lemma_report(c, n_max, threads, chunk_size, strict) for c in c_values]


def lemma_margins_at(c: float, n: int) -> Dict[str, float]:
    """
    Scalar lemma margins at one index, from the triangular-number terms.

    Used to cross-check the vectorised scans.
    """
    check_copson_exponent(c)
    terms = CopsonTerms.at(n)
    p_n, p_next = terms.scale(c), terms.scale_next(c)
    mid = (p_n + p_next) / (8.0 * n * n)
    weight = float(copson_weights(c, [n])[0])
    comparator = (c - 1.0) ** 2 / 4.0 * n / terms.S_n ** c
    return {
        "monotone-scale": p_n - p_next,
        "weight-above-midpoint": weight - mid,
        "midpoint-above-comparator": mid - comparator,
        "weight-chain": min(weight - mid, mid - comparator),
    }

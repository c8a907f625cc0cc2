"""
Base Weight - Abstract Foundation for All Weight Families

Every Hardy-type weight family evaluates its values, its classical
comparator and whether the given parameters lie in the range where the
improvement over the comparator is proven.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, Iterator, Optional

import numpy as np
from pydantic import BaseModel, Field

from ..core.errors import AssertionViolation, InputError
from ..core.summation import chunked_map

logger = logging.getLogger(__name__)

UNPROVEN = "unproven-range"


class WeightCheck:
    """Identifiers of the weight improvement checks."""

    KELLER = "keller-weight-bound"
    G_WEIGHT = "g-weight-bound"
    LAMBDA_G = "lambda-g-weight-bound"
    POWER = "power-weight-bound"
    FISCHER = "p-weight-bound"
    COPSON = "copson-weight-bound"
    TABLE = "candidate-weight-bound"


class WeightValue(BaseModel):
    """
    A weight value next to its classical comparator.

    Attributes:
        n: Index
        value: Weight w_n
        classical_bound: Comparator at n
        margin: value - classical_bound
        proven: Whether the improvement is proven for these parameters
        family: Family label
        check: Check identifier
    """

    n: int = Field(..., ge=1)
    value: float
    classical_bound: float
    margin: float
    proven: bool
    family: str
    check: str

    @property
    def flags(self) -> str:
        return "" if self.proven else UNPROVEN


@dataclass
class WeightSweep:
    """Weight values, comparators and margins over an index window."""

    family: str
    check: str
    proven: bool
    ns: np.ndarray
    values: np.ndarray
    bounds: np.ndarray

    @property
    def margins(self) -> np.ndarray:
        return self.values - self.bounds

    @property
    def min_margin(self) -> float:
        return float(self.margins.min()) if self.ns.size else float("nan")

    @property
    def argmin(self) -> Optional[int]:
        return int(self.ns[np.argmin(self.margins)]) if self.ns.size else None

    @property
    def first_violation(self) -> Optional[int]:
        """First index whose weight does not strictly exceed the comparator."""
        bad = np.flatnonzero(~(self.margins > 0.0))
        return int(self.ns[bad[0]]) if bad.size else None

    def rows(self) -> Iterator[Dict[str, object]]:
        """Report rows with columns n, value, classical_bound, margin."""
        flag = "" if self.proven else UNPROVEN
        for n, value, bound in zip(self.ns.tolist(), self.values.tolist(), self.bounds.tolist()):
            yield {
                "n": n,
                "value": value,
                "classical_bound": bound,
                "margin": value - bound,
                "proven": self.proven,
                "flags": flag,
                "check": self.check,
            }


class BaseWeight(ABC):
    """
    Abstract base class for all weight families.

    Subclasses provide vectorised values and comparators; the base class
    builds single values, sweeps and range-gated assertions on top.
    """

    family: str = "weight"
    check: str = WeightCheck.KELLER

    @abstractmethod
    def values(self, ns: np.ndarray) -> np.ndarray:
        """Weight values at the indices ns (>= 1)."""

    @abstractmethod
    def comparator(self, ns: np.ndarray) -> np.ndarray:
        """Classical comparator at the indices ns."""

    def in_proven_range(self, stop: int) -> bool:
        """Whether the improvement is proven on [1, stop]."""
        return True

    def value(self, n: int) -> float:
        """Weight value at a single index."""
        return float(self.values(np.array([n], dtype=np.int64))[0])

    def margin(self, n: int) -> WeightValue:
        """
        Weight, comparator and margin at n.

        Args:
            n: Index >= 1

        Returns:
            WeightValue; proven is False outside the proven parameter range
        """
        if n < 1:
            raise InputError(f"weight index must be >= 1, got {n}")
        ns = np.array([n], dtype=np.int64)
        value = float(self.values(ns)[0])
        bound = float(self.comparator(ns)[0])
        return WeightValue(
            n=n,
            value=value,
            classical_bound=bound,
            margin=value - bound,
            proven=self.in_proven_range(n + 1),
            family=self.family,
            check=self.check,
        )

    def sweep(
        self,
        start: int,
        stop: int,
        threads: Optional[int] = None,
        chunk_size: Optional[int] = None
    ) -> WeightSweep:
        """
        Evaluate values and comparators on [start, stop].

        Args:
            start: First index (>= 1)
            stop: Last index (inclusive)
            threads: Worker threads for chunked evaluation
            chunk_size: Indices per chunk
        """
        if start < 1 or stop < start:
            raise InputError(f"invalid index range {start}:{stop}")
        values = chunked_map(self.values, start, stop + 1, threads, chunk_size)
        bounds = chunked_map(self.comparator, start, stop + 1, threads, chunk_size)
        ns = np.arange(start, stop + 1, dtype=np.int64)
        proven = self.in_proven_range(stop + 1)
        logger.info(
            "Swept %s on [%d, %d]: min margin %.3e (%s)",
            self.family, start, stop, float((values - bounds).min()),
            "proven" if proven else "exploratory"
        )
        return WeightSweep(self.family, self.check, proven, ns, values, bounds)

    def assert_improvement(self, start: int, stop: int, **kwargs) -> WeightSweep:
        """
        Sweep and raise when a proven improvement fails.

        Raises:
            AssertionViolation: if the family is in its proven range and
                some weight does not exceed the comparator
        """
        result = self.sweep(start, stop, **kwargs)
        violation = result.first_violation
        if violation is None:
            return result
        margin = float(result.margins[violation - start])
        if result.proven:
            logger.error("%s violated at n=%d", self.check, violation)
            raise AssertionViolation(
                self.check,
                f"{self.family} weight does not exceed its comparator",
                index=violation,
                value=margin,
            )
        logger.warning(
            "%s: margin %.3e at n=%d outside the proven range", self.family, margin, violation
        )
        return result

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(family='{self.family}')"

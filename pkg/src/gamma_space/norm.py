"""
Gamma Space Norm

The Γ_p norm of a finitely supported x. Its partial sums A_n are constant
past the support end m, so the norm sum has the tail |A_m|^p Σ_{n>m} γ_n.
The tail is summed for Settings.tail_explicit_terms indices and the rest
is bracketed by the γ rule's closed form; rules without one refuse.
"""

import logging
import math
from typing import Optional

import numpy as np
from pydantic import BaseModel

from ..config import settings
from ..core.errors import InputError, TailNotComputableError
from ..core.rules import DIVERGENT, SequenceRule
from ..core.sequences import FiniteSequence, partial_sums
from ..core.summation import compensated_sum
from .config import GammaSpaceConfig

logger = logging.getLogger(__name__)


class NormValue(BaseModel):
    """
    A norm with its certified interval.

    Attributes:
        p: Exponent
        power_lo: Lower end of the p-th power sum
        power_hi: Upper end of the p-th power sum
    """

    p: float
    power_lo: float
    power_hi: float

    @property
    def power(self) -> float:
        """Midpoint of the p-th power sum."""
        return 0.5 * (self.power_lo + self.power_hi)

    @property
    def value(self) -> float:
        return self.power ** (1.0 / self.p)

    @property
    def lo(self) -> float:
        return self.power_lo ** (1.0 / self.p)

    @property
    def hi(self) -> float:
        return self.power_hi ** (1.0 / self.p)

    @property
    def exact(self) -> bool:
        return self.power_lo == self.power_hi

    @property
    def divergent(self) -> bool:
        return math.isinf(self.power_hi)

    def __float__(self) -> float:
        return self.value


def tail_power_sum(
    level: float,
    start: int,
    gamma: SequenceRule,
    tail_terms: Optional[int] = None
):
    """
    Bracket level · Σ_{n>start} γ_n.

    Returns:
        (lo, hi), (inf, inf) for divergent γ

    Raises:
        TailNotComputableError: γ has no closed-form tail
    """
    if level == 0.0:
        return 0.0, 0.0
    tail_terms = settings.tail_explicit_terms if tail_terms is None else tail_terms
    bracket = gamma.tail_bracket(start + tail_terms)
    if bracket is None:
        raise TailNotComputableError(
            f"the tail of Σ γ_n for γ = {gamma.label()} cannot be bracketed; "
            "give the table a 'beyond' rule or use an input with zero total weighted sum"
        )
    if bracket == DIVERGENT:
        return math.inf, math.inf
    explicit = compensated_sum(gamma.window(start + 1, start + tail_terms))
    return level * (explicit + bracket[0]), level * (explicit + bracket[1])


def weighted_power_norm(
    A: FiniteSequence,
    gamma: SequenceRule,
    p: float,
    tail_terms: Optional[int] = None
) -> NormValue:
    """(Σ_n γ_n |A_n|^p)^{1/p} for partial sums A with a plateau."""
    m = max(A.end, 0)
    ns = np.arange(1, m + 1, dtype=np.int64)
    head = compensated_sum(gamma.array(ns) * np.abs(A.dense(m)) ** p)
    lo, hi = tail_power_sum(abs(A.plateau) ** p, m, gamma, tail_terms)
    return NormValue(p=p, power_lo=head + lo, power_hi=head + hi)


def gamma_norm(
    x: FiniteSequence,
    cfg: GammaSpaceConfig,
    tail_terms: Optional[int] = None
) -> NormValue:
    """
    ‖x‖ in Γ_p.

    Args:
        x: Finitely supported sequence
        cfg: Space configuration
        tail_terms: Explicit tail indices (defaults to Settings.tail_explicit_terms)

    Returns:
        NormValue; exact when the total weighted sum of x is zero

    Raises:
        TailNotComputableError: nonzero total with a γ rule lacking a tail
    """
    if x.has_plateau:
        raise InputError("Γ_p norms take finitely supported sequences")
    result = weighted_power_norm(partial_sums(x, cfg.q), cfg.gamma, cfg.p, tail_terms)
    if result.divergent:
        logger.warning("Γ_p norm diverges for γ = %s", cfg.gamma.label())
    return result


def lp_norm(x: FiniteSequence, p: float) -> float:
    """(Σ|x_n|^p)^{1/p}; infinite for a nonzero plateau."""
    if not p >= 1.0:
        raise InputError(f"p-norms need p >= 1, got {p}")
    if x.has_plateau:
        return math.inf
    return compensated_sum(np.abs(x.values) ** p) ** (1.0 / p)

"""
Stability Report

Side-by-side evaluation of the stable Keller and Copson forms, their
textbook subtraction forms and the mpmath reference, reporting how many
decimal digits each binary64 form loses.
"""

import logging
from typing import Iterable, List, Optional

from pydantic import BaseModel

from ..core.precision import digits_lost, reference_context, relative_error
from .copson import copson_weight, copson_weight_naive
from .keller import keller_weight, keller_weight_naive
from .reference import copson_weight_mp, keller_weight_mp

logger = logging.getLogger(__name__)

DEFAULT_STABILITY_NS = (10, 10 ** 3, 10 ** 6, 10 ** 9, 10 ** 12)


class StabilityRow(BaseModel):
    """One family at one index."""

    family: str
    n: int
    stable: float
    naive: float
    reference: float
    stable_relative_error: float
    naive_relative_error: float
    stable_digits_lost: float
    naive_digits_lost: float


def _row(family: str, n: int, stable: float, naive: float, exact) -> StabilityRow:
    return StabilityRow(
        family=family,
        n=n,
        stable=stable,
        naive=naive,
        reference=float(exact),
        stable_relative_error=relative_error(stable, exact),
        naive_relative_error=relative_error(naive, exact),
        stable_digits_lost=digits_lost(stable, exact),
        naive_digits_lost=digits_lost(naive, exact),
    )


def stability_report(
    n_values: Iterable[int] = DEFAULT_STABILITY_NS,
    c: float = 1.5,
    dps: Optional[int] = None
) -> List[StabilityRow]:
    """
    Compare stable, naive and reference Keller and Copson weights.

    Args:
        n_values: Indices to evaluate
        c: Copson exponent
        dps: Reference precision in decimal digits

    Returns:
        Two rows per index, Keller first
    """
    rows = []
    with reference_context(dps):
        for n in n_values:
            rows.append(_row(
                "keller", n, keller_weight(n), keller_weight_naive(n), keller_weight_mp(n, dps)
            ))
            rows.append(_row(
                "copson", n, copson_weight(c, n), copson_weight_naive(c, n),
                copson_weight_mp(c, n, dps)
            ))
    for row in rows:
        logger.debug(
            "%s n=%d: stable loses %.1f digits, naive loses %.1f",
            row.family, row.n, row.stable_digits_lost, row.naive_digits_lost
        )
    return rows

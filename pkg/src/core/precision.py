"""
Reference Precision Mode

Extended-precision evaluation with mpmath, used as the oracle for the
binary64 stable forms. The working precision defaults to
Settings.reference_dps decimal digits.
"""

import threading
from contextlib import contextmanager
from typing import Any, Iterator, Optional, Union

from mpmath import mp, mpf

from ..config import settings
from .errors import InputError

MIN_REFERENCE_DPS = 30

# mp.dps is process-global; reference evaluations hold this lock while it is raised
_PRECISION_LOCK = threading.RLock()


@contextmanager
def reference_context(dps: Optional[int] = None) -> Iterator[Any]:
    """
    Temporarily raise the mpmath working precision.

    The mpmath context is shared by every thread, so the block runs under a
    re-entrant lock: reference evaluations issued from chunked_map workers
    are serialized, and nesting within one thread is allowed.

    Args:
        dps: Decimal digits (defaults to settings.reference_dps, minimum 30)
    """
    dps = dps or settings.reference_dps
    if dps < MIN_REFERENCE_DPS:
        raise InputError(f"reference precision needs >= {MIN_REFERENCE_DPS} digits, got {dps}")
    with _PRECISION_LOCK, mp.workdps(dps):
        yield mp


def relative_error(approx: Union[float, mpf], exact: Union[float, mpf]) -> float:
    """|approx - exact| / |exact| evaluated in extended precision."""
    with reference_context():
        exact = mpf(exact)
        if exact == 0:
            return float(abs(mpf(approx)))
        return float(abs((mpf(approx) - exact) / exact))


def digits_lost(approx: Union[float, mpf], exact: Union[float, mpf]) -> float:
    """
    Decimal digits lost relative to the binary64 precision of ~15.95 digits.
    """
    err = relative_error(approx, exact)
    if err == 0.0:
        return 0.0
    with reference_context():
        correct = -mp.log10(mpf(err))
        return max(0.0, float(mpf("15.95") - correct))

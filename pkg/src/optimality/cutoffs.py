"""
Logarithmic Cutoff Sequences

γ^N_n = 1 for n < N, a logarithmic interpolation on [N, N^2] and 0 for
n > N^2. The Hardy cutoff interpolates with (2 log N - √λ_n log n)/log N,
the Copson cutoff with (2 log N - (2n/(n+1))^{1/4} log n)/log N. Values in
the window are clamped to [0, 1]; for λ_N > 1 the unclamped formula starts
at 2 - √λ_N instead of 1.

Differences γ_n - γ_{n-1} inside the window are evaluated from the
interpolation formula directly, so that their relative accuracy does not
degrade like n log N.
"""

from dataclasses import dataclass
from math import log
from typing import Optional

import numpy as np

from ..config import settings
from ..core.errors import HypothesisError, InputError
from ..core.rules import UNIT, SequenceRule
from ..core.sequences import FiniteSequence


class CutoffKind:
    HARDY = "hardy"
    COPSON = "copson"


def check_cutoff_parameter(N: int, max_n: Optional[int] = None) -> None:
    """Reject N < 2 and N above the sweep cap."""
    max_n = max_n or settings.max_cutoff_n
    if N < 2:
        raise InputError(f"cutoff parameter N must be >= 2, got {N}")
    if N > max_n:
        raise InputError(
            f"cutoff parameter N={N} exceeds the cap {max_n} (raise max_cutoff_n to allow it)"
        )


def _log_step(ns: np.ndarray) -> np.ndarray:
    """log n - log(n-1) for n >= 2."""
    return -np.log1p(-1.0 / ns)


@dataclass(frozen=True)
class CutoffSequence:
    """
    A cutoff sequence γ^N of the given kind.

    Attributes:
        N: Cutoff parameter (>= 2)
        kind: "hardy" or "copson"
        lam: λ of the Hardy cutoff (unused for Copson)
    """

    N: int
    kind: str
    lam: SequenceRule = UNIT

    def __post_init__(self):
        if self.N < 2:
            raise InputError(f"cutoff parameter N must be >= 2, got {self.N}")
        if self.kind not in (CutoffKind.HARDY, CutoffKind.COPSON):
            raise InputError(f"unknown cutoff kind '{self.kind}'")

    @property
    def log_n(self) -> float:
        return log(self.N)

    @property
    def last(self) -> int:
        """N^2, the last index of the interpolation window."""
        return self.N * self.N

    def _factor(self, n: np.ndarray) -> np.ndarray:
        if self.kind == CutoffKind.HARDY:
            return np.sqrt(self.lam.array(n.astype(np.int64)))
        return (2.0 * n / (n + 1.0)) ** 0.25

    def raw(self, ns) -> np.ndarray:
        """The unclamped interpolation formula at ns."""
        n = np.atleast_1d(np.asarray(ns, dtype=np.float64))
        return (2.0 * self.log_n - self._factor(n) * np.log(n)) / self.log_n

    def raw_step(self, ns) -> np.ndarray:
        """
        raw(n) - raw(n-1) for n >= 2 without subtracting nearby values.

        With f_n the factor in front of log n,
        f_n log n - f_{n-1} log(n-1) = f_n log(n/(n-1)) + (f_n - f_{n-1}) log(n-1).
        """
        n = np.atleast_1d(np.asarray(ns, dtype=np.float64))
        factor = self._factor(n)
        previous = self._factor(n - 1.0)
        if self.kind == CutoffKind.HARDY:
            factor_step = factor - previous
        else:
            # f_n / f_{n-1} = (n^2 / (n^2 - 1))^{1/4}
            factor_step = previous * np.expm1(-0.25 * np.log1p(-1.0 / (n * n)))
        rise = factor * _log_step(n) + factor_step * np.log(n - 1.0)
        return -rise / self.log_n

    def values_at(self, ns) -> np.ndarray:
        """γ^N_n at arbitrary indices (n >= 1)."""
        ns = np.atleast_1d(np.asarray(ns, dtype=np.int64))
        if ns.size and ns.min() < 0:
            raise InputError("cutoff indices must be >= 0")
        out = np.zeros(ns.shape, dtype=np.float64)
        out[(ns >= 1) & (ns < self.N)] = 1.0
        window = (ns >= self.N) & (ns <= self.last)
        if window.any():
            out[window] = np.clip(self.raw(ns[window]), 0.0, 1.0)
        return out

    def steps(self, ns) -> np.ndarray:
        """
        γ_n - γ_{n-1} at ns (>= 1).

        Where both values come from the unclamped formula the stable
        raw_step is used.
        """
        ns = np.atleast_1d(np.asarray(ns, dtype=np.int64))
        current = self.values_at(ns)
        previous = self.values_at(ns - 1)
        out = current - previous
        inner = (ns > self.N) & (ns <= self.last)
        if inner.any():
            raw_now = self.raw(ns[inner])
            raw_prev = self.raw(ns[inner] - 1)
            unclamped = (
                (raw_now >= 0.0) & (raw_now <= 1.0) & (raw_prev >= 0.0) & (raw_prev <= 1.0)
            )
            stable = self.raw_step(ns[inner])
            out[inner] = np.where(unclamped, stable, out[inner])
        return out

    @property
    def values(self) -> np.ndarray:
        """γ^N_n for n = 1..N^2 + 1."""
        return self.values_at(np.arange(1, self.last + 2, dtype=np.int64))

    def at(self, n: int) -> float:
        return float(self.values_at([n])[0])

    def as_sequence(self) -> FiniteSequence:
        """γ^N as a finitely supported sequence."""
        return FiniteSequence.from_values(self.values[:-1])

    def is_nonincreasing(self) -> bool:
        """γ_n >= γ_{n+1} on [N, N^2]."""
        window = self.values_at(np.arange(self.N, self.last + 1, dtype=np.int64))
        return bool(np.all(np.diff(window) <= 0.0))


def hardy_cutoff(N: int, lam: SequenceRule = UNIT, max_n: Optional[int] = None) -> CutoffSequence:
    """
    Cutoff for the weighted Hardy inequality.

    Args:
        N: Cutoff parameter (>= 2)
        lam: λ, non-decreasing with λ_1 >= 1
        max_n: Cap on N (defaults to Settings.max_cutoff_n)

    Raises:
        HypothesisError: λ decreases somewhere on [1, N^2 + 1] or λ_1 < 1
    """
    check_cutoff_parameter(N, max_n)
    if lam.at(1) < 1.0:
        raise HypothesisError(f"the cutoff needs λ_n >= 1, got λ_1 = {lam.at(1):g}")
    if not lam.is_nondecreasing(N * N + 1):
        raise HypothesisError(f"the cutoff needs non-decreasing λ, {lam.label()} decreases")
    return CutoffSequence(N=N, kind=CutoffKind.HARDY, lam=lam)


def copson_cutoff(N: int, max_n: Optional[int] = None) -> CutoffSequence:
    """Cutoff for the improved Copson inequality."""
    check_cutoff_parameter(N, max_n)
    return CutoffSequence(N=N, kind=CutoffKind.COPSON)

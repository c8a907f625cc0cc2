"""
Triangular-number terms of the Copson setting (q_n = n, Q_n = S_n).
"""

from dataclasses import dataclass
from math import sqrt

from ..core.errors import InputError


@dataclass(frozen=True)
class CopsonTerms:
    """
    Triangular-number data at one index.

    Attributes:
        n: Index
        S_n: n(n+1)/2
        S_next: S_{n+1}
        tau_n: (√n - √(n-1)) / n
    """

    n: int
    S_n: float
    S_next: float
    tau_n: float

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"index must be >= 1, got {self.n}")

    @classmethod
    def at(cls, n: int) -> "CopsonTerms":
        """Build the terms at n; τ_n uses 1/(n(√n + √(n-1)))."""
        if n < 1:
            raise InputError(f"index must be >= 1, got {n}")
        return cls(
            n=n,
            S_n=n * (n + 1) / 2,
            S_next=(n + 1) * (n + 2) / 2,
            tau_n=1.0 / (n * (sqrt(n) + sqrt(n - 1))),
        )

    def scale(self, c: float) -> float:
        """P_n = S_n^{2-c} / n."""
        return self.S_n ** (2.0 - c) / self.n

    def scale_next(self, c: float) -> float:
        """P_{n+1} = S_{n+1}^{2-c} / (n + 1)."""
        return self.S_next ** (2.0 - c) / (self.n + 1)

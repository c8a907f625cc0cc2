"""
Reference Weights

Textbook formulas evaluated in mpmath at the reference precision. These
are the oracles for the binary64 stable forms; they are slow and meant
for spot checks, not sweeps.
"""

from typing import Optional

from mpmath import mp, mpf

from ..core.precision import reference_context
from ..core.rules import SequenceRule


def keller_weight_mp(n: int, dps: Optional[int] = None) -> mpf:
    """2 - √(1-1/n) - √(1+1/n)."""
    with reference_context(dps):
        x = mpf(1) / n
        return 2 - mp.sqrt(1 - x) - mp.sqrt(1 + x)


def lambda_g_weight_mp(
    lam: SequenceRule,
    g: SequenceRule,
    n: int,
    dps: Optional[int] = None
) -> mpf:
    """1/λ_n + 1/λ_{n+1} - g_{n-1}/(λ_n g_n) - g_{n+1}/(λ_{n+1} g_n)."""
    with reference_context(dps):
        lam_n, lam_next = lam.at_mp(n), lam.at_mp(n + 1)
        g_prev, g_n, g_next = g.at_mp(n - 1), g.at_mp(n), g.at_mp(n + 1)
        return 1 / lam_n + 1 / lam_next - g_prev / (lam_n * g_n) - g_next / (lam_next * g_n)


def power_weight_mp(alpha: float, beta: float, n: int, dps: Optional[int] = None) -> mpf:
    """w_n(α, β) including the special value at n = 1."""
    with reference_context(dps):
        a, b = mpf(alpha), mpf(beta)
        if n == 1:
            return 1 + mpf(2) ** a - mpf(2) ** (a + b)
        x = mpf(1) / n
        return mpf(n) ** a * (1 + (1 + x) ** a - (1 - x) ** b - (1 + x) ** (a + b))


def fischer_weight_mp(p: float, n: int, dps: Optional[int] = None) -> mpf:
    """(1 - ((n-1)/n)^r)^{p-1} - (((n+1)/n)^r - 1)^{p-1}, r = (p-1)/p."""
    with reference_context(dps):
        pp = mpf(p)
        r = (pp - 1) / pp
        lower = 1 - (mpf(n - 1) / n) ** r
        upper = (mpf(n + 1) / n) ** r - 1
        return lower ** (pp - 1) - upper ** (pp - 1)


def copson_weight_mp(c: float, n: int, dps: Optional[int] = None) -> mpf:
    """V_n = P_n + P_{n+1} - P_n √(1-1/n) - P_{n+1} √(1+1/n), P_n = S_n^{2-c}/n."""
    with reference_context(dps):
        e = 2 - mpf(c)
        s_n = mpf(n) * (n + 1) / 2
        s_next = mpf(n + 1) * (n + 2) / 2
        p_n = s_n ** e / n
        p_next = s_next ** e / (n + 1)
        x = mpf(1) / n
        return p_n + p_next - p_n * mp.sqrt(1 - x) - p_next * mp.sqrt(1 + x)

"""
Gamma Space Configuration

Γ_p is the space of sequences x = (a_n) with

    ‖x‖ = (Σ_n γ_n |q_1 a_1 + ... + q_n a_n|^p)^{1/p} < ∞

for an exponent p > 1 and positive sequences γ and q.
"""

from pydantic import BaseModel, ConfigDict, Field

from ..core.errors import InputError
from ..core.rules import ConstRule, FischerRule, KellerRule, PowerRule, WeightSeqSpec


class SpacePreset:
    """Named spaces available through GammaSpaceConfig.preset."""

    W = "W"
    X = "X"


class GammaSpaceConfig(BaseModel):
    """
    Exponent and sequences defining Γ_p.

    Attributes:
        p: Exponent > 1
        gamma: Positive weight sequence γ
        q: Positive multiplier sequence q
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    p: float = Field(..., gt=1.0)
    gamma: WeightSeqSpec
    q: WeightSeqSpec = Field(default_factory=ConstRule)

    @property
    def conjugate(self) -> float:
        """q* = p/(p-1), with 1/p + 1/q* = 1."""
        return self.p / (self.p - 1.0)

    @classmethod
    def preset(cls, name: str, p: float = 2.0) -> "GammaSpaceConfig":
        """
        Standard spaces with q ≡ 1.

        W: γ is the p-weight (Keller's weight at p = 2).
        X: γ_n = n^{-p}, the Cesàro sequence space.

        Raises:
            InputError: unknown preset name
        """
        if name == SpacePreset.W:
            gamma = KellerRule() if p == 2.0 else FischerRule(p=p)
            return cls(p=p, gamma=gamma)
        if name == SpacePreset.X:
            return cls(p=p, gamma=PowerRule(exponent=-p))
        raise InputError(f"unknown space preset '{name}' (choose W or X)")

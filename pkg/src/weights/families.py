"""
Weight Families

The six Hardy-type weight families plus candidate weight tables, each on
the BaseWeight interface, and the selector registry used by the command
line.
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

import numpy as np

from ..core.errors import InputError
from ..core.rules import SequenceRule, UNIT
from .base_weight import BaseWeight, WeightCheck, WeightValue
from .comparators import (
    beta_comparator,
    copson_comparator,
    fischer_comparator,
    keller_comparator,
    power_comparator,
)
from .copson import check_copson_exponent, copson_weights
from .formulas import fischer_weights, g_weights, lambda_g_weights, power_weights
from .keller import keller_weights

PROVEN_POWER_ALPHA = (1.0 / 3.0, 1.0)
BETA_MATCH_TOL = 1e-12


def _proper_beta(g: SequenceRule) -> Optional[float]:
    beta = g.power_exponent()
    if beta is not None and 0.0 < beta < 1.0:
        return beta
    return None


@dataclass(frozen=True)
class KellerWeight(BaseWeight):
    """w_n = 2 - √(1-1/n) - √(1+1/n) against 1/(4n^2)."""

    family = "keller"
    check = WeightCheck.KELLER

    def values(self, ns: np.ndarray) -> np.ndarray:
        return keller_weights(ns)

    def comparator(self, ns: np.ndarray) -> np.ndarray:
        return keller_comparator(ns)


@dataclass(frozen=True)
class GWeight(BaseWeight):
    """
    w_n(g) = 2 - g_{n-1}/g_n - g_{n+1}/g_n.

    For g_n = n^β with 0 < β < 1 the comparator is β(1-β)/n^2 and the
    improvement is proven; any other g is compared with 1/(4n^2) and
    reported as exploratory.
    """

    g: SequenceRule
    family = "g"
    check = WeightCheck.G_WEIGHT

    def values(self, ns: np.ndarray) -> np.ndarray:
        return g_weights(self.g, ns)

    def comparator(self, ns: np.ndarray) -> np.ndarray:
        beta = _proper_beta(self.g)
        if beta is None:
            return keller_comparator(ns)
        return beta_comparator(UNIT, beta, ns)

    def in_proven_range(self, stop: int) -> bool:
        return _proper_beta(self.g) is not None


@dataclass(frozen=True)
class LambdaGWeight(BaseWeight):
    """
    w_n(λ, g) with comparator β(1-β)/(2n^2)(1/λ_n + 1/λ_{n+1}).

    Proven for g_n = n^β, 0 < β < 1 and non-decreasing λ. Otherwise the
    β = 1/2 comparator is used and the report is exploratory.
    """

    lam: SequenceRule
    g: SequenceRule
    family = "lambda-g"
    check = WeightCheck.LAMBDA_G

    def values(self, ns: np.ndarray) -> np.ndarray:
        return lambda_g_weights(self.lam, self.g, ns)

    def comparator(self, ns: np.ndarray) -> np.ndarray:
        beta = _proper_beta(self.g)
        return beta_comparator(self.lam, 0.5 if beta is None else beta, ns)

    def in_proven_range(self, stop: int) -> bool:
        return _proper_beta(self.g) is not None and self.lam.is_nondecreasing(stop + 1)


@dataclass(frozen=True)
class PowerWeight(BaseWeight):
    """
    w_n(α, β) against (α-1)^2/4 · n^{α-2}.

    The improvement is proven for α in [1/3, 1) or α = 0, with the
    matching β = (1-α)/2.
    """

    alpha: float
    beta: float
    family = "power"
    check = WeightCheck.POWER

    def values(self, ns: np.ndarray) -> np.ndarray:
        return power_weights(self.alpha, self.beta, ns)

    def comparator(self, ns: np.ndarray) -> np.ndarray:
        return power_comparator(self.alpha, ns)

    def in_proven_range(self, stop: int) -> bool:
        lo, hi = PROVEN_POWER_ALPHA
        alpha_ok = self.alpha == 0.0 or lo - BETA_MATCH_TOL <= self.alpha < hi
        return alpha_ok and abs(self.beta - (1.0 - self.alpha) / 2.0) <= BETA_MATCH_TOL


@dataclass(frozen=True)
class FischerWeight(BaseWeight):
    """The p-weight against ((p-1)/p)^p n^{-p}; proven for every p > 1."""

    p: float
    family = "fischer"
    check = WeightCheck.FISCHER

    def __post_init__(self):
        if not self.p > 1.0:
            raise InputError(f"the p-weight needs p > 1, got {self.p}")

    def values(self, ns: np.ndarray) -> np.ndarray:
        return fischer_weights(self.p, ns)

    def comparator(self, ns: np.ndarray) -> np.ndarray:
        return fischer_comparator(self.p, ns)


@dataclass(frozen=True)
class CopsonWeight(BaseWeight):
    """V_n(c) against (c-1)^2/4 · n/S_n^c; the improvement is proven at c = 3/2."""

    c: float = 1.5
    family = "copson"
    check = WeightCheck.COPSON

    def __post_init__(self):
        check_copson_exponent(self.c)

    def values(self, ns: np.ndarray) -> np.ndarray:
        return copson_weights(self.c, ns)

    def comparator(self, ns: np.ndarray) -> np.ndarray:
        return copson_comparator(self.c, ns)

    def in_proven_range(self, stop: int) -> bool:
        return self.c == 1.5


@dataclass(frozen=True)
class TableWeight(BaseWeight):
    """
    Candidate weight values supplied as a table, checked against the
    Keller comparator 1/(4n^2). The claim under test is the table's own
    improvement, so every sweep is assertion-grade.
    """

    table: List[float] = field(default_factory=list)
    family = "table"
    check = WeightCheck.TABLE

    def __post_init__(self):
        if not self.table:
            raise InputError("a candidate weight table needs at least one value")
        if not np.all(np.isfinite(self.table)):
            raise InputError("candidate weights must be finite")

    def values(self, ns: np.ndarray) -> np.ndarray:
        ns = np.atleast_1d(np.asarray(ns, dtype=np.int64))
        if ns.size and (ns.min() < 1 or ns.max() > len(self.table)):
            raise InputError(f"candidate table covers indices 1..{len(self.table)}")
        return np.asarray(self.table, dtype=np.float64)[ns - 1]

    def comparator(self, ns: np.ndarray) -> np.ndarray:
        return keller_comparator(ns)


def improvement_margin(family: BaseWeight, n: int) -> WeightValue:
    """
    Weight value, classical comparator and their difference at n.

    Args:
        family: Weight family instance
        n: Index >= 1

    Returns:
        WeightValue, with proven False outside the proven range
    """
    return family.margin(n)


def _require(params: Dict[str, object], name: str, flag: str):
    value = params.get(name)
    if value is None:
        raise InputError(f"this weight family needs {flag}")
    return value


FAMILY_BUILDERS: Dict[str, Callable[[Dict[str, object]], BaseWeight]] = {
    "keller": lambda params: KellerWeight(),
    "g": lambda params: GWeight(_require(params, "g", "--g")),
    "lambda-g": lambda params: LambdaGWeight(
        _require(params, "lam", "--lambda"), _require(params, "g", "--g")
    ),
    "power": lambda params: PowerWeight(
        float(_require(params, "alpha", "--alpha")), float(_require(params, "beta", "--beta"))
    ),
    "fischer": lambda params: FischerWeight(float(_require(params, "p", "--p"))),
    "copson": lambda params: CopsonWeight(float(params.get("c") or 1.5)),
    "table": lambda params: TableWeight(list(_require(params, "table", "--table"))),
}


def build_family(name: str, **params) -> BaseWeight:
    """
    Build a family from its selector string and parameters.

    Args:
        name: One of FAMILY_BUILDERS
        **params: g, lam, alpha, beta, p, c or table

    Raises:
        InputError: unknown selector or missing parameter
    """
    try:
        builder = FAMILY_BUILDERS[name]
    except KeyError:
        choices = ", ".join(sorted(FAMILY_BUILDERS))
        raise InputError(f"unknown weight family '{name}' (choose from {choices})") from None
    return builder(params)

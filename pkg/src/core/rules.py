"""
Positive Sequence Rules

Concrete positive sequences used as q_n, λ_n, g_n and γ_n. A rule is a
frozen pydantic model tagged by its "rule" field, so configuration files
and command-line specs map one-to-one onto these classes.

Index 0 always evaluates to 0 (the g_0 = 0 convention); every index n >= 1
evaluates to a strictly positive value.
"""

import math
from abc import ABC, abstractmethod
from typing import Annotated, List, Literal, Optional, Tuple, Union

import numpy as np
from mpmath import mp, mpf
from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, TypeAdapter

from ..config import settings
from .errors import InputError
from .summation import chunk_bounds, compensated_sum

Bracket = Tuple[float, float]
DIVERGENT: Bracket = (math.inf, math.inf)


class SequenceRule(BaseModel, ABC):
    """
    Abstract base for all positive sequence rules.

    Subclasses implement the vectorised evaluation _array for n >= 1 and
    may override the stable helpers when they have a closed form.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    @abstractmethod
    def _array(self, ns: np.ndarray) -> np.ndarray:
        """Values at the indices ns (all >= 1)."""

    @abstractmethod
    def at_mp(self, n: int) -> mpf:
        """Value at n in the current mpmath precision."""

    @abstractmethod
    def label(self) -> str:
        """Command-line spelling of the rule."""

    def array(self, ns) -> np.ndarray:
        """
        Vectorised evaluation with the index-0 convention.

        Args:
            ns: Integer indices (scalar or array), all >= 0

        Returns:
            float64 array of values
        """
        ns = np.atleast_1d(np.asarray(ns, dtype=np.int64))
        if ns.size and ns.min() < 0:
            raise InputError(f"negative index {int(ns.min())} for rule {self.label()}")
        out = np.zeros(ns.shape, dtype=np.float64)
        mask = ns > 0
        if mask.any():
            out[mask] = self._array(ns[mask])
        return out

    def at(self, n: int) -> float:
        """Value at a single index."""
        return float(self.array(n)[0])

    def window(self, start: int, stop: int) -> np.ndarray:
        """Values at start, start+1, ..., stop (inclusive)."""
        return self.array(np.arange(start, stop + 1, dtype=np.int64))

    def power_exponent(self) -> Optional[float]:
        """β when the rule is c·n^β (ratios g_{n±1}/g_n depend only on β)."""
        return None

    def reciprocal_step(self, ns) -> np.ndarray:
        """1/v_n - 1/v_{n+1} at the indices ns."""
        ns = np.atleast_1d(np.asarray(ns, dtype=np.int64))
        return 1.0 / self.array(ns) - 1.0 / self.array(ns + 1)

    def cumulative(self, n: int) -> float:
        """Q_n = v_1 + ... + v_n."""
        if n < 0:
            raise InputError(f"cumulative index must be >= 0, got {n}")
        if n == 0:
            return 0.0
        return compensated_sum(self.window(1, n))

    def tail_bracket(self, m: int) -> Optional[Bracket]:
        """
        Certified bracket of Σ_{n>m} v_n.

        Returns:
            (lo, hi); DIVERGENT when the series diverges; None when the rule
            has no closed-form tail
        """
        return None

    def is_nondecreasing(self, stop: int) -> bool:
        """Check v_1 <= v_2 <= ... <= v_stop, one chunk at a time."""
        for lo, hi in chunk_bounds(1, stop + 1, settings.chunk_size):
            # overlap by one index so steps across chunk edges are seen
            values = self.window(max(lo - 1, 1), hi - 1)
            if not np.all(np.diff(values) >= 0.0):
                return False
        return True

    def __str__(self) -> str:
        return self.label()


class ConstRule(SequenceRule):
    """v_n = value."""

    rule: Literal["const"] = "const"
    value: PositiveFloat = 1.0

    def _array(self, ns: np.ndarray) -> np.ndarray:
        return np.full(ns.shape, self.value, dtype=np.float64)

    def at_mp(self, n: int) -> mpf:
        return mpf(0) if n == 0 else mpf(self.value)

    def label(self) -> str:
        return f"const:{self.value:g}"

    def power_exponent(self) -> Optional[float]:
        return 0.0

    def reciprocal_step(self, ns) -> np.ndarray:
        return np.zeros(np.atleast_1d(ns).shape, dtype=np.float64)

    def cumulative(self, n: int) -> float:
        return self.value * n

    def tail_bracket(self, m: int) -> Optional[Bracket]:
        return DIVERGENT


class PowerRule(SequenceRule):
    """v_n = n^exponent."""

    rule: Literal["power"] = "power"
    exponent: float

    def _array(self, ns: np.ndarray) -> np.ndarray:
        return ns.astype(np.float64) ** self.exponent

    def at_mp(self, n: int) -> mpf:
        return mpf(0) if n == 0 else mpf(n) ** mpf(self.exponent)

    def label(self) -> str:
        return f"power:{self.exponent:g}"

    def power_exponent(self) -> Optional[float]:
        return self.exponent

    def reciprocal_step(self, ns) -> np.ndarray:
        # n^{-e} - (n+1)^{-e} = -n^{-e} expm1(-e log1p(1/n))
        n = np.atleast_1d(np.asarray(ns, dtype=np.float64))
        return -(n ** -self.exponent) * np.expm1(-self.exponent * np.log1p(1.0 / n))

    def tail_bracket(self, m: int) -> Optional[Bracket]:
        e = self.exponent
        if e >= -1.0:
            return DIVERGENT
        k = -e - 1.0
        return (float(m + 1) ** -k / k, float(m) ** -k / k)


class SqrtRule(SequenceRule):
    """v_n = √n."""

    rule: Literal["sqrt"] = "sqrt"

    def _array(self, ns: np.ndarray) -> np.ndarray:
        return np.sqrt(ns.astype(np.float64))

    def at_mp(self, n: int) -> mpf:
        return mp.sqrt(n)

    def label(self) -> str:
        return "sqrt"

    def power_exponent(self) -> Optional[float]:
        return 0.5

    def tail_bracket(self, m: int) -> Optional[Bracket]:
        return DIVERGENT


class LinearRule(SequenceRule):
    """v_n = n."""

    rule: Literal["linear"] = "linear"

    def _array(self, ns: np.ndarray) -> np.ndarray:
        return ns.astype(np.float64)

    def at_mp(self, n: int) -> mpf:
        return mpf(n)

    def label(self) -> str:
        return "linear"

    def power_exponent(self) -> Optional[float]:
        return 1.0

    def reciprocal_step(self, ns) -> np.ndarray:
        n = np.atleast_1d(np.asarray(ns, dtype=np.float64))
        return 1.0 / (n * (n + 1.0))

    def cumulative(self, n: int) -> float:
        return float(n * (n + 1) // 2)

    def tail_bracket(self, m: int) -> Optional[Bracket]:
        return DIVERGENT


class TriangularRule(SequenceRule):
    """v_n = n(n+1)/2."""

    rule: Literal["triangular"] = "triangular"

    def _array(self, ns: np.ndarray) -> np.ndarray:
        n = ns.astype(np.float64)
        return n * (n + 1.0) / 2.0

    def at_mp(self, n: int) -> mpf:
        return mpf(n * (n + 1)) / 2

    def label(self) -> str:
        return "triangular"

    def reciprocal_step(self, ns) -> np.ndarray:
        n = np.atleast_1d(np.asarray(ns, dtype=np.float64))
        return 4.0 / (n * (n + 1.0) * (n + 2.0))

    def cumulative(self, n: int) -> float:
        return float(n * (n + 1) * (n + 2) // 6)

    def tail_bracket(self, m: int) -> Optional[Bracket]:
        return DIVERGENT


class LogRule(SequenceRule):
    """v_n = 1 + ln n, a slowly non-decreasing sequence."""

    rule: Literal["log"] = "log"

    def _array(self, ns: np.ndarray) -> np.ndarray:
        return 1.0 + np.log(ns.astype(np.float64))

    def at_mp(self, n: int) -> mpf:
        return mpf(0) if n == 0 else 1 + mp.log(n)

    def label(self) -> str:
        return "log"

    def tail_bracket(self, m: int) -> Optional[Bracket]:
        return DIVERGENT


class GeometricRule(SequenceRule):
    """v_n = scale · ratio^n."""

    rule: Literal["geometric"] = "geometric"
    ratio: PositiveFloat
    scale: PositiveFloat = 1.0

    def _array(self, ns: np.ndarray) -> np.ndarray:
        return self.scale * self.ratio ** ns.astype(np.float64)

    def at_mp(self, n: int) -> mpf:
        return mpf(0) if n == 0 else mpf(self.scale) * mpf(self.ratio) ** n

    def label(self) -> str:
        return f"geometric:{self.ratio:g}"

    def cumulative(self, n: int) -> float:
        r = self.ratio
        if r == 1.0:
            return self.scale * n
        return self.scale * r * math.expm1(n * math.log(r)) / (r - 1.0)

    def tail_bracket(self, m: int) -> Optional[Bracket]:
        if self.ratio >= 1.0:
            return DIVERGENT
        tail = self.scale * self.ratio ** (m + 1) / (1.0 - self.ratio)
        return (tail, tail)


class KellerRule(SequenceRule):
    """v_n = Keller's weight 2 - √(1-1/n) - √(1+1/n)."""

    rule: Literal["keller"] = "keller"

    def _array(self, ns: np.ndarray) -> np.ndarray:
        from ..weights.keller import keller_weights

        return keller_weights(ns)

    def at_mp(self, n: int) -> mpf:
        from ..weights.reference import keller_weight_mp

        return mpf(0) if n == 0 else keller_weight_mp(n)

    def label(self) -> str:
        return "keller"

    def tail_bracket(self, m: int) -> Optional[Bracket]:
        # 1/(4n^2) < w_n <= 1/(4n^2) + (5/64) n^{-4} / (1 - n^{-2}) for n >= 2
        if m < 1:
            return None
        lo = 0.25 / (m + 1)
        quartic = (5.0 / 64.0) / (1.0 - 1.0 / (m + 1) ** 2) / (3.0 * m ** 3)
        return (lo, 0.25 / m + quartic)


class FischerRule(SequenceRule):
    """v_n = the p-weight (1-((n-1)/n)^{(p-1)/p})^{p-1} - (((n+1)/n)^{(p-1)/p}-1)^{p-1}."""

    rule: Literal["fischer"] = "fischer"
    p: float = Field(gt=1.0)

    def _array(self, ns: np.ndarray) -> np.ndarray:
        from ..weights.formulas import fischer_weights

        return fischer_weights(self.p, ns)

    def at_mp(self, n: int) -> mpf:
        from ..weights.reference import fischer_weight_mp

        return mpf(0) if n == 0 else fischer_weight_mp(self.p, n)

    def label(self) -> str:
        return f"fischer:{self.p:g}"


class CopsonRule(SequenceRule):
    """v_n = the Copson weight V_n(c)."""

    rule: Literal["copson"] = "copson"
    c: float = Field(default=1.5, gt=1.0, le=2.0)

    def _array(self, ns: np.ndarray) -> np.ndarray:
        from ..weights.copson import copson_weights

        return copson_weights(self.c, ns)

    def at_mp(self, n: int) -> mpf:
        from ..weights.reference import copson_weight_mp

        return mpf(0) if n == 0 else copson_weight_mp(self.c, n)

    def label(self) -> str:
        return f"copson:{self.c:g}"


class TableRule(SequenceRule):
    """
    Explicit values v_1..v_L, continued by another rule beyond the table.

    Without a "beyond" rule, indices past the table end are rejected.
    """

    rule: Literal["table"] = "table"
    values: List[PositiveFloat] = Field(min_length=1)
    beyond: Optional["WeightSeqSpec"] = None

    def _array(self, ns: np.ndarray) -> np.ndarray:
        size = len(self.values)
        table = np.asarray(self.values, dtype=np.float64)
        inside = ns <= size
        out = np.empty(ns.shape, dtype=np.float64)
        out[inside] = table[ns[inside] - 1]
        if not inside.all():
            if self.beyond is None:
                raise InputError(
                    f"index {int(ns.max())} beyond table of length {size} "
                    "and no generator given"
                )
            out[~inside] = self.beyond.array(ns[~inside])
        return out

    def at_mp(self, n: int) -> mpf:
        if n == 0:
            return mpf(0)
        if n <= len(self.values):
            return mpf(repr(self.values[n - 1]))
        if self.beyond is None:
            raise InputError(f"index {n} beyond table of length {len(self.values)}")
        return self.beyond.at_mp(n)

    def label(self) -> str:
        return f"table[{len(self.values)}]"

    def tail_bracket(self, m: int) -> Optional[Bracket]:
        if self.beyond is None:
            return None
        size = len(self.values)
        if m >= size:
            return self.beyond.tail_bracket(m)
        rest = self.beyond.tail_bracket(size)
        if rest is None:
            return None
        explicit = compensated_sum(self.values[m:])
        return (explicit + rest[0], explicit + rest[1])


WeightSeqSpec = Annotated[
    Union[
        ConstRule,
        PowerRule,
        SqrtRule,
        LinearRule,
        TriangularRule,
        LogRule,
        GeometricRule,
        KellerRule,
        FischerRule,
        CopsonRule,
        TableRule,
    ],
    Field(discriminator="rule"),
]

TableRule.model_rebuild()

_RULE_ADAPTER = TypeAdapter(WeightSeqSpec)


def rule_from_dict(data: dict) -> SequenceRule:
    """
    Build a rule from its JSON object form, e.g. {"rule": "power", "exponent": -2}.

    Raises:
        pydantic.ValidationError: on unknown rules or non-positive parameters
    """
    return _RULE_ADAPTER.validate_python(data)


UNIT = ConstRule()

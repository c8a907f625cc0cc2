"""
Finitely Supported Sequences

The substrate every other module consumes: finitely supported complex
sequences with an index offset, weighted partial sums A_n = Σ q_k a_k and
their inverse differences.

A partial-sum sequence of a finitely supported input is eventually
constant, so FiniteSequence carries a plateau scalar: the value at every
index beyond the stored prefix. Sequences of coefficients a_n have
plateau 0.
"""

from dataclasses import dataclass, field
from typing import Iterable, Tuple, Union

import numpy as np

from .errors import InputError
from .rules import SequenceRule

Scalar = Union[int, float, complex]

EPS = float(np.finfo(np.float64).eps)
ROUNDING_SLACK = 4.0


def _freeze(values) -> np.ndarray:
    array = np.array(values, dtype=np.complex128).ravel()
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class FiniteSequence:
    """
    A complex sequence indexed from 1 that is zero before offset and equal
    to plateau after offset + len(values) - 1.

    Attributes:
        values: Stored prefix starting at index offset
        offset: Index of the first stored value (>= 1)
        plateau: Value at every index past the stored prefix
    """

    values: np.ndarray = field(default_factory=lambda: _freeze([]))
    offset: int = 1
    plateau: complex = 0j

    def __post_init__(self):
        """Validate and freeze the stored values."""
        if isinstance(self.offset, bool) or int(self.offset) != self.offset:
            raise InputError(f"offset must be an integer, got {self.offset!r}")
        if self.offset < 1:
            raise InputError(f"offset must be >= 1, got {self.offset}")
        values = _freeze(self.values)
        if not np.all(np.isfinite(values)):
            raise InputError("sequence values must be finite")
        plateau = complex(self.plateau)
        if not np.isfinite(plateau):
            raise InputError("plateau must be finite")
        object.__setattr__(self, "offset", int(self.offset))
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "plateau", plateau)

    @classmethod
    def from_values(
        cls,
        values: Iterable[Scalar],
        offset: int = 1,
        plateau: Scalar = 0
    ) -> "FiniteSequence":
        """Build a sequence from any iterable of numbers."""
        return cls(values=_freeze(list(values)), offset=offset, plateau=plateau)

    @classmethod
    def zeros(cls) -> "FiniteSequence":
        """The zero sequence."""
        return cls()

    @classmethod
    def unit(cls, index: int, value: Scalar = 1.0) -> "FiniteSequence":
        """value at a single index, zero elsewhere."""
        return cls.from_values([value], offset=index)

    def __len__(self) -> int:
        return int(self.values.size)

    @property
    def end(self) -> int:
        """Index of the last stored value (offset - 1 when empty)."""
        return self.offset + len(self) - 1

    @property
    def has_plateau(self) -> bool:
        """True when the sequence is not eventually zero."""
        return self.plateau != 0

    @property
    def is_real(self) -> bool:
        return bool(np.all(self.values.imag == 0) and self.plateau.imag == 0)

    def is_zero(self) -> bool:
        return not self.has_plateau and not np.any(self.values)

    def __getitem__(self, n: int) -> complex:
        if n < 0:
            raise InputError(f"negative index {n}")
        if n < self.offset:
            return 0j
        if n > self.end:
            return self.plateau
        return complex(self.values[n - self.offset])

    def dense(self, stop: int) -> np.ndarray:
        """Values at indices 1..stop as a complex array."""
        out = np.zeros(stop, dtype=np.complex128)
        if stop <= 0:
            return out
        lo = self.offset
        hi = min(self.end, stop)
        if hi >= lo:
            out[lo - 1:hi] = self.values[: hi - lo + 1]
        if stop > self.end:
            out[max(self.end, 0):] = self.plateau
        return out

    def normalized(self) -> "FiniteSequence":
        """
        Canonical form: leading zeros move into the offset and trailing
        entries equal to the plateau are dropped.
        """
        values = self.values
        offset = self.offset
        nonzero = np.flatnonzero(values != 0)
        if self.plateau == 0:
            if nonzero.size == 0:
                return FiniteSequence()
            first, last = int(nonzero[0]), int(nonzero[-1])
        else:
            first = int(nonzero[0]) if nonzero.size else values.size
            differs = np.flatnonzero(values != self.plateau)
            last = int(differs[-1]) if differs.size else first - 1
            if last < first:
                # zeros followed by plateau values only
                return FiniteSequence(
                    values=_freeze([]),
                    offset=offset + first,
                    plateau=self.plateau,
                )
        return FiniteSequence(
            values=_freeze(values[first:last + 1]),
            offset=offset + first,
            plateau=self.plateau,
        )

    def _key(self) -> Tuple:
        norm = self.normalized()
        return (norm.offset, tuple(norm.values.tolist()), norm.plateau)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteSequence):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def _aligned(self, other: "FiniteSequence") -> Tuple[np.ndarray, np.ndarray, int]:
        stop = max(self.end, other.end, 1)
        return self.dense(stop), other.dense(stop), stop

    def __add__(self, other: "FiniteSequence") -> "FiniteSequence":
        if not isinstance(other, FiniteSequence):
            return NotImplemented
        left, right, _ = self._aligned(other)
        return FiniteSequence(values=_freeze(left + right), plateau=self.plateau + other.plateau)

    def __sub__(self, other: "FiniteSequence") -> "FiniteSequence":
        if not isinstance(other, FiniteSequence):
            return NotImplemented
        left, right, _ = self._aligned(other)
        return FiniteSequence(values=_freeze(left - right), plateau=self.plateau - other.plateau)

    def __mul__(self, scalar: Scalar) -> "FiniteSequence":
        if not isinstance(scalar, (int, float, complex, np.number)):
            return NotImplemented
        return FiniteSequence(
            values=_freeze(self.values * scalar),
            offset=self.offset,
            plateau=self.plateau * scalar,
        )

    __rmul__ = __mul__

    def __neg__(self) -> "FiniteSequence":
        return self * -1

    def __repr__(self) -> str:
        preview = ", ".join(f"{v:.6g}" for v in self.values[:6])
        if len(self) > 6:
            preview += ", ..."
        return (
            f"FiniteSequence(offset={self.offset}, values=[{preview}], "
            f"plateau={self.plateau:.6g})"
        )


def partial_sums(a: FiniteSequence, q: SequenceRule) -> FiniteSequence:
    """
    Weighted partial sums A_n = q_1 a_1 + ... + q_n a_n.

    Args:
        a: Finitely supported coefficients (zero plateau)
        q: Positive multiplier sequence

    Returns:
        A over the support of a, with the final sum as plateau (snapped to
        0 when it is below the rounding error of the sum)
    """
    if a.has_plateau:
        raise InputError("partial sums need a finitely supported input (zero plateau)")
    if len(a) == 0:
        return FiniteSequence(offset=a.offset)
    ns = np.arange(a.offset, a.end + 1, dtype=np.int64)
    terms = q.array(ns) * a.values
    sums = np.cumsum(terms)
    total = complex(sums[-1])
    # a total within the rounding error of the running sum is an exact zero
    if abs(total) <= ROUNDING_SLACK * terms.size * EPS * float(np.abs(terms).sum()):
        total = 0j
    return FiniteSequence(values=_freeze(sums), offset=a.offset, plateau=total)


def differences(A: FiniteSequence, q: SequenceRule) -> FiniteSequence:
    """
    Inverse of partial_sums: a_n = (A_n - A_{n-1}) / q_n with A_0 = 0.

    A step from the last stored value to the plateau contributes one extra
    coefficient at index end + 1, so differences(A, q) is finitely
    supported and partial_sums recovers A including its plateau.
    """
    prefix = A.values
    last = prefix[-1] if len(A) else 0j
    if last != A.plateau:
        prefix = np.append(prefix, A.plateau)
    if prefix.size == 0:
        return FiniteSequence(offset=A.offset)
    ns = np.arange(A.offset, A.offset + prefix.size, dtype=np.int64)
    previous = np.concatenate(([A[A.offset - 1]], prefix[:-1]))
    return FiniteSequence(values=_freeze((prefix - previous) / q.array(ns)), offset=A.offset)


def cumulative_weights(q: SequenceRule, n: int) -> float:
    """Q_n = q_1 + ... + q_n (closed form where the rule has one)."""
    if n < 1:
        raise InputError(f"cumulative_weights needs n >= 1, got {n}")
    return q.cumulative(n)

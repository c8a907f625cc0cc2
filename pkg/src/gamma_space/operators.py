"""
Triangular Transform

G maps x = (a_n) to (γ_n^{1/p} Σ_{k≤n} q_k a_k), an isometry of Γ_p onto the
p-summable sequences; G^{-1} is bidiagonal:

    a_n = (γ_n^{-1/p} b_n - γ_{n-1}^{-1/p} b_{n-1}) / q_n,   b_0 = 0.

Also the basis u_i = G^{-1} e_i, the parallelogram defect and the basis
expansion error.
"""

from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np

from ..core.errors import InputError
from ..core.rules import SequenceRule
from ..core.sequences import FiniteSequence, differences, partial_sums
from ..core.summation import compensated_sum
from .config import GammaSpaceConfig
from .norm import NormValue, gamma_norm, tail_power_sum


@dataclass(frozen=True, eq=False)
class GTransform:
    """
    Gx as a stored prefix and a tail rule: beyond the prefix end the value
    is γ_n^{1/p} · total, where total is the weighted sum of x.

    Attributes:
        prefix: (Gx)_1 .. (Gx)_m
        total: Σ q_k a_k
        gamma: Weight sequence γ
        p: Exponent
    """

    prefix: np.ndarray
    total: complex
    gamma: SequenceRule
    p: float

    @property
    def end(self) -> int:
        return int(self.prefix.size)

    @property
    def is_finite(self) -> bool:
        """Gx is finitely supported exactly when the total weighted sum is 0."""
        return self.total == 0

    def at(self, n: int) -> complex:
        if n < 1:
            raise InputError(f"index must be >= 1, got {n}")
        if n <= self.end:
            return complex(self.prefix[n - 1])
        return self.gamma.at(n) ** (1.0 / self.p) * self.total

    def values(self, stop: int) -> np.ndarray:
        """(Gx)_1 .. (Gx)_stop."""
        out = np.zeros(stop, dtype=np.complex128)
        head = min(stop, self.end)
        out[:head] = self.prefix[:head]
        if stop > self.end and self.total != 0:
            ns = np.arange(self.end + 1, stop + 1, dtype=np.int64)
            out[self.end:] = self.gamma.array(ns) ** (1.0 / self.p) * self.total
        return out

    def to_sequence(self) -> FiniteSequence:
        """
        Gx as a FiniteSequence.

        Raises:
            InputError: if Gx is not finitely supported
        """
        if not self.is_finite:
            raise InputError("Gx is not finitely supported (nonzero total weighted sum)")
        return FiniteSequence.from_values(self.prefix)

    def lp_norm(self, tail_terms: Optional[int] = None) -> NormValue:
        """‖Gx‖_p from the transformed values; the tail follows the norm's tail policy."""
        head = compensated_sum(np.abs(self.prefix) ** self.p)
        lo, hi = tail_power_sum(abs(self.total) ** self.p, self.end, self.gamma, tail_terms)
        return NormValue(p=self.p, power_lo=head + lo, power_hi=head + hi)


def _root(cfg: GammaSpaceConfig, ns: np.ndarray) -> np.ndarray:
    return cfg.gamma.array(ns) ** (1.0 / cfg.p)


def apply_G(x: FiniteSequence, cfg: GammaSpaceConfig) -> GTransform:
    """
    (Gx)_n = γ_n^{1/p} Σ_{k≤n} q_k a_k.

    Args:
        x: Finitely supported sequence
        cfg: Space configuration
    """
    A = partial_sums(x, cfg.q)
    m = max(A.end, 0)
    ns = np.arange(1, m + 1, dtype=np.int64)
    prefix = _root(cfg, ns) * A.dense(m)
    return GTransform(prefix=prefix, total=A.plateau, gamma=cfg.gamma, p=cfg.p)


def apply_G_inverse(
    y: Union[FiniteSequence, GTransform],
    cfg: GammaSpaceConfig
) -> FiniteSequence:
    """
    G^{-1} y with b_0 = 0.

    A finitely supported y ending at m gives coefficients up to m + 1. A
    GTransform is inverted exactly, including its tail.
    """
    if isinstance(y, GTransform):
        m = y.end
        ns = np.arange(1, m + 1, dtype=np.int64)
        sums = FiniteSequence(values=y.prefix / _root(cfg, ns), plateau=y.total)
        return differences(sums, cfg.q)
    if y.has_plateau:
        raise InputError("G^{-1} takes finitely supported sequences or transforms")
    if len(y) == 0:
        return FiniteSequence(offset=y.offset)
    ns = np.arange(y.offset, y.end + 1, dtype=np.int64)
    sums = FiniteSequence(values=y.values / _root(cfg, ns), offset=y.offset)
    return differences(sums, cfg.q)


def basis_vector(i: int, cfg: GammaSpaceConfig) -> FiniteSequence:
    """
    u_i = (0, ..., γ_i^{-1/p}/q_i, -γ_i^{-1/p}/q_{i+1}, 0, ...), the preimage of e_i.

    Args:
        i: Index >= 1
        cfg: Space configuration
    """
    if i < 1:
        raise InputError(f"basis index must be >= 1, got {i}")
    scale = cfg.gamma.at(i) ** (-1.0 / cfg.p)
    return FiniteSequence.from_values(
        [scale / cfg.q.at(i), -scale / cfg.q.at(i + 1)], offset=i
    )


def basis_expansion(x: FiniteSequence, cfg: GammaSpaceConfig, n: int) -> FiniteSequence:
    """Σ_{i≤n} c_i u_i with coefficients c_i = γ_i^{1/p} Σ_{k≤i} q_k a_k."""
    if n < 1:
        raise InputError(f"expansion length must be >= 1, got {n}")
    coefficients = apply_G(x, cfg).values(n)
    ns = np.arange(1, n + 1, dtype=np.int64)
    scaled = coefficients * cfg.gamma.array(ns) ** (-1.0 / cfg.p)
    out = np.zeros(n + 1, dtype=np.complex128)
    out[:n] += scaled / cfg.q.array(ns)
    out[1:] -= scaled / cfg.q.array(ns + 1)
    return FiniteSequence.from_values(out)


def basis_expansion_error(
    x: FiniteSequence,
    cfg: GammaSpaceConfig,
    n: int,
    tail_terms: Optional[int] = None
) -> float:
    """
    ‖x - Σ_{i≤n} c_i u_i‖ in Γ_p.

    The residual's partial sums vanish up to n and agree with those of x
    afterwards, so the error is (Σ_{k>n} γ_k |A_k|^p)^{1/p}.

    Raises:
        TailNotComputableError: nonzero total with a γ rule lacking a tail
    """
    residual = x - basis_expansion(x, cfg, n)
    return gamma_norm(residual, cfg, tail_terms).value


def parallelogram_defect(
    x: FiniteSequence,
    y: FiniteSequence,
    cfg: GammaSpaceConfig,
    tail_terms: Optional[int] = None
) -> float:
    """‖x+y‖^2 + ‖x-y‖^2 - 2(‖x‖^2 + ‖y‖^2); zero for every pair when p = 2."""
    def square(v: FiniteSequence) -> float:
        return gamma_norm(v, cfg, tail_terms).value ** 2

    return square(x + y) + square(x - y) - 2.0 * (square(x) + square(y))


def parallelogram_witness(cfg: GammaSpaceConfig) -> Tuple[FiniteSequence, FiniteSequence]:
    """
    The pair G^{-1}(e_1 + e_2), G^{-1}(e_1 - e_2) with ‖x±y‖^2 = 4 and
    ‖x‖^2 = ‖y‖^2 = 4^{1/p}, so the defect is 8 - 4^{(p+1)/p}.
    """
    x = apply_G_inverse(FiniteSequence.from_values([1.0, 1.0]), cfg)
    y = apply_G_inverse(FiniteSequence.from_values([1.0, -1.0]), cfg)
    return x, y

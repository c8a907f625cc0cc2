"""
Gamma Sequence Spaces

Norms, the triangular transform and its inverse, and the associate-space
and inclusion diagnostics of Γ_p.
"""

from .config import GammaSpaceConfig, SpacePreset
from .dual import DualBoundReport, dual_bound
from .inclusion import InclusionReport, inclusion_diagnostic
from .norm import NormValue, gamma_norm, lp_norm
from .operators import (
    GTransform,
    apply_G,
    apply_G_inverse,
    basis_expansion_error,
    basis_vector,
    parallelogram_defect,
    parallelogram_witness,
)

__all__ = [
    "GammaSpaceConfig",
    "SpacePreset",
    "NormValue",
    "gamma_norm",
    "lp_norm",
    "GTransform",
    "apply_G",
    "apply_G_inverse",
    "basis_vector",
    "basis_expansion_error",
    "parallelogram_defect",
    "parallelogram_witness",
    "DualBoundReport",
    "dual_bound",
    "InclusionReport",
    "inclusion_diagnostic",
]

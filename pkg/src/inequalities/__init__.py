"""
Inequality Reports

Evaluable Hardy, weighted Hardy, classical and Copson inequalities on
finitely supported sequences, plus the exact remainder identities.
"""

from .classical import (
    ReductionCheck,
    classical_hardy_report,
    copson_general_report,
    copson_hardy_reduction,
    sharpness_ratio,
)
from .hardy import (
    hardy_identity,
    hardy_identity_residual,
    hardy_remainder_squares,
    hardy_report,
    weighted_hardy_report,
)
from .report import IdentityReport, InequalityCheck, InequalityReport, ReportFlag

__all__ = [
    "InequalityReport",
    "IdentityReport",
    "InequalityCheck",
    "ReportFlag",
    "hardy_report",
    "weighted_hardy_report",
    "hardy_identity",
    "hardy_identity_residual",
    "hardy_remainder_squares",
    "classical_hardy_report",
    "copson_general_report",
    "copson_hardy_reduction",
    "ReductionCheck",
    "sharpness_ratio",
]

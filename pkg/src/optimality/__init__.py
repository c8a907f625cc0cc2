"""
Optimality Probes

Cutoff sequences and the remainder sums that certify a weight cannot be
enlarged.
"""

from .cutoffs import CutoffKind, CutoffSequence, copson_cutoff, hardy_cutoff
from .probes import OptimalityProbe, assert_probes, decay_bound, probe, remainder_sweep

__all__ = [
    "CutoffKind",
    "CutoffSequence",
    "hardy_cutoff",
    "copson_cutoff",
    "OptimalityProbe",
    "decay_bound",
    "probe",
    "remainder_sweep",
    "assert_probes",
]

"""
Copson Layer

Copson-weighted inequality reports, the remainder identity and the lemma
margin sweeps.
"""

from .lemmas import LEMMAS, CopsonLemma, LemmaReport, LemmaResult, lemma_grid, lemma_report
from .reports import copson_identity, copson_identity_residual, copson_report, improved_copson_report
from .terms import CopsonTerms

__all__ = [
    "CopsonTerms",
    "copson_report",
    "improved_copson_report",
    "copson_identity",
    "copson_identity_residual",
    "CopsonLemma",
    "LEMMAS",
    "LemmaResult",
    "LemmaReport",
    "lemma_report",
    "lemma_grid",
]

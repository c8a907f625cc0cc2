"""
Weight Sequences

Improved Hardy-type weights, their classical comparators and the
closed-form, stable and reference evaluations behind them.
"""

from .base_weight import BaseWeight, WeightCheck, WeightSweep, WeightValue
from .comparators import power_improvement_bound
from .copson import copson_weight, copson_weights
from .families import (
    CopsonWeight,
    FischerWeight,
    GWeight,
    KellerWeight,
    LambdaGWeight,
    PowerWeight,
    TableWeight,
    build_family,
    improvement_margin,
)
from .formulas import fischer_weight, g_weight, lambda_g_weight, power_weight
from .keller import keller_series_coefficient, keller_weight, keller_weights
from .series import series_expansion
from .stability import StabilityRow, stability_report

__all__ = [
    "BaseWeight",
    "WeightCheck",
    "WeightSweep",
    "WeightValue",
    "KellerWeight",
    "GWeight",
    "LambdaGWeight",
    "PowerWeight",
    "FischerWeight",
    "CopsonWeight",
    "TableWeight",
    "build_family",
    "improvement_margin",
    "keller_weight",
    "keller_weights",
    "keller_series_coefficient",
    "lambda_g_weight",
    "g_weight",
    "power_weight",
    "fischer_weight",
    "copson_weight",
    "copson_weights",
    "series_expansion",
    "power_improvement_bound",
    "StabilityRow",
    "stability_report",
]

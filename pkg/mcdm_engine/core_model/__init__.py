"""
Decision situation model: L1 data types, DM-point screening, typology gate
and situation validation.
"""

from .screening import classify_typology, screen_dm_point
from .situation import (
    AlternativesNature,
    CriteriaAxis,
    Criterion,
    DataType,
    DecisionMakerAxis,
    DecisionSituation,
    Direction,
    DmPointScreen,
    DmPointVerdict,
    FuzzyTriple,
    GuidanceForm,
    Label,
    Numeric,
    PerformanceValue,
    ProblemKind,
    TypologyVerdict,
    WeightingSource,
)
from .validators import normalize_weights, validate_situation

__all__ = [
    "AlternativesNature",
    "CriteriaAxis",
    "Criterion",
    "DataType",
    "DecisionMakerAxis",
    "DecisionSituation",
    "Direction",
    "DmPointScreen",
    "DmPointVerdict",
    "FuzzyTriple",
    "GuidanceForm",
    "Label",
    "Numeric",
    "PerformanceValue",
    "ProblemKind",
    "TypologyVerdict",
    "WeightingSource",
    "classify_typology",
    "normalize_weights",
    "screen_dm_point",
    "validate_situation",
]

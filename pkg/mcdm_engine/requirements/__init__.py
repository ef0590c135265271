"""
Requirements for MC methods (L2) and their derivation by problem investigation.
"""

from .investigation import DEFAULT_THRESHOLDS, bucketize_count, derive_requirements
from .requirement_types import (
    ALL_OPERATIONS,
    CANONICAL_ATTRIBUTES,
    CountBucket,
    CountThresholds,
    Easiness,
    InvestigationOperation,
    MethodRequirements,
    Notation,
    RequirementAttribute,
    SkillLevel,
    UsagePreferences,
    WeightingType,
    enum_by_name,
)

__all__ = [
    "ALL_OPERATIONS",
    "CANONICAL_ATTRIBUTES",
    "CountBucket",
    "CountThresholds",
    "DEFAULT_THRESHOLDS",
    "Easiness",
    "InvestigationOperation",
    "MethodRequirements",
    "Notation",
    "RequirementAttribute",
    "SkillLevel",
    "UsagePreferences",
    "WeightingType",
    "bucketize_count",
    "derive_requirements",
    "enum_by_name",
]

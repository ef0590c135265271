"""
Requirement derivation by problem investigation.

Each investigation operation retains (or computes) one L2 attribute from the
L1 situation; operations that are not performed leave their attribute
unexpressed.
"""

from typing import Iterable, Optional

from ..core_model import DataType, DecisionSituation, WeightingSource, validate_situation
from ..exceptions import EmptyRequirements, TooFewAlternatives
from ..shared_logger import LogLevel, shared_logger
from .requirement_types import (
    ALL_OPERATIONS,
    CountBucket,
    CountThresholds,
    InvestigationOperation,
    MethodRequirements,
    UsagePreferences,
    WeightingType,
)

CLASS_PREFIX_MESSAGE = "[Investigation]"

DEFAULT_THRESHOLDS = CountThresholds()


def bucketize_count(n: int, thresholds: CountThresholds = DEFAULT_THRESHOLDS) -> CountBucket:
    """
    @brief Map an alternatives count to its Small/Medium/Great bucket.
    @param n Number of alternatives (>= 2)
    @param thresholds Inclusive upper bounds of the small and medium buckets
    """
    if not isinstance(thresholds, CountThresholds):
        thresholds = CountThresholds(**thresholds)
    if n < 2:
        raise TooFewAlternatives(f"A decision involves at least two alternatives, got {n}")
    if n <= thresholds.small_max:
        return CountBucket.SMALL
    if n <= thresholds.medium_max:
        return CountBucket.MEDIUM
    return CountBucket.GREAT


def derive_requirements(
    situation: DecisionSituation,
    usage: Optional[UsagePreferences] = None,
    thresholds: CountThresholds = DEFAULT_THRESHOLDS,
    operations: Optional[Iterable[InvestigationOperation]] = None,
) -> MethodRequirements:
    """
    @brief Derive the L2 requirement document from an L1 situation.
    @param situation Decision situation (validated here if it was not already)
    @param usage Operator-supplied usage preferences, passed through
    @param thresholds Count bucket thresholds
    @param operations Investigation operations to perform; all of them when None
    @return MethodRequirements with at least one expressed attribute
    """
    situation = validate_situation(situation)
    usage = usage or UsagePreferences()
    performed = ALL_OPERATIONS if operations is None else frozenset(operations)

    def when(operation, compute):
        return compute() if operation in performed else None

    requirements = MethodRequirements(
        problem=when(InvestigationOperation.RETAIN_PROBLEM_TYPE, lambda: situation.problem),
        count_bucket=when(
            InvestigationOperation.CALCULATE_ALTERNATIVES_NUMBER,
            lambda: bucketize_count(len(situation.alternatives), thresholds),
        ),
        nature=when(
            InvestigationOperation.RETAIN_ALTERNATIVES_NATURE,
            lambda: situation.alternatives_nature,
        ),
        incompatibility=when(
            InvestigationOperation.RETAIN_ALTERNATIVES_INCOMPATIBILITY,
            lambda: situation.incompatibility_present,
        ),
        data_type_required=when(
            InvestigationOperation.RETAIN_CRITERIA_DATA_TYPE, lambda: situation.data_types
        ),
        measure_scale_needed=when(
            InvestigationOperation.RETAIN_MEASURE_SCALE,
            lambda: any(
                c.data_type == DataType.QUALITATIVE and bool(c.scale)
                for c in situation.criteria
            ),
        ),
        weighting_type=when(
            InvestigationOperation.RETAIN_WEIGHTING_TYPE,
            lambda: WeightingType.INTERDEPENDENT
            if situation.weighting_source == WeightingSource.PAIRWISE
            else WeightingType.SIMPLE,
        ),
        usage=usage,
    )

    if requirements.is_empty():
        raise EmptyRequirements(
            "Problem investigation produced no expressed requirement; perform at least one operation or state a usage preference"
        )

    shared_logger.log(
        f"{CLASS_PREFIX_MESSAGE} [{LogLevel.INFO.name}] Derived requirements for "
        f"'{situation.name or 'situation'}': {requirements.to_document()}"
    )
    return requirements

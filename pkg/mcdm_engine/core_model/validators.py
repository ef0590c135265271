"""
Situation validation.

Checks every DecisionSituation invariant and returns a copy whose criterion
weights sum to one.
"""

import dataclasses
import math

from ..exceptions import (
    AllZeroWeights,
    DimensionMismatch,
    IncompatibleCell,
    InvalidCriterion,
    MissingSortingCategories,
    TooFewAlternatives,
    ZeroCount,
)
from .situation import DataType, DecisionSituation, FuzzyTriple, Label, Numeric, ProblemKind

# Weight vectors closer than this to unit sum are left untouched
NORMALIZATION_TOLERANCE = 1e-12


def is_compatible(value, criterion) -> bool:
    """
    Check a performance cell against its column's data type.

    Fuzzy columns accept crisp numbers, which are lifted to l = m = u.
    """
    if criterion.data_type == DataType.QUANTITATIVE:
        return isinstance(value, Numeric) and math.isfinite(value.value)
    if criterion.data_type == DataType.QUALITATIVE:
        return isinstance(value, Label) and value.label in criterion.scale
    if isinstance(value, FuzzyTriple):
        return all(math.isfinite(x) for x in (value.l, value.m, value.u))
    return isinstance(value, Numeric) and math.isfinite(value.value)


def normalize_weights(weights):
    """
    @brief Scale weights to unit sum, preserving ratios.
    @return The same tuple when it already sums to one within tolerance.
    """
    weights = tuple(float(w) for w in weights)
    total = math.fsum(weights)
    if total <= 0:
        raise AllZeroWeights("At least one criterion must have a positive weight")
    if abs(total - 1.0) <= NORMALIZATION_TOLERANCE:
        return weights
    return tuple(w / total for w in weights)


def validate_situation(situation: DecisionSituation) -> DecisionSituation:
    """
    @brief Validate a decision situation and normalize its weights.
    @param situation The situation to check
    @return The situation (weights normalized); validating twice returns an equal object.
    """
    n_alternatives = len(situation.alternatives)
    if n_alternatives < 2:
        raise TooFewAlternatives(
            f"A decision involves at least two alternatives, got {n_alternatives}"
        )
    if len(set(situation.alternatives)) != n_alternatives:
        raise DimensionMismatch("Alternative names must be unique")

    if not situation.criteria:
        raise DimensionMismatch("A decision situation needs at least one criterion")
    names = [c.name for c in situation.criteria]
    if len(set(names)) != len(names):
        raise InvalidCriterion("Criterion names must be unique")

    if situation.decision_maker_count < 1:
        raise ZeroCount("decision_maker_count must be positive")

    if len(situation.performance) != n_alternatives:
        raise DimensionMismatch(
            f"Performance table has {len(situation.performance)} rows for {n_alternatives} alternatives"
        )
    for alternative, row in zip(situation.alternatives, situation.performance):
        if len(row) != len(situation.criteria):
            raise DimensionMismatch(
                f"Row '{alternative}' has {len(row)} values for {len(situation.criteria)} criteria"
            )
        for value, criterion in zip(row, situation.criteria):
            if not is_compatible(value, criterion):
                raise IncompatibleCell(
                    f"Value {value!r} of '{alternative}' does not fit {criterion.data_type.value} criterion '{criterion.name}'"
                )

    if situation.problem == ProblemKind.SORTING:
        categories = situation.sorting_categories or ()
        if len(categories) < 2 or len(set(categories)) != len(categories):
            raise MissingSortingCategories(
                "Sorting problems need at least two distinct ordered categories"
            )

    weights = normalize_weights(situation.weights)
    if weights == situation.weights:
        return situation

    criteria = tuple(
        dataclasses.replace(criterion, weight=weight)
        for criterion, weight in zip(situation.criteria, weights)
    )
    return dataclasses.replace(situation, criteria=criteria)

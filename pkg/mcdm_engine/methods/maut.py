"""
Multi-attribute utility theory: piecewise-linear single-attribute utilities
aggregated additively or multiplicatively.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Optional, Sequence, Tuple

import numpy as np

from ..core_model import DecisionSituation, Direction, normalize_weights, validate_situation
from ..exceptions import DimensionMismatch, EmptyUtility, InvalidUtilityFunction
from ..shared_logger import LogLevel, shared_logger
from .normalization import DEGENERATE_VALUE, QualitativeEncoding, encode_column, warn_degenerate
from .results import DEFAULT_TIE_TOLERANCE, Ranking, build_ranking

METHOD_NAME = "MAUT"
CLASS_PREFIX_MESSAGE = "[MAUT]"

# Floor applied to utilities before taking logarithms
UTILITY_FLOOR = 1e-12


class AggregationForm(Enum):
    ADDITIVE = "additive"
    MULTIPLICATIVE = "multiplicative"


@dataclass(frozen=True)
class UtilityFunction:
    """
    Piecewise-linear utility through (x, u) breakpoints.

    Breakpoints have strictly increasing x, u in [0, 1], and end on 0 and 1
    (in either order). Values outside the breakpoint range are clamped.
    """

    breakpoints: Tuple[Tuple[float, float], ...]

    def __post_init__(self):
        points = tuple((float(x), float(u)) for x, u in self.breakpoints)
        object.__setattr__(self, "breakpoints", points)
        if not points:
            raise EmptyUtility("A utility function needs breakpoints")
        if len(points) < 2:
            raise InvalidUtilityFunction("A utility function needs at least two breakpoints")
        xs = [x for x, _ in points]
        us = [u for _, u in points]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise InvalidUtilityFunction(f"Breakpoint x values must strictly increase: {xs}")
        if any(not 0.0 <= u <= 1.0 for u in us):
            raise InvalidUtilityFunction(f"Utilities must lie in [0, 1]: {us}")
        if {us[0], us[-1]} != {0.0, 1.0}:
            raise InvalidUtilityFunction(
                f"A utility function must run from 0 to 1 or from 1 to 0, got ends {us[0]} and {us[-1]}"
            )

    @classmethod
    def linear(cls, lo: float, hi: float, direction: Direction) -> "UtilityFunction":
        if direction == Direction.MAXIMIZE:
            return cls(((lo, 0.0), (hi, 1.0)))
        return cls(((lo, 1.0), (hi, 0.0)))

    @property
    def domain(self) -> Tuple[float, float]:
        return self.breakpoints[0][0], self.breakpoints[-1][0]

    def evaluate(self, x: float) -> Tuple[float, bool]:
        """@return (utility, clamped) where clamped tells x fell outside the breakpoints."""
        xs, us = zip(*self.breakpoints)
        lo, hi = self.domain
        return float(np.interp(x, xs, us)), bool(x < lo or x > hi)

    def to_document(self):
        return [list(p) for p in self.breakpoints]


def warn_clamped(criterion_name: str) -> str:
    shared_logger.log(
        f"{CLASS_PREFIX_MESSAGE} [{LogLevel.WARNING.name}] Values of '{criterion_name}' fall outside "
        "the utility breakpoints and were clamped"
    )
    return f"values of '{criterion_name}' clamped to the utility domain"


def maut_rank(
    situation: DecisionSituation,
    utilities: Optional[Mapping[str, UtilityFunction]] = None,
    weights: Optional[Sequence[float]] = None,
    form: AggregationForm = AggregationForm.ADDITIVE,
    tolerance: float = DEFAULT_TIE_TOLERANCE,
) -> Ranking:
    """
    @brief Rank alternatives by aggregated utility.
    @param situation Decision situation; qualitative labels are read as scale ranks
    @param utilities Utility function per criterion name; missing criteria get a
        linear utility over their observed range
    @param weights Criterion weights; the situation's own when None
    @param form ADDITIVE: sum w*u. MULTIPLICATIVE: prod u^w
    """
    situation = validate_situation(situation)
    utilities = utilities or {}
    weights = normalize_weights(situation.weights if weights is None else weights)
    if len(weights) != len(situation.criteria):
        raise DimensionMismatch(
            f"{len(weights)} weights given for {len(situation.criteria)} criteria"
        )

    columns = []
    warnings = []
    for j, criterion in enumerate(situation.criteria):
        raw = encode_column(situation, j, QualitativeEncoding.RANK_INDEX, METHOD_NAME)
        function = utilities.get(criterion.name)
        if function is None:
            lo, hi = float(raw.min()), float(raw.max())
            if lo == hi:
                warnings.append(warn_degenerate(METHOD_NAME, criterion.name))
                columns.append([DEGENERATE_VALUE] * len(raw))
                continue
            function = UtilityFunction.linear(lo, hi, criterion.direction)

        column = []
        clamped = False
        for x in raw:
            u, outside = function.evaluate(float(x))
            column.append(u)
            clamped = clamped or outside
        if clamped:
            warnings.append(warn_clamped(criterion.name))
        columns.append(column)

    n = len(situation.alternatives)
    if form == AggregationForm.MULTIPLICATIVE:
        scores = [
            math.exp(
                math.fsum(
                    w * math.log(max(columns[j][i], UTILITY_FLOOR)) for j, w in enumerate(weights)
                )
            )
            for i in range(n)
        ]
    else:
        scores = [math.fsum(w * columns[j][i] for j, w in enumerate(weights)) for i in range(n)]

    return build_ranking(situation.alternatives, scores, tolerance, warnings=tuple(warnings))

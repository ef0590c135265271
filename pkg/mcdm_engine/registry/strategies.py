"""
Selection among several candidate methods by weighting L2 criteria.
"""

import math
from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

from ..exceptions import InvalidWeights, NoCandidates, TieNotResolvable
from ..requirements import (
    CANONICAL_ATTRIBUTES,
    Easiness,
    RequirementAttribute,
    SkillLevel,
    WeightingType,
    enum_by_name,
)
from ..shared_logger import LogLevel, shared_logger
from .matcher import SelectionReport, satisfies

CLASS_PREFIX_MESSAGE = "[Selection]"

# Values an unexpressed attribute is scored against when the operator weights it
DEMANDING_VALUES = {
    RequirementAttribute.INCOMPATIBILITY: True,
    RequirementAttribute.MEASURE_SCALE: True,
    RequirementAttribute.WEIGHTING: WeightingType.INTERDEPENDENT,
    RequirementAttribute.TOOL: True,
    RequirementAttribute.EASINESS: Easiness.EASY,
    RequirementAttribute.SKILLS: SkillLevel.WEAK,
}

ATTRIBUTE_ALIASES = {
    "tool_available": RequirementAttribute.TOOL,
    "tool_required": RequirementAttribute.TOOL,
    "count_bucket": RequirementAttribute.COUNT,
    "alternatives_number": RequirementAttribute.COUNT,
    "data_type_required": RequirementAttribute.DATA_TYPE,
    "measure_scale": RequirementAttribute.MEASURE_SCALE,
    "measure_scale_needed": RequirementAttribute.MEASURE_SCALE,
    "weighting_type": RequirementAttribute.WEIGHTING,
    "easiness_required": RequirementAttribute.EASINESS,
    "skills_available": RequirementAttribute.SKILLS,
    "skill_demand": RequirementAttribute.SKILLS,
}

# Relative tolerance for equal weighted sums
SCORE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class WeightedSelection:
    chosen: str
    scores: Dict[str, float]
    vectors: Dict[str, Tuple[int, ...]]
    attributes: Tuple[RequirementAttribute, ...]
    tie_broken_by_order: bool = False

    def to_document(self) -> dict:
        return {
            "chosen": self.chosen,
            "attributes": [a.value for a in self.attributes],
            "scores": dict(self.scores),
            "vectors": {m: list(v) for m, v in self.vectors.items()},
            "tie_broken_by_order": self.tie_broken_by_order,
        }


def parse_l2_weights(l2_weights: Mapping) -> Dict[RequirementAttribute, float]:
    """Normalize weight keys to RequirementAttribute; reject negative weights."""
    parsed = {}
    for key, weight in (l2_weights or {}).items():
        if isinstance(key, RequirementAttribute):
            attribute = key
        elif str(key).lower() in ATTRIBUTE_ALIASES:
            attribute = ATTRIBUTE_ALIASES[str(key).lower()]
        else:
            try:
                attribute = enum_by_name(RequirementAttribute, key)
            except ValueError as e:
                raise InvalidWeights(f"Unknown L2 attribute '{key}'") from e
        if isinstance(weight, bool):
            raise InvalidWeights(f"Weight of '{attribute.value}' must be a number, got {weight!r}")
        try:
            weight = float(weight)
        except (TypeError, ValueError) as e:
            raise InvalidWeights(f"Weight of '{attribute.value}' must be a number, got {weight!r}") from e
        if weight < 0 or not math.isfinite(weight):
            raise InvalidWeights(f"Weight of '{attribute.value}' must be a nonnegative number")
        parsed[attribute] = weight
    return parsed


def rank_by_weighting(report: SelectionReport, l2_weights: Mapping) -> WeightedSelection:
    """
    @brief Score every method by the weighted sum of its 0/1 cells.
    @param report Selection report with at least one candidate
    @param l2_weights Attribute -> nonnegative weight; missing attributes weigh 0
    @return WeightedSelection whose chosen method is the best-scoring candidate
    """
    if not report.candidates:
        raise NoCandidates("Weighting needs at least one candidate method")

    weights = parse_l2_weights(l2_weights)
    attributes = []
    columns = {}
    for attribute in CANONICAL_ATTRIBUTES:
        if weights.get(attribute, 0.0) <= 0:
            continue
        if attribute in report.attributes:
            columns[attribute] = {m: report.cell(m, attribute) for m in report.methods}
        elif attribute in DEMANDING_VALUES:
            value = DEMANDING_VALUES[attribute]
            columns[attribute] = {
                m: int(satisfies(report.registry.lookup(m), attribute, value))
                for m in report.methods
            }
        else:
            shared_logger.log(
                f"{CLASS_PREFIX_MESSAGE} [{LogLevel.WARNING.name}] Weight on unexpressed "
                f"attribute '{attribute.value}' ignored: it has no reference value"
            )
            continue
        attributes.append(attribute)

    vectors = {m: tuple(columns[a][m] for a in attributes) for m in report.methods}
    scores = {
        m: math.fsum(weights[a] * cell for a, cell in zip(attributes, vectors[m]))
        for m in report.methods
    }

    tolerance = SCORE_TOLERANCE * max(math.fsum(weights.values()), 1.0)
    best = max(scores[m] for m in report.candidates)
    top = [m for m in report.candidates if best - scores[m] <= tolerance]

    tie_broken = False
    if len(top) > 1:
        if len({vectors[m] for m in top}) == 1:
            raise TieNotResolvable(
                f"Candidates {', '.join(top)} have the same interface over the weighted attributes",
                methods=top,
            )
        tie_broken = True
        shared_logger.log(
            f"{CLASS_PREFIX_MESSAGE} [{LogLevel.WARNING.name}] Equal weighted sums for "
            f"{', '.join(top)}; declaration order picks '{top[0]}'"
        )

    shared_logger.log(
        f"{CLASS_PREFIX_MESSAGE} [{LogLevel.INFO.name}] Weighting selected '{top[0]}' "
        f"(score {scores[top[0]]:g})"
    )
    return WeightedSelection(
        chosen=top[0],
        scores=scores,
        vectors=vectors,
        attributes=tuple(attributes),
        tie_broken_by_order=tie_broken,
    )


def select_by_weighting(report: SelectionReport, l2_weights: Mapping) -> str:
    """
    @brief Choose among candidates by the highest weighted sum of 0/1 cells.
    @return The chosen method id
    """
    return rank_by_weighting(report, l2_weights).chosen

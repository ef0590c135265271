"""
Requirement/interface matching.

Produces the 0/1 selection matrix: one row per expressed requirement, one
column per registered method. A method is a candidate when its column holds
only ones.
"""

import dataclasses
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

from ..requirements import (
    MethodRequirements,
    Notation,
    RequirementAttribute,
    WeightingType,
)
from ..exceptions import UnknownMethod
from ..shared_logger import LogLevel, shared_logger
from .interfaces import ANY, MethodInterface, MethodRegistry

CLASS_PREFIX_MESSAGE = "[Selection]"


class SelectionStrategy(Enum):
    SEARCH = "search"
    WEIGHTED = "weighted"
    EXPERIENCE = "experience"


def _member(value, allowed) -> bool:
    return allowed is ANY or value in allowed


def _capability(needed, support) -> bool:
    # Only an expressed need for the capability constrains the method
    return (not needed) or support is ANY or support is True


def _weighting(required, supported) -> bool:
    if supported is ANY:
        return True
    if required == WeightingType.SIMPLE:
        # Interdependent-capable methods accept simple weights too
        return bool(supported & {WeightingType.SIMPLE, WeightingType.INTERDEPENDENT})
    return WeightingType.INTERDEPENDENT in supported


SATISFACTION_RULES = {
    RequirementAttribute.PROBLEM: lambda v, i: v in i.problems,
    RequirementAttribute.COUNT: lambda v, i: _member(v, i.count_buckets),
    RequirementAttribute.NATURE: lambda v, i: _member(v, i.natures),
    RequirementAttribute.INCOMPATIBILITY: lambda v, i: _capability(v, i.incompatibility_support),
    RequirementAttribute.DATA_TYPE: lambda v, i: i.data_types is ANY or v <= i.data_types,
    RequirementAttribute.MEASURE_SCALE: lambda v, i: _capability(v, i.measure_scale_support),
    RequirementAttribute.WEIGHTING: lambda v, i: _weighting(v, i.weighting_types),
    RequirementAttribute.TOOL: lambda v, i: _capability(v, i.tool_available),
    RequirementAttribute.EASINESS: lambda v, i: i.easiness is ANY or i.easiness <= v,
    RequirementAttribute.SKILLS: lambda v, i: i.skill_demand is ANY or i.skill_demand <= v,
}


def satisfies(interface: MethodInterface, attribute: RequirementAttribute, value) -> bool:
    """
    @brief Check one expressed requirement value against one interface.
    """
    return bool(SATISFACTION_RULES[attribute](value, interface))


@dataclass(frozen=True)
class SelectionReport:
    attributes: Tuple[RequirementAttribute, ...]
    methods: Tuple[str, ...]
    cells: Dict[str, Tuple[int, ...]]
    candidates: Tuple[str, ...]
    chosen: Optional[str] = None
    strategy_used: SelectionStrategy = SelectionStrategy.SEARCH
    notation_preference: Optional[Notation] = None
    notation_matches: Dict[str, bool] = field(default_factory=dict)
    registry: MethodRegistry = field(default_factory=MethodRegistry, compare=False)

    def cell(self, method_id: str, attribute: RequirementAttribute) -> int:
        return self.cells[method_id][self.attributes.index(attribute)]

    def row(self, attribute: RequirementAttribute) -> Tuple[int, ...]:
        index = self.attributes.index(attribute)
        return tuple(self.cells[m][index] for m in self.methods)

    def with_choice(self, chosen: str, strategy: SelectionStrategy) -> "SelectionReport":
        if chosen not in self.candidates:
            raise UnknownMethod(f"'{chosen}' is not among the candidates {self.candidates}")
        return dataclasses.replace(self, chosen=chosen, strategy_used=strategy)

    def to_document(self) -> dict:
        return {
            "attributes": [a.value for a in self.attributes],
            "methods": list(self.methods),
            "matrix": {m: list(self.cells[m]) for m in self.methods},
            "candidates": list(self.candidates),
            "chosen": self.chosen,
            "strategy_used": self.strategy_used.value,
            "notation_preference": None
            if self.notation_preference is None
            else self.notation_preference.value,
            "notation_matches": dict(self.notation_matches),
        }


def match_methods(reqs: MethodRequirements, registry: MethodRegistry) -> SelectionReport:
    """
    @brief Match L2 requirements against every registered interface.
    @param reqs Requirement document; unexpressed attributes produce no row
    @param registry Nonempty method registry
    @return SelectionReport; an empty candidate set is a valid outcome
    """
    if len(registry) == 0:
        raise UnknownMethod("Cannot match requirements against an empty registry")

    attributes = reqs.expressed_attributes()
    cells = {}
    for interface in registry:
        cells[interface.method_id] = tuple(
            int(satisfies(interface, attribute, reqs.value_of(attribute)))
            for attribute in attributes
        )
    candidates = tuple(m for m in registry.method_ids if all(cells[m]))

    notation = reqs.usage.notation_preference
    notation_matches = {}
    if notation is not None:
        notation_matches = {
            i.method_id: i.notation is ANY or i.notation == notation for i in registry
        }

    shared_logger.log(
        f"{CLASS_PREFIX_MESSAGE} [{LogLevel.INFO.name}] Matched {len(attributes)} requirement(s) "
        f"against {len(registry)} method(s); candidates: {', '.join(candidates) or 'none'}"
    )
    return SelectionReport(
        attributes=attributes,
        methods=registry.method_ids,
        cells=cells,
        candidates=candidates,
        chosen=candidates[0] if len(candidates) == 1 else None,
        notation_preference=notation,
        notation_matches=notation_matches,
        registry=registry,
    )

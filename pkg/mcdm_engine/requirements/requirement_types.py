"""
Requirements for MC methods (level 2).

Every attribute is optional: None means "not expressed" and imposes no
constraint during matching.
"""

import dataclasses
from dataclasses import dataclass, field
from enum import Enum, IntEnum
from typing import FrozenSet, Optional, Tuple

from ..core_model import AlternativesNature, DataType, ProblemKind
from ..exceptions import BadThresholds


class CountBucket(IntEnum):
    SMALL = 1
    MEDIUM = 2
    GREAT = 3


class Easiness(IntEnum):
    EASY = 1
    MEDIUM = 2
    DIFFICULT = 3


class SkillLevel(IntEnum):
    WEAK = 1
    MEDIUM = 2
    STRONG = 3


class Notation(Enum):
    UTILITY_FUNCTION = "utility_function"
    WEIGHTED_SUM = "weighted_sum"
    TEXTUAL = "textual"


class WeightingType(Enum):
    SIMPLE = "simple"
    INTERDEPENDENT = "interdependent"


class RequirementAttribute(Enum):
    """L2 attributes in canonical (matrix) order."""

    PROBLEM = "problem"
    COUNT = "count"
    NATURE = "nature"
    INCOMPATIBILITY = "incompatibility"
    DATA_TYPE = "data_type"
    MEASURE_SCALE = "scale"
    WEIGHTING = "weighting"
    TOOL = "tool"
    EASINESS = "easiness"
    SKILLS = "skills"


CANONICAL_ATTRIBUTES: Tuple[RequirementAttribute, ...] = tuple(RequirementAttribute)


class InvestigationOperation(Enum):
    """Operations turning L1 requirements into L2 requirements."""

    RETAIN_PROBLEM_TYPE = "retain_problem_type"
    CALCULATE_ALTERNATIVES_NUMBER = "calculate_alternatives_number"
    RETAIN_ALTERNATIVES_NATURE = "retain_alternatives_nature"
    RETAIN_ALTERNATIVES_INCOMPATIBILITY = "retain_alternatives_incompatibility"
    RETAIN_CRITERIA_DATA_TYPE = "retain_criteria_data_type"
    RETAIN_MEASURE_SCALE = "retain_measure_scale"
    RETAIN_WEIGHTING_TYPE = "retain_weighting_type"


ALL_OPERATIONS: FrozenSet[InvestigationOperation] = frozenset(InvestigationOperation)


def enum_by_name(enum_cls, raw):
    """Parse an enum member from its value or (case-insensitive) name."""
    if isinstance(raw, enum_cls):
        return raw
    text = str(raw).strip().lower().replace(" ", "_").replace("-", "_")
    for member in enum_cls:
        if text in (member.name.lower(), str(member.value).lower()):
            return member
    raise ValueError(f"'{raw}' is not a valid {enum_cls.__name__}")


@dataclass(frozen=True)
class CountThresholds:
    small_max: int = 7
    medium_max: int = 20

    def __post_init__(self):
        if not (0 < self.small_max < self.medium_max):
            raise BadThresholds(
                f"Thresholds must satisfy 0 < small_max < medium_max, got ({self.small_max}, {self.medium_max})"
            )


@dataclass(frozen=True)
class UsagePreferences:
    tool_required: Optional[bool] = None
    notation_preference: Optional[Notation] = None
    easiness_required: Optional[Easiness] = None
    skills_available: Optional[SkillLevel] = None

    @classmethod
    def from_document(cls, document):
        document = document or {}
        notation = document.get("notation_preference")
        easiness = document.get("easiness_required")
        skills = document.get("skills_available")
        tool = document.get("tool_required")
        return cls(
            tool_required=None if tool is None else bool(tool),
            notation_preference=None if notation is None else enum_by_name(Notation, notation),
            easiness_required=None if easiness is None else enum_by_name(Easiness, easiness),
            skills_available=None if skills is None else enum_by_name(SkillLevel, skills),
        )

    def is_empty(self) -> bool:
        return all(
            v is None
            for v in (
                self.tool_required,
                self.notation_preference,
                self.easiness_required,
                self.skills_available,
            )
        )


@dataclass(frozen=True)
class MethodRequirements:
    problem: Optional[ProblemKind] = None
    count_bucket: Optional[CountBucket] = None
    nature: Optional[AlternativesNature] = None
    incompatibility: Optional[bool] = None
    data_type_required: Optional[FrozenSet[DataType]] = None
    measure_scale_needed: Optional[bool] = None
    weighting_type: Optional[WeightingType] = None
    usage: UsagePreferences = field(default_factory=UsagePreferences)

    def value_of(self, attribute: RequirementAttribute):
        """Expressed value of an attribute, or None."""
        return {
            RequirementAttribute.PROBLEM: self.problem,
            RequirementAttribute.COUNT: self.count_bucket,
            RequirementAttribute.NATURE: self.nature,
            RequirementAttribute.INCOMPATIBILITY: self.incompatibility,
            RequirementAttribute.DATA_TYPE: self.data_type_required,
            RequirementAttribute.MEASURE_SCALE: self.measure_scale_needed,
            RequirementAttribute.WEIGHTING: self.weighting_type,
            RequirementAttribute.TOOL: self.usage.tool_required,
            RequirementAttribute.EASINESS: self.usage.easiness_required,
            RequirementAttribute.SKILLS: self.usage.skills_available,
        }[attribute]

    def expressed_attributes(self) -> Tuple[RequirementAttribute, ...]:
        return tuple(a for a in CANONICAL_ATTRIBUTES if self.value_of(a) is not None)

    def is_empty(self) -> bool:
        return not self.expressed_attributes() and self.usage.notation_preference is None

    def without(self, attribute: RequirementAttribute) -> "MethodRequirements":
        """Copy with one attribute turned back to "not expressed"."""
        usage_fields = {
            RequirementAttribute.TOOL: "tool_required",
            RequirementAttribute.EASINESS: "easiness_required",
            RequirementAttribute.SKILLS: "skills_available",
        }
        if attribute in usage_fields:
            usage = dataclasses.replace(self.usage, **{usage_fields[attribute]: None})
            return dataclasses.replace(self, usage=usage)

        field_name = {
            RequirementAttribute.PROBLEM: "problem",
            RequirementAttribute.COUNT: "count_bucket",
            RequirementAttribute.NATURE: "nature",
            RequirementAttribute.INCOMPATIBILITY: "incompatibility",
            RequirementAttribute.DATA_TYPE: "data_type_required",
            RequirementAttribute.MEASURE_SCALE: "measure_scale_needed",
            RequirementAttribute.WEIGHTING: "weighting_type",
        }[attribute]
        return dataclasses.replace(self, **{field_name: None})

    def to_document(self) -> dict:
        """
        Canonical plain-data form: enum values as lowercase strings, sets as
        sorted lists, unexpressed attributes omitted.
        """
        document = {}
        for attribute in CANONICAL_ATTRIBUTES:
            value = self.value_of(attribute)
            if value is None:
                continue
            document[attribute.value] = _plain(value)
        if self.usage.notation_preference is not None:
            document["notation"] = self.usage.notation_preference.value
        return document

    @classmethod
    def from_document(cls, document) -> "MethodRequirements":
        def parse(key, enum_cls):
            raw = document.get(key)
            return None if raw is None else enum_by_name(enum_cls, raw)

        data_types = document.get("data_type")
        usage = UsagePreferences.from_document(
            {
                "tool_required": document.get("tool"),
                "notation_preference": document.get("notation"),
                "easiness_required": document.get("easiness"),
                "skills_available": document.get("skills"),
            }
        )
        return cls(
            problem=parse("problem", ProblemKind),
            count_bucket=parse("count", CountBucket),
            nature=parse("nature", AlternativesNature),
            incompatibility=document.get("incompatibility"),
            data_type_required=None
            if data_types is None
            else frozenset(enum_by_name(DataType, d) for d in data_types),
            measure_scale_needed=document.get("scale"),
            weighting_type=parse("weighting", WeightingType),
            usage=usage,
        )


def _plain(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, IntEnum):
        return value.name.lower()
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, frozenset):
        return sorted(_plain(v) for v in value)
    return value

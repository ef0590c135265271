"""
Decision situation model (level 1).

A decision situation is the <Problem; Alternative; Criterion> triplet of a
DM point together with its performance table and decision-maker count.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple, Union

from ..exceptions import InvalidCriterion, InvalidPerformanceValue


class ProblemKind(Enum):
    CHOICE = "choice"
    RANKING = "ranking"
    SORTING = "sorting"


class Direction(Enum):
    MAXIMIZE = "maximize"
    MINIMIZE = "minimize"


class DataType(Enum):
    QUANTITATIVE = "quantitative"
    QUALITATIVE = "qualitative"
    FUZZY = "fuzzy"


class AlternativesNature(Enum):
    DISCRETE = "discrete"
    CONTINUOUS = "continuous"


class WeightingSource(Enum):
    """How criterion weights reached the situation."""

    DIRECT = "direct"
    PAIRWISE = "pairwise"


class GuidanceForm(Enum):
    LINEAR = "linear"
    TREE = "tree"


class CriteriaAxis(Enum):
    MONO = "mono"
    MULTI = "multi"


class DecisionMakerAxis(Enum):
    SINGLE = "single"
    MULTIPLE = "multiple"


# === Performance values ===
@dataclass(frozen=True)
class Numeric:
    value: float


@dataclass(frozen=True)
class Label:
    label: str


@dataclass(frozen=True)
class FuzzyTriple:
    l: float
    m: float
    u: float

    def __post_init__(self):
        if not (self.l <= self.m <= self.u):
            raise InvalidPerformanceValue(
                f"Fuzzy triple must satisfy l <= m <= u, got ({self.l}, {self.m}, {self.u})"
            )


PerformanceValue = Union[Numeric, Label, FuzzyTriple]


@dataclass(frozen=True)
class Criterion:
    name: str
    direction: Direction = Direction.MAXIMIZE
    data_type: DataType = DataType.QUANTITATIVE
    scale: Optional[Tuple[str, ...]] = None
    weight: float = 1.0

    def __post_init__(self):
        if not self.name:
            raise InvalidCriterion("Criterion name must not be empty")
        if self.weight < 0:
            raise InvalidCriterion(
                f"Criterion '{self.name}' has negative weight {self.weight}"
            )
        if self.data_type == DataType.QUALITATIVE:
            if not self.scale or len(self.scale) < 2:
                raise InvalidCriterion(
                    f"Qualitative criterion '{self.name}' needs a scale of at least 2 labels"
                )
            if len(set(self.scale)) != len(self.scale):
                raise InvalidCriterion(
                    f"Scale labels of criterion '{self.name}' must be distinct"
                )
        elif self.scale is not None:
            raise InvalidCriterion(
                f"Only qualitative criteria carry a scale ('{self.name}' is {self.data_type.value})"
            )

    def rank_of(self, label: str) -> int:
        """0-based position of a label on the criterion scale."""
        return self.scale.index(label)


@dataclass(frozen=True)
class DecisionSituation:
    problem: ProblemKind
    alternatives: Tuple[str, ...]
    criteria: Tuple[Criterion, ...]
    performance: Tuple[Tuple[PerformanceValue, ...], ...]
    alternatives_nature: AlternativesNature = AlternativesNature.DISCRETE
    incompatibility_present: Optional[bool] = None
    decision_maker_count: int = 1
    sorting_categories: Optional[Tuple[str, ...]] = None
    weighting_source: WeightingSource = WeightingSource.DIRECT
    name: str = field(default="", compare=False)

    @property
    def weights(self) -> Tuple[float, ...]:
        return tuple(c.weight for c in self.criteria)

    @property
    def data_types(self):
        return frozenset(c.data_type for c in self.criteria)

    def column(self, index: int) -> Tuple[PerformanceValue, ...]:
        return tuple(row[index] for row in self.performance)


# === DM-point screening and typology ===
@dataclass(frozen=True)
class DmPointScreen:
    guidance_form: GuidanceForm
    offers_arguments: bool
    offers_prioritization: bool


@dataclass(frozen=True)
class DmPointVerdict:
    is_dm_point: bool
    needs_criteria_definition: bool


@dataclass(frozen=True)
class TypologyVerdict:
    criteria_axis: CriteriaAxis
    dm_axis: DecisionMakerAxis
    mc_eligible: bool

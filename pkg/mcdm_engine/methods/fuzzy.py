"""
Fuzzy weighted sum over triangular fuzzy numbers, defuzzified by centroid.
"""

import math
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, Tuple

import numpy as np

from ..core_model import (
    DataType,
    DecisionSituation,
    Direction,
    FuzzyTriple,
    Numeric,
    normalize_weights,
    validate_situation,
)
from ..exceptions import InvalidFuzzyNumber, NegativeSupport
from .normalization import DEGENERATE_VALUE, warn_degenerate
from .results import DEFAULT_TIE_TOLERANCE, Ranking, build_ranking

METHOD_NAME = "Fuzzy"


@dataclass(frozen=True)
class FuzzyNumber:
    """Triangular fuzzy number (l, m, u) with l <= m <= u."""

    l: float
    m: float
    u: float

    def __post_init__(self):
        values = (self.l, self.m, self.u)
        if not all(math.isfinite(v) for v in values) or not (self.l <= self.m <= self.u):
            raise InvalidFuzzyNumber(f"Triangular number must satisfy l <= m <= u, got {values}")

    @classmethod
    def crisp(cls, value: float) -> "FuzzyNumber":
        return cls(value, value, value)

    @classmethod
    def from_document(cls, document) -> "FuzzyNumber":
        if isinstance(document, (int, float)):
            return cls.crisp(float(document))
        try:
            l, m, u = (float(v) for v in document)
        except (TypeError, ValueError) as e:
            raise InvalidFuzzyNumber(f"Expected [l, m, u], got {document!r}") from e
        return cls(l, m, u)

    @property
    def is_crisp(self) -> bool:
        return self.l == self.m == self.u

    def __add__(self, other: "FuzzyNumber") -> "FuzzyNumber":
        return FuzzyNumber(self.l + other.l, self.m + other.m, self.u + other.u)

    def __mul__(self, other: "FuzzyNumber") -> "FuzzyNumber":
        """Approximate product, defined for nonnegative supports."""
        if self.l < 0 or other.l < 0:
            raise NegativeSupport(f"Product of {self} and {other} needs nonnegative supports")
        return FuzzyNumber(self.l * other.l, self.m * other.m, self.u * other.u)

    def scaled(self, factor: float) -> "FuzzyNumber":
        if factor < 0:
            raise NegativeSupport(f"Cannot scale {self} by negative factor {factor}")
        return FuzzyNumber(self.l * factor, self.m * factor, self.u * factor)

    def complement(self) -> "FuzzyNumber":
        return FuzzyNumber(1.0 - self.u, 1.0 - self.m, 1.0 - self.l)

    def centroid(self) -> float:
        if self.is_crisp:
            return self.m
        return (self.l + self.m + self.u) / 3.0

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.l, self.m, self.u)


# Five-level linguistic scale, worst to best
DEFAULT_TFN_SCALE: Tuple[FuzzyNumber, ...] = (
    FuzzyNumber(0.0, 0.0, 0.25),
    FuzzyNumber(0.0, 0.25, 0.5),
    FuzzyNumber(0.25, 0.5, 0.75),
    FuzzyNumber(0.5, 0.75, 1.0),
    FuzzyNumber(0.75, 1.0, 1.0),
)


def label_to_tfn(rank: int, scale_size: int, tfn_scale: Sequence[FuzzyNumber] = DEFAULT_TFN_SCALE) -> FuzzyNumber:
    """
    @brief Spread the labels of a k-label scale evenly over the linguistic levels.
    @param rank 0-based label position (worst first)
    @param scale_size k, the number of labels on the criterion scale
    """
    top = len(tfn_scale) - 1
    level = round(top * rank / (scale_size - 1))
    return tfn_scale[level]


def _normalize_fuzzy_column(triples, direction: Direction):
    ls = np.array([t.l for t in triples], dtype=float)
    ms = np.array([t.m for t in triples], dtype=float)
    us = np.array([t.u for t in triples], dtype=float)
    lo, hi = float(ls.min()), float(us.max())
    if hi == lo:
        return [FuzzyNumber.crisp(DEGENERATE_VALUE) for _ in triples], True
    span = hi - lo
    if direction == Direction.MAXIMIZE:
        nl, nm, nu = (ls - lo) / span, (ms - lo) / span, (us - lo) / span
    else:
        nl, nm, nu = (hi - us) / span, (hi - ms) / span, (hi - ls) / span
    return [FuzzyNumber(float(a), float(b), float(c)) for a, b, c in zip(nl, nm, nu)], False


def _lift(cell) -> FuzzyNumber:
    if isinstance(cell, Numeric):
        return FuzzyNumber.crisp(cell.value)
    if isinstance(cell, FuzzyTriple):
        return FuzzyNumber(cell.l, cell.m, cell.u)
    raise InvalidFuzzyNumber(f"Cannot read {cell!r} as a fuzzy number")


def fuzzy_saw_rank(
    situation: DecisionSituation,
    fuzzy_weights: Optional[Mapping[str, FuzzyNumber]] = None,
    tfn_scale: Sequence[FuzzyNumber] = DEFAULT_TFN_SCALE,
    tolerance: float = DEFAULT_TIE_TOLERANCE,
) -> Ranking:
    """
    @brief Weighted sum of normalized fuzzy performances, ranked by centroid.
    @param situation Decision situation; crisp cells are lifted to l = m = u
    @param fuzzy_weights Optional fuzzy weight per criterion name; other criteria
        use their crisp (normalized) situation weight
    @param tfn_scale Linguistic levels used for qualitative labels, worst first
    @return Ranking whose scores are centroids and whose fuzzy_scores hold the triples
    """
    situation = validate_situation(situation)
    fuzzy_weights = fuzzy_weights or {}
    crisp_weights = normalize_weights(situation.weights)

    columns = []
    warnings = []
    for j, criterion in enumerate(situation.criteria):
        cells = situation.column(j)
        if criterion.data_type == DataType.QUALITATIVE:
            column = [
                label_to_tfn(criterion.rank_of(cell.label), len(criterion.scale), tfn_scale)
                for cell in cells
            ]
            if criterion.direction == Direction.MINIMIZE:
                column = [t.complement() for t in column]
        else:
            column, degenerate = _normalize_fuzzy_column(
                [_lift(cell) for cell in cells], criterion.direction
            )
            if degenerate:
                warnings.append(warn_degenerate(METHOD_NAME, criterion.name))
        columns.append(column)

    weights = []
    for criterion, crisp in zip(situation.criteria, crisp_weights):
        weight = fuzzy_weights.get(criterion.name)
        if weight is not None and weight.l < 0:
            raise NegativeSupport(
                f"Fuzzy weight of '{criterion.name}' has negative support {weight.as_tuple()}"
            )
        weights.append(weight if weight is not None else FuzzyNumber.crisp(crisp))

    fuzzy_scores = []
    for i in range(len(situation.alternatives)):
        products = [weights[j] * columns[j][i] for j in range(len(weights))]
        fuzzy_scores.append(
            FuzzyNumber(
                math.fsum(p.l for p in products),
                math.fsum(p.m for p in products),
                math.fsum(p.u for p in products),
            )
        )

    return build_ranking(
        situation.alternatives,
        [score.centroid() for score in fuzzy_scores],
        tolerance,
        fuzzy_scores={a: s.as_tuple() for a, s in zip(situation.alternatives, fuzzy_scores)},
        warnings=tuple(warnings),
    )

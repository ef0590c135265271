"""
Decision results: rankings, choice subsets and sorting assignments.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Optional, Sequence, Tuple, Union

from ..core_model import ProblemKind

DEFAULT_TIE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class Ranking:
    """
    Scores plus an order of tie groups (best first).

    Partial rankings additionally list the strict preferences they establish
    and the pairs left incomparable; pairs are ordered by declaration.
    """

    scores: Dict[str, float]
    groups: Tuple[Tuple[str, ...], ...]
    is_partial: bool = False
    outranking: FrozenSet[Tuple[str, str]] = frozenset()
    incomparable: FrozenSet[Tuple[str, str]] = frozenset()
    fuzzy_scores: Optional[Dict[str, Tuple[float, float, float]]] = None
    warnings: Tuple[str, ...] = ()

    @property
    def order(self) -> Tuple[str, ...]:
        return tuple(a for group in self.groups for a in group)

    @property
    def alternatives(self) -> FrozenSet[str]:
        return frozenset(self.order)

    def position(self, alternative: str) -> int:
        """Index of the tie group holding an alternative (0 = best)."""
        for index, group in enumerate(self.groups):
            if alternative in group:
                return index
        raise KeyError(alternative)

    def top_k(self, k: int) -> Tuple[str, ...]:
        """Whole tie groups, best first, until at least k alternatives are taken."""
        chosen = []
        for group in self.groups:
            if len(chosen) >= k:
                break
            chosen.extend(group)
        return tuple(chosen)

    def to_document(self) -> dict:
        document = {
            "scores": dict(self.scores),
            "groups": [list(g) for g in self.groups],
            "partial": self.is_partial,
        }
        if self.is_partial:
            document["outranking"] = sorted(list(p) for p in self.outranking)
            document["incomparable"] = sorted(list(p) for p in self.incomparable)
        if self.fuzzy_scores is not None:
            document["fuzzy_scores"] = {a: list(t) for a, t in self.fuzzy_scores.items()}
        if self.warnings:
            document["warnings"] = list(self.warnings)
        return document


def build_ranking(
    alternatives: Sequence[str],
    scores: Sequence[float],
    tolerance: float = DEFAULT_TIE_TOLERANCE,
    **extras,
) -> Ranking:
    """
    @brief Order alternatives by descending score, grouping near-equal scores.
    @param alternatives Names in declaration order (used as secondary sort key)
    @param scores One score per alternative
    @param tolerance Absolute distance to a group's first score that still counts as a tie
    """
    indexed = sorted(range(len(alternatives)), key=lambda i: (-scores[i], i))
    groups = []
    head_score = None
    for i in indexed:
        if groups and head_score - scores[i] <= tolerance:
            groups[-1].append(alternatives[i])
        else:
            groups.append([alternatives[i]])
            head_score = scores[i]
    return Ranking(
        scores={a: float(s) for a, s in zip(alternatives, scores)},
        groups=tuple(tuple(g) for g in groups),
        **extras,
    )


@dataclass(frozen=True)
class ChoiceSubset:
    alternatives: Tuple[str, ...]
    ranking: Optional[Ranking] = field(default=None, compare=False)
    problem = ProblemKind.CHOICE

    def to_document(self) -> dict:
        document = {"kind": "choice", "alternatives": list(self.alternatives)}
        if self.ranking is not None:
            document["ranking"] = self.ranking.to_document()
        return document


@dataclass(frozen=True)
class RankingResult:
    ranking: Ranking
    problem = ProblemKind.RANKING

    def to_document(self) -> dict:
        return {"kind": "ranking", "ranking": self.ranking.to_document()}


@dataclass(frozen=True)
class SortingResult:
    assignments: Dict[str, str]
    categories: Tuple[str, ...] = ()
    scores: Dict[str, float] = field(default_factory=dict)
    problem = ProblemKind.SORTING

    def members(self, category: str) -> Tuple[str, ...]:
        return tuple(a for a, c in self.assignments.items() if c == category)

    def to_document(self) -> dict:
        return {
            "kind": "sorting",
            "categories": list(self.categories),
            "assignments": dict(self.assignments),
            "scores": dict(self.scores),
        }


DecisionResult = Union[ChoiceSubset, RankingResult, SortingResult]


"""
Outranking by preference flows: complete and partial rankings, and flow-based
sorting into ordered categories.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..core_model import DecisionSituation, Direction, normalize_weights, validate_situation
from ..exceptions import (
    DimensionMismatch,
    InvalidPreferenceFunction,
    InvalidSortingThresholds,
    NonMonotoneThresholds,
    TooFewAlternatives,
)
from .normalization import QualitativeEncoding, encode_table
from .results import DEFAULT_TIE_TOLERANCE, Ranking, SortingResult, build_ranking

METHOD_NAME = "Outranking"


class PreferenceShape(Enum):
    USUAL = "usual"
    V_SHAPE = "v_shape"
    LINEAR = "linear"


@dataclass(frozen=True)
class PreferenceFunctionSpec:
    """
    Maps a difference d (already oriented so that positive is better) to a
    preference degree in [0, 1].

    - USUAL: 1 when d > 0
    - V_SHAPE: d / p, capped at 1
    - LINEAR: 0 up to q, 1 from p, linear in between
    """

    shape: PreferenceShape = PreferenceShape.USUAL
    p: Optional[float] = None
    q: float = 0.0

    def __post_init__(self):
        if self.shape == PreferenceShape.V_SHAPE:
            if self.p is None or not self.p > 0:
                raise InvalidPreferenceFunction(f"V-shape needs p > 0, got p={self.p}")
        elif self.shape == PreferenceShape.LINEAR:
            if self.p is None or not (0 <= self.q < self.p):
                raise InvalidPreferenceFunction(
                    f"Linear preference needs 0 <= q < p, got q={self.q}, p={self.p}"
                )

    def preference(self, d: np.ndarray) -> np.ndarray:
        d = np.asarray(d, dtype=float)
        if self.shape == PreferenceShape.USUAL:
            return (d > 0).astype(float)
        if self.shape == PreferenceShape.V_SHAPE:
            return np.clip(d / self.p, 0.0, 1.0)
        return np.clip((d - self.q) / (self.p - self.q), 0.0, 1.0)

    @classmethod
    def from_document(cls, document) -> "PreferenceFunctionSpec":
        if isinstance(document, str):
            document = {"shape": document}
        try:
            shape = PreferenceShape(str(document.get("shape", "usual")).lower().replace("-", "_"))
        except ValueError as e:
            raise InvalidPreferenceFunction(f"Unknown preference shape in {document}") from e
        p = document.get("p")
        return cls(
            shape=shape,
            p=None if p is None else float(p),
            q=float(document.get("q", 0.0)),
        )

    def to_document(self) -> dict:
        document = {"shape": self.shape.value}
        if self.p is not None:
            document["p"] = self.p
        if self.shape == PreferenceShape.LINEAR:
            document["q"] = self.q
        return document


@dataclass(frozen=True)
class OutrankingFlows:
    alternatives: Tuple[str, ...]
    phi_plus: Tuple[float, ...]
    phi_minus: Tuple[float, ...]

    @property
    def phi_net(self) -> Tuple[float, ...]:
        return tuple(p - m for p, m in zip(self.phi_plus, self.phi_minus))

    def net_of(self, alternative: str) -> float:
        return self.phi_net[self.alternatives.index(alternative)]

    def to_document(self) -> dict:
        return {
            a: {"phi_plus": p, "phi_minus": m, "phi": n}
            for a, p, m, n in zip(self.alternatives, self.phi_plus, self.phi_minus, self.phi_net)
        }


def compute_flows(
    table: np.ndarray,
    directions: Sequence[Direction],
    weights: Sequence[float],
    preference_functions: Sequence[PreferenceFunctionSpec],
    alternatives: Sequence[str],
) -> OutrankingFlows:
    """
    @brief Positive, negative and net flows of a numeric performance table.
    @param table Alternatives x criteria values
    @param directions One direction per criterion
    @param weights Criterion weights (normalized here)
    @param preference_functions One preference function per criterion
    """
    table = np.asarray(table, dtype=float)
    n, m = table.shape
    if n < 2:
        raise TooFewAlternatives("Preference flows need at least two alternatives")
    if not (len(directions) == len(weights) == len(preference_functions) == m):
        raise DimensionMismatch("One direction, weight and preference function per criterion")
    weights = normalize_weights(weights)

    # pi[a, b]: weighted preference of a over b
    pi = np.zeros((n, n))
    for k in range(m):
        sign = 1.0 if directions[k] == Direction.MAXIMIZE else -1.0
        column = table[:, k]
        diff = sign * (column[:, None] - column[None, :])
        pi += weights[k] * preference_functions[k].preference(diff)
    np.fill_diagonal(pi, 0.0)

    phi_plus = pi.sum(axis=1) / (n - 1)
    phi_minus = pi.sum(axis=0) / (n - 1)
    return OutrankingFlows(
        alternatives=tuple(alternatives),
        phi_plus=tuple(float(v) for v in phi_plus),
        phi_minus=tuple(float(v) for v in phi_minus),
    )


def promethee_flows(
    situation: DecisionSituation,
    preference_functions: Optional[Mapping[str, PreferenceFunctionSpec]] = None,
    weights: Optional[Sequence[float]] = None,
) -> OutrankingFlows:
    """
    @brief Flows of a decision situation; criteria without a configured
    preference function use the usual one. Qualitative labels compare by scale rank.
    """
    situation = validate_situation(situation)
    preference_functions = preference_functions or {}
    table = encode_table(situation, QualitativeEncoding.RANK_INDEX, METHOD_NAME)
    return compute_flows(
        table,
        [c.direction for c in situation.criteria],
        situation.weights if weights is None else weights,
        [preference_functions.get(c.name, PreferenceFunctionSpec()) for c in situation.criteria],
        situation.alternatives,
    )


def promethee2_rank(flows: OutrankingFlows, tolerance: float = DEFAULT_TIE_TOLERANCE) -> Ranking:
    """Complete ranking by net flow."""
    return build_ranking(flows.alternatives, flows.phi_net, tolerance)


def promethee1_partial(
    flows: OutrankingFlows, tolerance: float = DEFAULT_TIE_TOLERANCE
) -> Ranking:
    """
    @brief Partial ranking from the intersection of the positive and negative flow orders.

    a outranks b when a is at least as good on both flows and better on one;
    a and b are indifferent when both flows are equal; otherwise they are
    incomparable. Groups hold indifferent alternatives, ordered by net flow.
    """
    names = flows.alternatives
    n = len(names)
    outranking = set()
    incomparable = set()

    def indifferent(i, j):
        return (
            abs(flows.phi_plus[i] - flows.phi_plus[j]) <= tolerance
            and abs(flows.phi_minus[i] - flows.phi_minus[j]) <= tolerance
        )

    for i in range(n):
        for j in range(i + 1, n):
            if indifferent(i, j):
                continue
            plus_i = flows.phi_plus[i] - flows.phi_plus[j]
            minus_i = flows.phi_minus[j] - flows.phi_minus[i]
            if plus_i >= -tolerance and minus_i >= -tolerance:
                outranking.add((names[i], names[j]))
            elif plus_i <= tolerance and minus_i <= tolerance:
                outranking.add((names[j], names[i]))
            else:
                incomparable.add((names[i], names[j]))

    net = flows.phi_net
    groups = []
    for i in sorted(range(n), key=lambda i: (-net[i], i)):
        for group in groups:
            if indifferent(group[0], i):
                group.append(i)
                break
        else:
            groups.append([i])

    return Ranking(
        scores={a: float(v) for a, v in zip(names, net)},
        groups=tuple(tuple(names[i] for i in g) for g in groups),
        is_partial=True,
        outranking=frozenset(outranking),
        incomparable=frozenset(incomparable),
    )


def flow_sort(
    flows: OutrankingFlows,
    thresholds: Sequence[float],
    categories: Sequence[str],
) -> SortingResult:
    """
    @brief Assign each alternative to the first category whose lower threshold its net flow reaches.
    @param thresholds Strictly decreasing net-flow thresholds, one fewer than categories
    @param categories Category names, best first
    """
    thresholds = tuple(float(t) for t in thresholds)
    categories = tuple(categories)
    if len(thresholds) != len(categories) - 1:
        raise InvalidSortingThresholds(
            f"{len(categories)} categories need {len(categories) - 1} thresholds, got {len(thresholds)}"
        )
    if any(a <= b for a, b in zip(thresholds, thresholds[1:])):
        raise NonMonotoneThresholds(f"Sorting thresholds must strictly decrease: {list(thresholds)}")

    assignments: Dict[str, str] = {}
    for alternative, phi in zip(flows.alternatives, flows.phi_net):
        category = categories[-1]
        for threshold, candidate in zip(thresholds, categories):
            if phi >= threshold:
                category = candidate
                break
        assignments[alternative] = category

    return SortingResult(
        assignments=assignments,
        categories=categories,
        scores=dict(zip(flows.alternatives, flows.phi_net)),
    )

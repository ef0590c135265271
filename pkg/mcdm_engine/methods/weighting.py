"""
Simple additive weighting (the Weighting method).
"""

import math
from typing import Optional, Sequence

from ..core_model import DecisionSituation, normalize_weights, validate_situation
from ..exceptions import DimensionMismatch
from .normalization import QualitativeEncoding, encode_column, minmax_normalize, warn_degenerate
from .results import DEFAULT_TIE_TOLERANCE, Ranking, build_ranking

METHOD_NAME = "Weighting"


def saw_rank(
    situation: DecisionSituation,
    weights: Optional[Sequence[float]] = None,
    encoding: QualitativeEncoding = QualitativeEncoding.REJECT,
    tolerance: float = DEFAULT_TIE_TOLERANCE,
) -> Ranking:
    """
    @brief Rank alternatives by the weighted sum of min-max normalized values.
    @param situation Decision situation; quantitative columns unless encoding allows labels
    @param weights Criterion weights; the situation's own weights when None
    @param encoding REJECT raises on qualitative columns, RANK_INDEX reads labels as their scale rank
    @param tolerance Tie tolerance on scores
    """
    situation = validate_situation(situation)
    weights = normalize_weights(situation.weights if weights is None else weights)
    if len(weights) != len(situation.criteria):
        raise DimensionMismatch(
            f"{len(weights)} weights given for {len(situation.criteria)} criteria"
        )

    columns = []
    warnings = []
    for j, criterion in enumerate(situation.criteria):
        raw = encode_column(situation, j, encoding, METHOD_NAME)
        normalized = minmax_normalize(raw, criterion.direction)
        if normalized.degenerate:
            warnings.append(warn_degenerate(METHOD_NAME, criterion.name))
        columns.append(normalized.values)

    scores = [
        math.fsum(w * columns[j][i] for j, w in enumerate(weights))
        for i in range(len(situation.alternatives))
    ]
    return build_ranking(
        situation.alternatives, scores, tolerance, warnings=tuple(warnings)
    )

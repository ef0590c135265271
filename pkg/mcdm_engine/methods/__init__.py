"""
MC method implementations: weighting (SAW), MAUT, AHP, outranking flows,
fuzzy weighting, plus dispatch and result validation.
"""

from .ahp import (
    Consistency,
    CrMode,
    PairwiseMatrix,
    PriorityMode,
    ahp_consistency,
    ahp_priorities,
    ahp_rank,
)
from .dispatcher import MethodConfig, OutrankingVariant, apply_method
from .fuzzy import DEFAULT_TFN_SCALE, FuzzyNumber, fuzzy_saw_rank, label_to_tfn
from .maut import AggregationForm, UtilityFunction, maut_rank
from .normalization import NormalizedColumn, QualitativeEncoding, minmax_normalize
from .outranking import (
    OutrankingFlows,
    PreferenceFunctionSpec,
    PreferenceShape,
    compute_flows,
    flow_sort,
    promethee1_partial,
    promethee2_rank,
    promethee_flows,
)
from .result_validation import ValidationVerdict, validate_result
from .results import (
    ChoiceSubset,
    DecisionResult,
    Ranking,
    RankingResult,
    SortingResult,
    build_ranking,
)
from .weighting import saw_rank

__all__ = [
    "AggregationForm",
    "ChoiceSubset",
    "Consistency",
    "CrMode",
    "DEFAULT_TFN_SCALE",
    "DecisionResult",
    "FuzzyNumber",
    "MethodConfig",
    "NormalizedColumn",
    "OutrankingFlows",
    "OutrankingVariant",
    "PairwiseMatrix",
    "PreferenceFunctionSpec",
    "PreferenceShape",
    "PriorityMode",
    "QualitativeEncoding",
    "Ranking",
    "RankingResult",
    "SortingResult",
    "UtilityFunction",
    "ValidationVerdict",
    "ahp_consistency",
    "ahp_priorities",
    "ahp_rank",
    "apply_method",
    "build_ranking",
    "compute_flows",
    "flow_sort",
    "fuzzy_saw_rank",
    "label_to_tfn",
    "maut_rank",
    "minmax_normalize",
    "promethee1_partial",
    "promethee2_rank",
    "promethee_flows",
    "saw_rank",
    "validate_result",
]

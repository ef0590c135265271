"""
Method execution: turns a chosen method id, a decision situation and a
method configuration into a decision result matching the problem type.
"""

import copy
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

from ..core_model import DecisionSituation, ProblemKind, validate_situation
from ..exceptions import (
    DocumentError,
    MissingConfig,
    TooManyAlternatives,
    UnknownMethod,
    UnsupportedProblem,
)
from ..registry.interfaces import AHP, FUZZY, MAUT, OUTRANKING, WEIGHTING
from ..shared_logger import LogLevel, shared_logger
from .ahp import MAX_ALTERNATIVES, CrMode, PairwiseMatrix, PriorityMode, ahp_rank
from .fuzzy import DEFAULT_TFN_SCALE, FuzzyNumber, fuzzy_saw_rank
from .maut import AggregationForm, UtilityFunction, maut_rank
from .normalization import QualitativeEncoding
from .outranking import (
    PreferenceFunctionSpec,
    flow_sort,
    promethee1_partial,
    promethee2_rank,
    promethee_flows,
)
from .results import (
    DEFAULT_TIE_TOLERANCE,
    ChoiceSubset,
    DecisionResult,
    Ranking,
    RankingResult,
)
from .weighting import saw_rank

CLASS_PREFIX_MESSAGE = "[MethodDispatcher]"


class OutrankingVariant(Enum):
    COMPLETE = "complete"
    PARTIAL = "partial"


def deep_merge(base: dict, override: dict) -> dict:
    """Recursively merge override into a copy of base."""
    merged = copy.deepcopy(base)
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = deep_merge(merged[key], value)
        else:
            merged[key] = copy.deepcopy(value)
    return merged


def _enum(enum_cls, raw, where):
    try:
        return enum_cls(str(raw).lower())
    except ValueError as e:
        allowed = ", ".join(m.value for m in enum_cls)
        raise DocumentError(f"{where}: '{raw}' is not one of {allowed}") from e


@dataclass(frozen=True)
class MethodConfig:
    """Per-run method parameters; every field has a usable default."""

    choice_k: int = 1
    tie_tolerance: float = DEFAULT_TIE_TOLERANCE
    qualitative_encoding: QualitativeEncoding = QualitativeEncoding.REJECT
    outranking_variant: OutrankingVariant = OutrankingVariant.COMPLETE
    preference_functions: Dict[str, PreferenceFunctionSpec] = field(default_factory=dict)
    sorting_thresholds: Optional[Tuple[float, ...]] = None
    ahp_mode: PriorityMode = PriorityMode.GEOMETRIC_MEAN
    cr_threshold: float = 0.1
    cr_mode: CrMode = CrMode.WARN
    criteria_matrix: Optional[PairwiseMatrix] = None
    alternative_matrices: Dict[str, PairwiseMatrix] = field(default_factory=dict)
    maut_form: AggregationForm = AggregationForm.ADDITIVE
    utilities: Dict[str, UtilityFunction] = field(default_factory=dict)
    fuzzy_weights: Dict[str, FuzzyNumber] = field(default_factory=dict)
    tfn_scale: Tuple[FuzzyNumber, ...] = DEFAULT_TFN_SCALE

    @classmethod
    def from_document(cls, document=None, defaults=None) -> "MethodConfig":
        """
        @brief Build a configuration from its JSON form, layered over defaults.

        Layout:
        {
            "choice_k": 5,
            "tie_tolerance": 1e-12,
            "saw": {"qualitative_encoding": "rank_index"},
            "outranking": {"variant": "complete", "preference_functions": {...}, "sorting_thresholds": [...]},
            "ahp": {"mode": "...", "cr_threshold": 0.1, "cr_mode": "warn", "criteria_matrix": [[...]], "alternative_matrices": {...}},
            "maut": {"form": "additive", "utilities": {"criterion": [[x, u], ...]}},
            "fuzzy": {"weights": {"criterion": [l, m, u]}, "tfn_scale": [[l, m, u], ...]}
        }
        """
        doc = deep_merge(defaults or {}, document or {})
        saw = doc.get("saw", {})
        outranking = doc.get("outranking", {})
        ahp = doc.get("ahp", {})
        maut = doc.get("maut", {})
        fuzzy = doc.get("fuzzy", {})

        choice_k = int(doc.get("choice_k", 1))
        if choice_k < 1:
            raise DocumentError(f"choice_k must be at least 1, got {choice_k}")

        thresholds = outranking.get("sorting_thresholds")
        criteria_matrix = ahp.get("criteria_matrix")
        tfn_scale = fuzzy.get("tfn_scale")

        return cls(
            choice_k=choice_k,
            tie_tolerance=float(doc.get("tie_tolerance", DEFAULT_TIE_TOLERANCE)),
            qualitative_encoding=_enum(
                QualitativeEncoding, saw.get("qualitative_encoding", "reject"), "saw.qualitative_encoding"
            ),
            outranking_variant=_enum(
                OutrankingVariant, outranking.get("variant", "complete"), "outranking.variant"
            ),
            preference_functions={
                name: PreferenceFunctionSpec.from_document(spec)
                for name, spec in outranking.get("preference_functions", {}).items()
            },
            sorting_thresholds=None if thresholds is None else tuple(float(t) for t in thresholds),
            ahp_mode=_enum(PriorityMode, ahp.get("mode", "geometric_mean"), "ahp.mode"),
            cr_threshold=float(ahp.get("cr_threshold", 0.1)),
            cr_mode=_enum(CrMode, ahp.get("cr_mode", "warn"), "ahp.cr_mode"),
            criteria_matrix=None if criteria_matrix is None else PairwiseMatrix(criteria_matrix),
            alternative_matrices={
                name: PairwiseMatrix(entries)
                for name, entries in ahp.get("alternative_matrices", {}).items()
            },
            maut_form=_enum(AggregationForm, maut.get("form", "additive"), "maut.form"),
            utilities={
                name: UtilityFunction(tuple(tuple(p) for p in points))
                for name, points in maut.get("utilities", {}).items()
            },
            fuzzy_weights={
                name: FuzzyNumber.from_document(w) for name, w in fuzzy.get("weights", {}).items()
            },
            tfn_scale=DEFAULT_TFN_SCALE
            if tfn_scale is None
            else tuple(FuzzyNumber.from_document(t) for t in tfn_scale),
        )


def _rank_ahp(situation: DecisionSituation, config: MethodConfig) -> Ranking:
    if len(situation.alternatives) > MAX_ALTERNATIVES:
        raise TooManyAlternatives(
            f"AHP compares at most {MAX_ALTERNATIVES} alternatives pairwise, got {len(situation.alternatives)}"
        )
    missing = [c.name for c in situation.criteria if c.name not in config.alternative_matrices]
    if missing:
        raise MissingConfig(
            f"AHP needs an alternatives pairwise matrix for every criterion; missing: {', '.join(missing)}"
        )
    criteria = config.criteria_matrix if config.criteria_matrix is not None else situation.weights
    return ahp_rank(
        criteria,
        [config.alternative_matrices[c.name] for c in situation.criteria],
        alternatives=situation.alternatives,
        mode=config.ahp_mode,
        cr_threshold=config.cr_threshold,
        cr_mode=config.cr_mode,
        tolerance=config.tie_tolerance,
    )


def _rank_outranking(situation: DecisionSituation, config: MethodConfig) -> Ranking:
    flows = promethee_flows(situation, config.preference_functions)
    # Choice always cuts the complete order
    if (
        config.outranking_variant == OutrankingVariant.PARTIAL
        and situation.problem == ProblemKind.RANKING
    ):
        return promethee1_partial(flows, config.tie_tolerance)
    return promethee2_rank(flows, config.tie_tolerance)


RANKERS = {
    WEIGHTING: lambda s, c: saw_rank(s, encoding=c.qualitative_encoding, tolerance=c.tie_tolerance),
    MAUT: lambda s, c: maut_rank(s, c.utilities, form=c.maut_form, tolerance=c.tie_tolerance),
    AHP: _rank_ahp,
    OUTRANKING: _rank_outranking,
    FUZZY: lambda s, c: fuzzy_saw_rank(s, c.fuzzy_weights, c.tfn_scale, c.tie_tolerance),
}

# Methods able to assign alternatives to ordered categories
SORTING_METHODS = frozenset({OUTRANKING})


def apply_method(
    situation: DecisionSituation,
    method_id: str,
    config: Optional[MethodConfig] = None,
) -> DecisionResult:
    """
    @brief Execute a registered method on a decision situation.
    @param situation The decision situation
    @param method_id Identifier of one of the built-in method families
    @param config Method configuration (defaults when None)
    @return ChoiceSubset, RankingResult or SortingResult according to the problem type
    """
    config = config or MethodConfig()
    situation = validate_situation(situation)
    if method_id not in RANKERS:
        raise UnknownMethod(f"No implementation for method '{method_id}'")

    shared_logger.log(
        f"{CLASS_PREFIX_MESSAGE} [{LogLevel.INFO.name}] Applying {method_id} to "
        f"{len(situation.alternatives)} alternatives ({situation.problem.value})"
    )

    if situation.problem == ProblemKind.SORTING:
        if method_id not in SORTING_METHODS:
            raise UnsupportedProblem(f"{method_id} does not solve sorting problems")
        if config.sorting_thresholds is None:
            raise MissingConfig("Sorting needs outranking.sorting_thresholds in the method config")
        flows = promethee_flows(situation, config.preference_functions)
        return flow_sort(flows, config.sorting_thresholds, situation.sorting_categories)

    ranking = RANKERS[method_id](situation, config)
    if situation.problem == ProblemKind.RANKING:
        return RankingResult(ranking)
    return ChoiceSubset(ranking.top_k(config.choice_k), ranking)

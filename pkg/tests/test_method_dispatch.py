"""
Method dispatch, method configuration documents and result validation.
"""

import dataclasses

import pytest

from conftest import FIXTURES_DIR, make_situation, qualitative_criterion
from mcdm_engine.core_model import DecisionSituation, Label, ProblemKind, validate_situation
from mcdm_engine.core_state import PipelineStep
from mcdm_engine.exceptions import (
    DocumentError,
    MissingConfig,
    QualitativeDataUnsupported,
    TooManyAlternatives,
    UnknownMethod,
    UnsupportedProblem,
)
from mcdm_engine.methods import (
    ChoiceSubset,
    MethodConfig,
    OutrankingVariant,
    PairwiseMatrix,
    QualitativeEncoding,
    RankingResult,
    SortingResult,
    apply_method,
    build_ranking,
    validate_result,
)
from mcdm_engine.methods.dispatcher import deep_merge
from mcdm_engine.pipeline import load_method_config, load_situation
from mcdm_engine.requirements import MethodRequirements
from mcdm_engine.registry import AHP, FUZZY, MAUT, OUTRANKING, WEIGHTING

ROWS = [(2, 10), (4, 20), (6, 15), (1, 1)]


def ranking_situation():
    return make_situation(ROWS)


def choice_situation():
    return make_situation(ROWS, problem=ProblemKind.CHOICE)


def sorting_situation():
    return make_situation(
        [(5, 1), (3, 4), (1, 2)],
        problem=ProblemKind.SORTING,
        sorting_categories=("good", "bad"),
    )


# === Configuration ===
def test_default_config():
    config = MethodConfig.from_document()
    assert config == MethodConfig()
    assert config.choice_k == 1
    assert config.outranking_variant == OutrankingVariant.COMPLETE


def test_config_document_layers_over_defaults():
    defaults = {"choice_k": 2, "ahp": {"cr_threshold": 0.2, "mode": "eigenvector"}}
    document = {
        "ahp": {"cr_threshold": 0.05, "alternative_matrices": {"c1": [[1, 2], [0.5, 1]]}},
        "saw": {"qualitative_encoding": "rank_index"},
        "outranking": {
            "variant": "partial",
            "preference_functions": {"c1": {"shape": "v_shape", "p": 2}},
            "sorting_thresholds": [0.1],
        },
        "maut": {"form": "multiplicative", "utilities": {"c1": [[0, 0], [10, 1]]}},
        "fuzzy": {"weights": {"c1": [0.2, 0.3, 0.4]}},
    }
    config = MethodConfig.from_document(document, defaults)
    assert config.choice_k == 2
    assert config.cr_threshold == 0.05
    assert config.ahp_mode.value == "eigenvector"
    assert config.alternative_matrices["c1"] == PairwiseMatrix([[1, 2], [0.5, 1]])
    assert config.qualitative_encoding == QualitativeEncoding.RANK_INDEX
    assert config.outranking_variant == OutrankingVariant.PARTIAL
    assert config.preference_functions["c1"].p == 2.0
    assert config.sorting_thresholds == (0.1,)
    assert config.maut_form.value == "multiplicative"
    assert config.utilities["c1"].domain == (0.0, 10.0)
    assert config.fuzzy_weights["c1"].as_tuple() == (0.2, 0.3, 0.4)


def test_config_rejects_bad_values():
    with pytest.raises(DocumentError):
        MethodConfig.from_document({"choice_k": 0})
    with pytest.raises(DocumentError):
        MethodConfig.from_document({"outranking": {"variant": "sideways"}})
    with pytest.raises(DocumentError):
        MethodConfig.from_document({"ahp": {"cr_mode": "ignore"}})


def test_deep_merge_does_not_touch_inputs():
    base = {"a": {"b": 1, "c": 2}}
    merged = deep_merge(base, {"a": {"b": 5}, "d": 1})
    assert merged == {"a": {"b": 5, "c": 2}, "d": 1}
    assert base == {"a": {"b": 1, "c": 2}}


# === Dispatch ===
@pytest.mark.parametrize("method_id", [WEIGHTING, MAUT, OUTRANKING, FUZZY])
def test_ranking_problems_yield_full_rankings(method_id):
    result = apply_method(ranking_situation(), method_id)
    assert isinstance(result, RankingResult)
    assert result.ranking.alternatives == frozenset({"a1", "a2", "a3", "a4"})


def test_choice_takes_the_best_alternative():
    result = apply_method(choice_situation(), WEIGHTING)
    assert isinstance(result, ChoiceSubset)
    assert result.alternatives == ("a3",)
    assert result.to_document()["kind"] == "choice"


def test_choice_k_extends_the_subset():
    config = MethodConfig(choice_k=3)
    result = apply_method(choice_situation(), WEIGHTING, config)
    assert result.alternatives == ("a3", "a2", "a1")


def test_partial_variant_only_applies_to_ranking():
    config = MethodConfig(outranking_variant=OutrankingVariant.PARTIAL)
    ranking = apply_method(ranking_situation(), OUTRANKING, config)
    assert ranking.ranking.is_partial
    choice = apply_method(choice_situation(), OUTRANKING, config)
    assert not choice.ranking.is_partial


def test_sorting_with_outranking():
    config = MethodConfig(sorting_thresholds=(0.0,))
    result = apply_method(sorting_situation(), OUTRANKING, config)
    assert isinstance(result, SortingResult)
    assert result.categories == ("good", "bad")
    assert set(result.assignments) == {"a1", "a2", "a3"}


def test_sorting_needs_thresholds_and_outranking():
    with pytest.raises(MissingConfig):
        apply_method(sorting_situation(), OUTRANKING)
    with pytest.raises(UnsupportedProblem):
        apply_method(sorting_situation(), WEIGHTING, MethodConfig(sorting_thresholds=(0.0,)))


def test_unknown_method():
    with pytest.raises(UnknownMethod):
        apply_method(ranking_situation(), "ELECTRE")


def test_ahp_needs_matrices_and_few_alternatives():
    with pytest.raises(MissingConfig):
        apply_method(ranking_situation(), AHP)

    matrices = {
        "c1": PairwiseMatrix.from_weights([1, 2, 3, 0.5]),
        "c2": PairwiseMatrix.from_weights([2, 4, 3, 1]),
    }
    result = apply_method(ranking_situation(), AHP, MethodConfig(alternative_matrices=matrices))
    assert result.ranking.order[0] == "a3"

    many = make_situation([(i, i) for i in range(10)])
    with pytest.raises(TooManyAlternatives):
        apply_method(many, AHP, MethodConfig(alternative_matrices=matrices))


def test_weighting_rejects_labels_by_default():
    situation = DecisionSituation(
        problem=ProblemKind.RANKING,
        alternatives=("a", "b"),
        criteria=(qualitative_criterion("q", ("low", "high")),),
        performance=((Label("low"),), (Label("high"),)),
    )
    with pytest.raises(QualitativeDataUnsupported):
        apply_method(situation, WEIGHTING)
    config = MethodConfig(qualitative_encoding=QualitativeEncoding.RANK_INDEX)
    assert apply_method(situation, WEIGHTING, config).ranking.order == ("b", "a")


# === Result validation ===
def test_valid_results_pass():
    situation = ranking_situation()
    verdict = validate_result(apply_method(situation, WEIGHTING), situation)
    assert verdict.ok
    assert verdict.to_document() == {"ok": True}


def test_ranking_must_cover_every_alternative():
    situation = ranking_situation()
    result = RankingResult(build_ranking(("a1", "a2"), (1.0, 0.0)))
    verdict = validate_result(result, situation)
    assert verdict.flashback == PipelineStep.IDENTIFY_REQUIREMENTS


def test_result_kind_must_match_problem():
    situation = ranking_situation()
    verdict = validate_result(ChoiceSubset(("a1",)), situation)
    assert verdict.flashback == PipelineStep.APPLY_METHOD


def test_requirements_must_match_situation_problem():
    situation = ranking_situation()
    result = apply_method(situation, WEIGHTING)
    verdict = validate_result(result, situation, MethodRequirements(problem=ProblemKind.CHOICE))
    assert verdict.flashback == PipelineStep.SPECIFY_REQUIREMENTS
    assert verdict.to_document()["flashback"] == "specify_requirements"


@pytest.mark.parametrize(
    "chosen, step",
    [
        ((), PipelineStep.APPLY_METHOD),
        (("a1", "a2", "a3", "a4"), PipelineStep.APPLY_METHOD),
        (("a9",), PipelineStep.IDENTIFY_REQUIREMENTS),
    ],
)
def test_choice_must_discriminate(chosen, step):
    assert validate_result(ChoiceSubset(chosen), choice_situation()).flashback == step


def test_sorting_categories_must_be_declared():
    situation = sorting_situation()
    good = SortingResult({"a1": "good", "a2": "bad", "a3": "bad"}, ("good", "bad"))
    assert validate_result(good, situation).ok
    stray = dataclasses.replace(good, assignments={"a1": "ugly", "a2": "bad", "a3": "bad"})
    assert validate_result(stray, situation).flashback == PipelineStep.IDENTIFY_REQUIREMENTS


# === Outranking on the risks case ===
def risk_preference(spec, d):
    if spec["shape"] == "usual":
        return 1.0 if d > 0 else 0.0
    if spec["shape"] == "v_shape":
        return min(max(d, 0.0) / spec["p"], 1.0)
    q, p = spec["q"], spec["p"]
    if d <= q:
        return 0.0
    return 1.0 if d >= p else (d - q) / (p - q)


def test_outranking_on_risks_conserves_flows_and_matches_pairwise_enumeration():
    risks = FIXTURES_DIR / "risks"
    situation = validate_situation(load_situation(risks / "situation.json").situation)
    result = apply_method(situation, OUTRANKING, load_method_config(risks / "method_config.json"))
    net = result.ranking.scores
    assert len(net) == 25
    assert abs(sum(net.values())) <= 1e-12

    preference_functions = {
        "schedule_deviation": {"shape": "linear", "q": 1, "p": 4},
        "effort_deviation": {"shape": "linear", "q": 5, "p": 20},
        "cost_deviation": {"shape": "v_shape", "p": 50},
        "likelihood": {"shape": "v_shape", "p": 0.4},
        "risk_exposure": {"shape": "linear", "q": 2, "p": 20},
        "risk_magnitude": {"shape": "v_shape", "p": 1.5},
        "type": {"shape": "usual"},
        "resource": {"shape": "usual"},
    }
    criteria = situation.criteria
    total = sum(c.weight for c in criteria)

    def value(row, k):
        cell = situation.performance[row][k]
        if isinstance(cell, Label):
            return float(criteria[k].scale.index(cell.label))
        return cell.value

    def pi(a, b):
        return sum(
            c.weight / total * risk_preference(preference_functions[c.name], value(a, k) - value(b, k))
            for k, c in enumerate(criteria)
        )

    n = len(situation.alternatives)
    for a in (0, 4, 9, 16, 24):
        expected = sum(pi(a, b) - pi(b, a) for b in range(n) if b != a) / (n - 1)
        assert abs(net[situation.alternatives[a]] - expected) <= 1e-12

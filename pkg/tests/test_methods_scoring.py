"""
Score-based methods: normalization, weighting (SAW), MAUT and fuzzy weighting.
"""

import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from conftest import make_situation, qualitative_criterion
from mcdm_engine.core_model import (
    Criterion,
    DataType,
    DecisionSituation,
    Direction,
    FuzzyTriple,
    Label,
    Numeric,
    ProblemKind,
)
from mcdm_engine.exceptions import (
    DataTypeUnsupported,
    EmptyUtility,
    InvalidFuzzyNumber,
    InvalidUtilityFunction,
    NegativeSupport,
    QualitativeDataUnsupported,
)
from mcdm_engine.methods import (
    DEFAULT_TFN_SCALE,
    AggregationForm,
    FuzzyNumber,
    QualitativeEncoding,
    UtilityFunction,
    build_ranking,
    fuzzy_saw_rank,
    label_to_tfn,
    maut_rank,
    minmax_normalize,
    saw_rank,
)
from mcdm_engine.shared_logger import shared_logger

MAX = Direction.MAXIMIZE
MIN = Direction.MINIMIZE


@st.composite
def integer_situations(draw, max_alternatives=8, max_criteria=4):
    n = draw(st.integers(2, max_alternatives))
    m = draw(st.integers(1, max_criteria))
    rows = draw(
        st.lists(
            st.lists(st.integers(-100, 100), min_size=m, max_size=m),
            min_size=n,
            max_size=n,
        )
    )
    directions = draw(st.lists(st.sampled_from([MAX, MIN]), min_size=m, max_size=m))
    weights = draw(st.lists(st.integers(1, 20), min_size=m, max_size=m))
    return make_situation(rows, directions, [float(w) for w in weights])


# === Rankings ===
def test_build_ranking_groups_ties_in_declaration_order():
    ranking = build_ranking(("a", "b", "c", "d"), (0.2, 0.9, 0.2, 0.5))
    assert ranking.groups == (("b",), ("d",), ("a", "c"))
    assert ranking.order == ("b", "d", "a", "c")
    assert ranking.position("c") == 2
    assert ranking.top_k(1) == ("b",)
    assert ranking.top_k(3) == ("b", "d", "a", "c")


def test_build_ranking_tolerance_is_relative_to_group_head():
    ranking = build_ranking(("a", "b", "c"), (1.0, 0.96, 0.92), tolerance=0.05)
    assert ranking.groups == (("a", "b"), ("c",))


# === Normalization ===
def test_minmax_normalize_directions():
    assert minmax_normalize([2, 4, 6], MAX).values == (0.0, 0.5, 1.0)
    assert minmax_normalize([2, 4, 6], MIN).values == (1.0, 0.5, 0.0)


def test_constant_column_is_degenerate():
    column = minmax_normalize([3, 3, 3], MAX)
    assert column.degenerate
    assert column.values == (0.5, 0.5, 0.5)


# === Weighting ===
def test_saw_scores():
    situation = make_situation([(2, 10), (4, 20), (6, 15)])
    ranking = saw_rank(situation)
    assert ranking.scores == {"a1": 0.0, "a2": 0.75, "a3": 0.75}
    assert ranking.groups == (("a2", "a3"), ("a1",))


def test_saw_minimized_criterion():
    situation = make_situation([(100, 1), (200, 1)], directions=[MIN, MAX], weights=[3, 1])
    ranking = saw_rank(situation)
    assert ranking.order == ("a1", "a2")
    assert ranking.scores["a1"] == pytest.approx(0.75 + 0.125)
    assert ranking.warnings == ("constant criterion 'c2'",)


def test_saw_explicit_weights_override_situation():
    situation = make_situation([(1, 0), (0, 1)], weights=[1, 1])
    assert saw_rank(situation, weights=[0.2, 0.8]).order == ("a2", "a1")


def test_saw_rejects_qualitative_unless_encoded():
    situation = DecisionSituation(
        problem=ProblemKind.RANKING,
        alternatives=("a", "b"),
        criteria=(qualitative_criterion("q", ("low", "high")),),
        performance=((Label("high"),), (Label("low"),)),
    )
    with pytest.raises(QualitativeDataUnsupported):
        saw_rank(situation)
    assert saw_rank(situation, encoding=QualitativeEncoding.RANK_INDEX).order == ("a", "b")


def test_saw_rejects_fuzzy_cells():
    situation = DecisionSituation(
        problem=ProblemKind.RANKING,
        alternatives=("a", "b"),
        criteria=(Criterion("f", data_type=DataType.FUZZY),),
        performance=((FuzzyTriple(1, 2, 3),), (Numeric(2.0),)),
    )
    with pytest.raises(DataTypeUnsupported):
        saw_rank(situation)


@hypothesis_settings(max_examples=500, deadline=None)
@given(
    integer_situations(),
    st.integers(1, 10),
    st.integers(-50, 50),
    st.data(),
)
def test_saw_is_invariant_under_positive_affine_rescaling(situation, scale, shift, data):
    j = data.draw(st.integers(0, len(situation.criteria) - 1))
    rescaled_rows = [
        [cell.value * scale + shift if k == j else cell.value for k, cell in enumerate(row)]
        for row in situation.performance
    ]
    rescaled = make_situation(
        rescaled_rows,
        [c.direction for c in situation.criteria],
        list(situation.weights),
    )
    before = saw_rank(situation).scores
    after = saw_rank(rescaled).scores
    for alternative in situation.alternatives:
        assert after[alternative] == pytest.approx(before[alternative], abs=1e-9)


# === MAUT ===
def test_utility_function_validation():
    with pytest.raises(EmptyUtility):
        UtilityFunction(())
    with pytest.raises(InvalidUtilityFunction):
        UtilityFunction(((0, 0),))
    with pytest.raises(InvalidUtilityFunction):
        UtilityFunction(((0, 0), (0, 1)))
    with pytest.raises(InvalidUtilityFunction):
        UtilityFunction(((0, 0), (1, 1.5)))
    with pytest.raises(InvalidUtilityFunction):
        UtilityFunction(((0, 0.2), (1, 1)))


def test_utility_function_interpolates_and_clamps():
    utility = UtilityFunction(((0, 0), (10, 0.8), (20, 1)))
    assert utility.evaluate(5) == (pytest.approx(0.4), False)
    assert utility.evaluate(15) == (pytest.approx(0.9), False)
    assert utility.evaluate(-3) == (0.0, True)
    assert utility.evaluate(25) == (1.0, True)
    assert UtilityFunction.linear(0, 4, MIN).evaluate(1)[0] == pytest.approx(0.75)


def test_maut_with_configured_utilities():
    situation = make_situation([(5, 0), (15, 0), (25, 10)])
    utilities = {
        "c1": UtilityFunction(((0, 0), (10, 0.8), (20, 1))),
        "c2": UtilityFunction(((0, 1), (10, 0))),
    }
    ranking = maut_rank(situation, utilities)
    assert ranking.scores["a1"] == pytest.approx(0.5 * 0.4 + 0.5 * 1)
    assert ranking.scores["a2"] == pytest.approx(0.5 * 0.9 + 0.5 * 1)
    assert ranking.scores["a3"] == pytest.approx(0.5 * 1 + 0.5 * 0)
    assert ranking.order == ("a2", "a1", "a3")
    assert "values of 'c1' clamped to the utility domain" in ranking.warnings


def test_maut_clamping_is_logged_as_a_warning(tmp_path):
    log_file = tmp_path / "engine.log"
    shared_logger.set_log_file(str(log_file))
    situation = make_situation([(5, 0), (25, 10)])
    maut_rank(situation, {"c1": UtilityFunction(((0, 0), (20, 1)))})
    lines = log_file.read_text(encoding="utf-8").splitlines()
    assert any("[MAUT] [WARNING]" in line and "'c1'" in line for line in lines)
    assert not any("'c2'" in line and "clamped" in line for line in lines)


def test_multiplicative_form_ties():
    situation = make_situation([(1, 0.25), (0.5, 0.5)])
    identity = UtilityFunction(((0, 0), (1, 1)))
    ranking = maut_rank(
        situation, {"c1": identity, "c2": identity}, form=AggregationForm.MULTIPLICATIVE
    )
    assert ranking.scores["a1"] == pytest.approx(0.5)
    assert ranking.scores["a2"] == pytest.approx(0.5)
    assert ranking.groups == (("a1", "a2"),)


def test_multiplicative_form_zero_utility_is_floored():
    situation = make_situation([(0, 1), (1, 1)])
    identity = UtilityFunction(((0, 0), (1, 1)))
    ranking = maut_rank(
        situation, {"c1": identity, "c2": identity}, form=AggregationForm.MULTIPLICATIVE
    )
    assert 0 < ranking.scores["a1"] < 1e-5
    assert ranking.order == ("a2", "a1")


def test_maut_reads_qualitative_labels_by_rank():
    situation = DecisionSituation(
        problem=ProblemKind.RANKING,
        alternatives=("a", "b", "c"),
        criteria=(qualitative_criterion("q", ("low", "mid", "high")),),
        performance=((Label("mid"),), (Label("high"),), (Label("low"),)),
    )
    ranking = maut_rank(situation)
    assert ranking.scores == {"a": 0.5, "b": 1.0, "c": 0.0}


@hypothesis_settings(max_examples=500, deadline=None)
@given(integer_situations())
def test_linear_additive_maut_agrees_with_saw(situation):
    saw = saw_rank(situation).scores
    maut = maut_rank(situation).scores
    for alternative in situation.alternatives:
        assert maut[alternative] == pytest.approx(saw[alternative], abs=1e-9)


# === Fuzzy numbers ===
def test_fuzzy_number_arithmetic():
    a = FuzzyNumber(1, 2, 3)
    b = FuzzyNumber(0.5, 1, 2)
    assert (a + b).as_tuple() == (1.5, 3, 5)
    assert (a * b).as_tuple() == (0.5, 2, 6)
    assert a.scaled(2).as_tuple() == (2, 4, 6)
    assert FuzzyNumber(0.2, 0.5, 0.6).complement().as_tuple() == pytest.approx((0.4, 0.5, 0.8))
    assert a.centroid() == 2.0
    assert FuzzyNumber(0, 0, 3).centroid() == 1.0
    assert FuzzyNumber.crisp(0.3).centroid() == 0.3


def test_fuzzy_number_validation():
    with pytest.raises(InvalidFuzzyNumber):
        FuzzyNumber(2, 1, 3)
    with pytest.raises(InvalidFuzzyNumber):
        FuzzyNumber.from_document(["a", 1, 2])
    assert FuzzyNumber.from_document(4) == FuzzyNumber.crisp(4.0)
    assert FuzzyNumber.from_document([1, 2, 3]) == FuzzyNumber(1.0, 2.0, 3.0)


def test_product_needs_nonnegative_support():
    with pytest.raises(NegativeSupport):
        FuzzyNumber(-1, 0, 1) * FuzzyNumber(1, 1, 1)
    with pytest.raises(NegativeSupport):
        FuzzyNumber(1, 1, 1).scaled(-0.5)


def test_label_levels_spread_over_scale():
    assert label_to_tfn(0, 3) == DEFAULT_TFN_SCALE[0]
    assert label_to_tfn(1, 3) == DEFAULT_TFN_SCALE[2]
    assert label_to_tfn(2, 3) == DEFAULT_TFN_SCALE[4]
    assert label_to_tfn(4, 5) == DEFAULT_TFN_SCALE[4]


# === Fuzzy weighting ===
def test_fuzzy_ranking_by_centroid():
    situation = DecisionSituation(
        problem=ProblemKind.RANKING,
        alternatives=("a", "b"),
        criteria=(Criterion("f", data_type=DataType.FUZZY),),
        performance=((FuzzyTriple(0, 2, 4),), (FuzzyTriple(1, 1, 1),)),
    )
    ranking = fuzzy_saw_rank(situation)
    assert ranking.fuzzy_scores["a"] == (0.0, 0.5, 1.0)
    assert ranking.fuzzy_scores["b"] == (0.25, 0.25, 0.25)
    assert ranking.scores == {"a": 0.5, "b": 0.25}
    assert ranking.order == ("a", "b")


def test_fuzzy_qualitative_minimized_labels_are_complemented():
    situation = DecisionSituation(
        problem=ProblemKind.RANKING,
        alternatives=("a", "b"),
        criteria=(qualitative_criterion("risk", ("low", "high"), direction=MIN),),
        performance=((Label("low"),), (Label("high"),)),
    )
    ranking = fuzzy_saw_rank(situation)
    assert ranking.order == ("a", "b")
    assert ranking.fuzzy_scores["a"] == (0.75, 1.0, 1.0)


def test_fuzzy_weights_with_negative_support_rejected():
    situation = make_situation([(1,), (2,)])
    with pytest.raises(NegativeSupport):
        fuzzy_saw_rank(situation, {"c1": FuzzyNumber(-0.1, 0.5, 1)})


@hypothesis_settings(max_examples=300, deadline=None)
@given(integer_situations())
def test_fuzzy_weighting_equals_saw_on_crisp_inputs(situation):
    saw = saw_rank(situation)
    fuzzy = fuzzy_saw_rank(situation)
    assert fuzzy.scores == saw.scores
    assert fuzzy.groups == saw.groups

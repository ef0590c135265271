"""
Preference flows, complete and partial outranking rankings, flow sorting.
"""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from conftest import make_situation
from mcdm_engine.core_model import Direction
from mcdm_engine.exceptions import (
    InvalidPreferenceFunction,
    InvalidSortingThresholds,
    NonMonotoneThresholds,
)
from mcdm_engine.methods import (
    OutrankingFlows,
    PreferenceFunctionSpec,
    PreferenceShape,
    compute_flows,
    flow_sort,
    promethee1_partial,
    promethee2_rank,
    promethee_flows,
)

LINEAR_1_3 = PreferenceFunctionSpec(PreferenceShape.LINEAR, p=3.0, q=1.0)
TWO_LINEAR = {"c1": LINEAR_1_3, "c2": LINEAR_1_3}

preference_specs = st.one_of(
    st.just(PreferenceFunctionSpec()),
    st.floats(0.1, 10).map(lambda p: PreferenceFunctionSpec(PreferenceShape.V_SHAPE, p=p)),
    st.tuples(st.floats(0, 5), st.floats(0.1, 5)).map(
        lambda qp: PreferenceFunctionSpec(PreferenceShape.LINEAR, p=qp[0] + qp[1], q=qp[0])
    ),
)


@st.composite
def flow_inputs(draw, max_alternatives=6, max_criteria=4):
    n = draw(st.integers(2, max_alternatives))
    m = draw(st.integers(1, max_criteria))
    table = draw(
        st.lists(
            st.lists(st.floats(-50, 50, allow_nan=False), min_size=m, max_size=m),
            min_size=n,
            max_size=n,
        )
    )
    directions = draw(
        st.lists(st.sampled_from([Direction.MAXIMIZE, Direction.MINIMIZE]), min_size=m, max_size=m)
    )
    weights = draw(st.lists(st.floats(0.01, 10), min_size=m, max_size=m))
    prefs = draw(st.lists(preference_specs, min_size=m, max_size=m))
    names = tuple(f"a{i + 1}" for i in range(n))
    return np.array(table, dtype=float), directions, weights, prefs, names


# === Preference functions ===
def test_preference_shapes():
    d = np.array([-1.0, 0.0, 0.5, 1.0, 2.0, 4.0])
    assert PreferenceFunctionSpec().preference(d).tolist() == [0, 0, 1, 1, 1, 1]
    v_shape = PreferenceFunctionSpec(PreferenceShape.V_SHAPE, p=2.0)
    assert v_shape.preference(d).tolist() == [0, 0, 0.25, 0.5, 1, 1]
    assert LINEAR_1_3.preference(d).tolist() == [0, 0, 0, 0, 0.5, 1]


def test_preference_function_validation():
    with pytest.raises(InvalidPreferenceFunction):
        PreferenceFunctionSpec(PreferenceShape.V_SHAPE)
    with pytest.raises(InvalidPreferenceFunction):
        PreferenceFunctionSpec(PreferenceShape.LINEAR, p=1.0, q=1.0)
    with pytest.raises(InvalidPreferenceFunction):
        PreferenceFunctionSpec.from_document({"shape": "gaussian"})


def test_preference_function_documents():
    assert PreferenceFunctionSpec.from_document("usual") == PreferenceFunctionSpec()
    spec = PreferenceFunctionSpec.from_document({"shape": "linear", "q": 1, "p": 3})
    assert spec == LINEAR_1_3
    assert spec.to_document() == {"shape": "linear", "p": 3.0, "q": 1.0}


# === Flows ===
def test_flows_of_three_alternatives():
    situation = make_situation([(5, 1), (3, 4), (1, 2)])
    flows = promethee_flows(situation, TWO_LINEAR)
    assert flows.phi_plus == pytest.approx((0.375, 0.5, 0.0))
    assert flows.phi_minus == pytest.approx((0.25, 0.125, 0.5))
    assert flows.phi_net == pytest.approx((0.125, 0.375, -0.5))
    assert promethee2_rank(flows).order == ("a2", "a1", "a3")


def test_minimized_criterion_reverses_differences():
    situation = make_situation([(1,), (2,)], directions=[Direction.MINIMIZE])
    flows = promethee_flows(situation)
    assert flows.phi_net == (1.0, -1.0)


def test_flow_weights_override():
    situation = make_situation([(5, 1), (3, 4), (1, 2)])
    flows = promethee_flows(situation, TWO_LINEAR, weights=[0.0, 1.0])
    assert promethee2_rank(flows).order == ("a2", "a3", "a1")


@hypothesis_settings(max_examples=1000, deadline=None)
@given(flow_inputs())
def test_net_flows_are_conserved_and_bounded(inputs):
    table, directions, weights, prefs, names = inputs
    flows = compute_flows(table, directions, weights, prefs, names)
    assert abs(sum(flows.phi_net)) <= 1e-12
    for plus, minus in zip(flows.phi_plus, flows.phi_minus):
        assert -1e-12 <= plus <= 1 + 1e-12
        assert -1e-12 <= minus <= 1 + 1e-12


@hypothesis_settings(max_examples=300, deadline=None)
@given(flow_inputs(max_alternatives=4))
def test_flows_match_pairwise_enumeration(inputs):
    table, directions, weights, prefs, names = inputs
    n, m = table.shape
    total = sum(weights)
    w = [x / total for x in weights]

    def pi(a, b):
        degree = 0.0
        for k in range(m):
            d = table[a, k] - table[b, k]
            if directions[k] == Direction.MINIMIZE:
                d = -d
            degree += w[k] * float(prefs[k].preference(np.array([d]))[0])
        return degree

    flows = compute_flows(table, directions, weights, prefs, names)
    for a in range(n):
        plus = sum(pi(a, b) for b in range(n) if b != a) / (n - 1)
        minus = sum(pi(b, a) for b in range(n) if b != a) / (n - 1)
        assert abs(flows.phi_plus[a] - plus) <= 1e-12
        assert abs(flows.phi_minus[a] - minus) <= 1e-12


# === Partial ranking ===
def test_partial_ranking_reports_incomparability():
    situation = make_situation([(4, 0), (2, 2), (0, 4)])
    flows = promethee_flows(situation, TWO_LINEAR)
    assert flows.phi_plus == pytest.approx((0.375, 0.25, 0.375))
    assert flows.phi_minus == pytest.approx((0.375, 0.25, 0.375))

    ranking = promethee1_partial(flows)
    assert ranking.is_partial
    assert ranking.incomparable == frozenset({("a1", "a2"), ("a2", "a3")})
    assert ranking.outranking == frozenset()
    assert ranking.groups == (("a1", "a3"), ("a2",))
    assert ranking.to_document()["incomparable"] == [["a1", "a2"], ["a2", "a3"]]


def test_partial_ranking_keeps_strict_preferences():
    situation = make_situation([(5, 1), (3, 4), (1, 2)])
    ranking = promethee1_partial(promethee_flows(situation, TWO_LINEAR))
    assert ranking.outranking == frozenset({("a2", "a1"), ("a1", "a3"), ("a2", "a3")})
    assert ranking.incomparable == frozenset()
    assert ranking.order == ("a2", "a1", "a3")


@hypothesis_settings(max_examples=300, deadline=None)
@given(flow_inputs())
def test_partial_relations_partition_distinct_pairs(inputs):
    table, directions, weights, prefs, names = inputs
    ranking = promethee1_partial(compute_flows(table, directions, weights, prefs, names))
    for a, b in itertools.combinations(names, 2):
        related = [
            (a, b) in ranking.outranking,
            (b, a) in ranking.outranking,
            (a, b) in ranking.incomparable,
        ]
        assert sum(related) <= 1
    assert sorted(ranking.order) == sorted(names)


# === Sorting ===
def flows_with_net(values):
    names = tuple(f"a{i + 1}" for i in range(len(values)))
    plus = tuple(max(v, 0.0) for v in values)
    minus = tuple(max(-v, 0.0) for v in values)
    return OutrankingFlows(names, plus, minus)


def test_flow_sort_assigns_first_reached_category():
    result = flow_sort(flows_with_net([0.5, 0.1, -0.3, -0.6]), (0.3, -0.3), ("A", "B", "C"))
    assert result.assignments == {"a1": "A", "a2": "B", "a3": "B", "a4": "C"}
    assert result.members("B") == ("a2", "a3")
    assert result.to_document()["kind"] == "sorting"


def test_flow_sort_threshold_validation():
    flows = flows_with_net([0.5, -0.5])
    with pytest.raises(InvalidSortingThresholds):
        flow_sort(flows, (0.0,), ("A", "B", "C"))
    with pytest.raises(NonMonotoneThresholds):
        flow_sort(flows, (-0.2, 0.2), ("A", "B", "C"))

"""
Pairwise comparison matrices, priority derivation, consistency and synthesis.
"""

import numpy as np
import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from mcdm_engine.exceptions import (
    DimensionMismatch,
    DimensionTooLarge,
    InconsistentMatrix,
    NotPositive,
    NotReciprocal,
    TooManyAlternatives,
)
from mcdm_engine.methods import (
    CrMode,
    PairwiseMatrix,
    PriorityMode,
    ahp_consistency,
    ahp_priorities,
    ahp_rank,
)

SAATY_3 = [[1, 3, 5], [1 / 3, 1, 3], [1 / 5, 1 / 3, 1]]
CYCLIC_3 = [[1, 9, 1 / 9], [1 / 9, 1, 9], [9, 1 / 9, 1]]


# === Matrix validation ===
def test_reciprocity_is_enforced():
    with pytest.raises(NotReciprocal):
        PairwiseMatrix([[1, 2], [2, 1]])
    with pytest.raises(NotReciprocal):
        PairwiseMatrix([[2, 1], [1, 1]])
    with pytest.raises(NotReciprocal):
        PairwiseMatrix([[1, 2, 3], [0.5, 1, 2]])


def test_entries_must_be_positive():
    with pytest.raises(NotPositive):
        PairwiseMatrix([[1, -1], [-1, 1]])
    with pytest.raises(NotPositive):
        PairwiseMatrix.from_weights([1, 0, 2])


def test_size_limits():
    with pytest.raises(DimensionTooLarge):
        ahp_priorities(PairwiseMatrix.from_weights(np.ones(16)))
    with pytest.raises(DimensionTooLarge):
        ahp_consistency(PairwiseMatrix.from_weights(np.ones(11)))
    weights, _ = ahp_priorities(PairwiseMatrix.from_weights(np.ones(15)))
    assert list(weights) == pytest.approx([1 / 15] * 15)


# === Priorities and consistency ===
def test_geometric_mean_priorities():
    weights, lambda_max = ahp_priorities(SAATY_3)
    assert list(weights) == pytest.approx([0.636986, 0.258285, 0.104729], abs=1e-5)
    assert lambda_max == pytest.approx(3.0385, abs=1e-3)


def test_eigenvector_priorities():
    weights, _ = ahp_priorities(SAATY_3, PriorityMode.EIGENVECTOR)
    assert list(weights) == pytest.approx([0.637, 0.258, 0.105], abs=1e-3)
    assert weights.sum() == pytest.approx(1.0)


def test_consistency_ratio():
    consistency = ahp_consistency(SAATY_3)
    assert consistency.ci == pytest.approx(0.01926, abs=1e-4)
    assert consistency.cr == pytest.approx(0.0332, abs=1e-3)


def test_small_orders_are_always_consistent():
    consistency = ahp_consistency([[1, 7], [1 / 7, 1]])
    assert consistency.ci == 0.0
    assert consistency.cr == 0.0
    assert ahp_consistency([[1]]).cr == 0.0


@hypothesis_settings(max_examples=500, deadline=None)
@given(
    st.integers(3, 9).flatmap(
        lambda n: st.lists(st.floats(0.1, 10), min_size=n, max_size=n)
    ),
    st.sampled_from(list(PriorityMode)),
)
def test_consistent_matrix_recovers_its_weights(raw_weights, mode):
    expected = np.asarray(raw_weights) / np.sum(raw_weights)
    matrix = PairwiseMatrix.from_weights(raw_weights)
    weights, lambda_max = ahp_priorities(matrix, mode)
    assert np.max(np.abs(weights - expected)) <= 1e-9
    assert abs(lambda_max - len(raw_weights)) <= 1e-9
    assert ahp_consistency(matrix, mode).cr <= 1e-9


# === Synthesis ===
def test_synthesis_from_direct_criterion_weights():
    matrices = [PairwiseMatrix.from_weights([3, 1]), PairwiseMatrix.from_weights([1, 1])]
    ranking = ahp_rank([0.5, 0.5], matrices, alternatives=("x", "y"))
    assert ranking.scores["x"] == pytest.approx(0.5 * 0.75 + 0.5 * 0.5)
    assert ranking.scores["y"] == pytest.approx(0.5 * 0.25 + 0.5 * 0.5)
    assert ranking.order == ("x", "y")
    assert ranking.warnings == ()


def test_synthesis_from_criteria_matrix():
    criteria = PairwiseMatrix.from_weights([1, 3])
    matrices = [PairwiseMatrix.from_weights([3, 1]), PairwiseMatrix.from_weights([1, 4])]
    ranking = ahp_rank(criteria, matrices)
    assert ranking.order == ("A2", "A1")
    assert ranking.scores["A2"] == pytest.approx(0.25 * 0.25 + 0.75 * 0.8)


def test_inconsistent_matrix_warns_or_raises():
    matrices = [CYCLIC_3]
    ranking = ahp_rank([1.0], matrices)
    assert len(ranking.warnings) == 1
    assert "alternatives matrix 1" in ranking.warnings[0]
    with pytest.raises(InconsistentMatrix):
        ahp_rank([1.0], matrices, cr_mode=CrMode.ERROR)


def test_synthesis_shape_checks():
    two = PairwiseMatrix.from_weights([1, 2])
    three = PairwiseMatrix.from_weights([1, 2, 3])
    with pytest.raises(DimensionMismatch):
        ahp_rank([0.5, 0.5], [two])
    with pytest.raises(DimensionMismatch):
        ahp_rank([0.5, 0.5], [two, three])
    with pytest.raises(DimensionMismatch):
        ahp_rank([1.0], [two], alternatives=("x", "y", "z"))
    with pytest.raises(NotPositive):
        ahp_rank([0.0], [two])


def test_too_many_alternatives():
    with pytest.raises(TooManyAlternatives):
        ahp_rank([1.0], [PairwiseMatrix.from_weights(np.arange(1, 11))])

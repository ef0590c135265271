"""
Analytic Hierarchy Process: pairwise-comparison priorities, consistency and
hierarchical synthesis.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from ..exceptions import (
    DimensionMismatch,
    DimensionTooLarge,
    InconsistentMatrix,
    NotPositive,
    NotReciprocal,
    TooManyAlternatives,
)
from ..shared_logger import LogLevel, shared_logger
from .results import DEFAULT_TIE_TOLERANCE, Ranking, build_ranking

CLASS_PREFIX_MESSAGE = "[AHP]"

# Random consistency indices by matrix order
RANDOM_INDEX = {3: 0.58, 4: 0.90, 5: 1.12, 6: 1.24, 7: 1.32, 8: 1.41, 9: 1.45, 10: 1.49}

MAX_PRIORITY_ORDER = 15
MAX_CONSISTENCY_ORDER = 10
MAX_ALTERNATIVES = 9

RECIPROCAL_TOLERANCE = 1e-9
EIGEN_TOLERANCE = 1e-10
EIGEN_MAX_ITERATIONS = 10000


class PriorityMode(Enum):
    GEOMETRIC_MEAN = "geometric_mean"
    EIGENVECTOR = "eigenvector"


class CrMode(Enum):
    WARN = "warn"
    ERROR = "error"


class PairwiseMatrix:
    """
    Positive reciprocal comparison matrix: a[i][j] > 0, a[i][i] = 1 and
    a[i][j] * a[j][i] = 1 (within 1e-9).
    """

    def __init__(self, entries):
        matrix = np.asarray(entries, dtype=float)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] == 0:
            raise NotReciprocal(f"A pairwise matrix must be square, got shape {matrix.shape}")
        if not np.all(np.isfinite(matrix)) or np.any(matrix <= 0):
            raise NotPositive("Pairwise comparisons must be finite and strictly positive")
        if np.any(np.abs(np.diag(matrix) - 1.0) > RECIPROCAL_TOLERANCE):
            raise NotReciprocal("Pairwise matrix diagonal must be 1")
        products = matrix * matrix.T
        if np.any(np.abs(products - 1.0) > RECIPROCAL_TOLERANCE):
            i, j = np.argwhere(np.abs(products - 1.0) > RECIPROCAL_TOLERANCE)[0]
            raise NotReciprocal(
                f"a[{i}][{j}] * a[{j}][{i}] = {products[i, j]:.6g}, expected 1"
            )
        self.entries = matrix

    @classmethod
    def from_weights(cls, weights: Sequence[float]) -> "PairwiseMatrix":
        """Perfectly consistent matrix a[i][j] = w[i] / w[j]."""
        w = np.asarray(weights, dtype=float)
        if np.any(w <= 0):
            raise NotPositive("Weights behind a pairwise matrix must be strictly positive")
        return cls(w[:, None] / w[None, :])

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def to_document(self):
        return self.entries.tolist()

    def __eq__(self, other):
        return isinstance(other, PairwiseMatrix) and np.array_equal(self.entries, other.entries)

    def __repr__(self):
        return f"PairwiseMatrix(order={self.order})"


@dataclass(frozen=True)
class Consistency:
    lambda_max: float
    ci: float
    cr: float


def _as_matrix(matrix) -> PairwiseMatrix:
    return matrix if isinstance(matrix, PairwiseMatrix) else PairwiseMatrix(matrix)


def _geometric_mean_vector(a: np.ndarray) -> np.ndarray:
    row_means = np.exp(np.log(a).mean(axis=1))
    return row_means / row_means.sum()


def _principal_eigenvector(a: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    w = np.full(n, 1.0 / n)
    for _ in range(EIGEN_MAX_ITERATIONS):
        nxt = a @ w
        nxt = nxt / nxt.sum()
        if np.max(np.abs(nxt - w)) < EIGEN_TOLERANCE:
            return nxt
        w = nxt
    shared_logger.log(
        f"{CLASS_PREFIX_MESSAGE} [{LogLevel.WARNING.name}] Power iteration did not converge "
        f"within {EIGEN_MAX_ITERATIONS} steps"
    )
    return w


def ahp_priorities(
    matrix, mode: PriorityMode = PriorityMode.GEOMETRIC_MEAN
) -> Tuple[np.ndarray, float]:
    """
    @brief Priority vector and principal eigenvalue estimate of a pairwise matrix.
    @param matrix PairwiseMatrix (or nested lists) of order n <= 15
    @param mode Geometric mean of rows or principal eigenvector
    @return (weights summing to 1, lambda_max)
    """
    matrix = _as_matrix(matrix)
    if matrix.order > MAX_PRIORITY_ORDER:
        raise DimensionTooLarge(
            f"Pairwise matrices are limited to order {MAX_PRIORITY_ORDER}, got {matrix.order}"
        )
    a = matrix.entries
    if mode == PriorityMode.EIGENVECTOR:
        weights = _principal_eigenvector(a)
    else:
        weights = _geometric_mean_vector(a)
    lambda_max = float(np.mean((a @ weights) / weights))
    return weights, lambda_max


def ahp_consistency(matrix, mode: PriorityMode = PriorityMode.GEOMETRIC_MEAN) -> Consistency:
    """
    @brief Consistency index and ratio; orders 1 and 2 are always consistent.
    """
    matrix = _as_matrix(matrix)
    n = matrix.order
    if n > MAX_CONSISTENCY_ORDER:
        raise DimensionTooLarge(
            f"No random index for order {n} (maximum {MAX_CONSISTENCY_ORDER})"
        )
    _, lambda_max = ahp_priorities(matrix, mode)
    if n <= 2:
        return Consistency(lambda_max=lambda_max, ci=0.0, cr=0.0)
    # lambda_max >= n for reciprocal matrices; clamp rounding noise
    ci = max(0.0, (lambda_max - n) / (n - 1))
    return Consistency(lambda_max=lambda_max, ci=ci, cr=ci / RANDOM_INDEX[n])


def _check_consistency(matrix: PairwiseMatrix, label, mode, cr_threshold, cr_mode, warnings):
    if matrix.order > MAX_CONSISTENCY_ORDER:
        shared_logger.log(
            f"{CLASS_PREFIX_MESSAGE} [{LogLevel.WARNING.name}] {label}: order {matrix.order} "
            f"has no random index, consistency not checked"
        )
        return
    consistency = ahp_consistency(matrix, mode)
    if consistency.cr <= cr_threshold:
        return
    message = f"{label}: consistency ratio {consistency.cr:.4f} exceeds {cr_threshold}"
    if cr_mode == CrMode.ERROR:
        raise InconsistentMatrix(message)
    shared_logger.log(f"{CLASS_PREFIX_MESSAGE} [{LogLevel.WARNING.name}] {message}")
    warnings.append(message)


def ahp_rank(
    criteria: Union[PairwiseMatrix, Sequence[float]],
    alternative_matrices: Sequence,
    alternatives: Optional[Sequence[str]] = None,
    mode: PriorityMode = PriorityMode.GEOMETRIC_MEAN,
    cr_threshold: float = 0.1,
    cr_mode: CrMode = CrMode.WARN,
    tolerance: float = DEFAULT_TIE_TOLERANCE,
) -> Ranking:
    """
    @brief Hierarchical synthesis: global score = sum of criterion weight x local priority.
    @param criteria Criteria pairwise matrix, or criterion weights given directly
    @param alternative_matrices One alternatives pairwise matrix per criterion
    @param alternatives Alternative names (A1..An when None)
    @param mode Priority derivation mode
    @param cr_threshold Acceptable consistency ratio
    @param cr_mode WARN logs and records inconsistent matrices, ERROR raises InconsistentMatrix
    """
    warnings = []
    if isinstance(criteria, PairwiseMatrix) or np.ndim(criteria) == 2:
        criteria = _as_matrix(criteria)
        _check_consistency(criteria, "criteria matrix", mode, cr_threshold, cr_mode, warnings)
        criteria_weights, _ = ahp_priorities(criteria, mode)
    else:
        criteria_weights = np.asarray(criteria, dtype=float)
        if np.any(criteria_weights < 0) or criteria_weights.sum() <= 0:
            raise NotPositive("Criterion weights must be nonnegative with a positive sum")
        criteria_weights = criteria_weights / criteria_weights.sum()

    matrices = [_as_matrix(m) for m in alternative_matrices]
    if len(matrices) != len(criteria_weights):
        raise DimensionMismatch(
            f"{len(matrices)} alternative matrices for {len(criteria_weights)} criteria"
        )
    n = matrices[0].order
    if any(m.order != n for m in matrices):
        raise DimensionMismatch("All alternative matrices must have the same order")
    if n > MAX_ALTERNATIVES:
        raise TooManyAlternatives(
            f"AHP compares at most {MAX_ALTERNATIVES} alternatives pairwise, got {n}"
        )
    names = tuple(alternatives) if alternatives is not None else tuple(f"A{i + 1}" for i in range(n))
    if len(names) != n:
        raise DimensionMismatch(f"{len(names)} alternative names for matrices of order {n}")

    local = []
    for k, matrix in enumerate(matrices):
        _check_consistency(
            matrix, f"alternatives matrix {k + 1}", mode, cr_threshold, cr_mode, warnings
        )
        local.append(ahp_priorities(matrix, mode)[0])

    scores = [
        math.fsum(float(criteria_weights[k]) * float(local[k][i]) for k in range(len(matrices)))
        for i in range(n)
    ]
    return build_ranking(names, scores, tolerance, warnings=tuple(warnings))

"""
Column normalization and numeric encoding of performance tables.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Tuple

import numpy as np

from ..core_model import DataType, DecisionSituation, Direction, FuzzyTriple, Label, Numeric
from ..exceptions import DataTypeUnsupported, QualitativeDataUnsupported
from ..shared_logger import LogLevel, shared_logger

CLASS_PREFIX_MESSAGE = "[Normalization]"

# Value given to every entry of a constant column
DEGENERATE_VALUE = 0.5


class QualitativeEncoding(Enum):
    REJECT = "reject"
    RANK_INDEX = "rank_index"


@dataclass(frozen=True)
class NormalizedColumn:
    values: Tuple[float, ...]
    degenerate: bool = False


def minmax_normalize(column: Sequence[float], direction: Direction) -> NormalizedColumn:
    """
    @brief Map a numeric column onto [0, 1], best value to 1.
    @param column Raw values
    @param direction MAXIMIZE or MINIMIZE
    @return The normalized values; a constant column maps to 0.5 and is flagged degenerate.
    """
    values = np.asarray(column, dtype=float)
    lo, hi = float(values.min()), float(values.max())
    if hi == lo:
        return NormalizedColumn(tuple(DEGENERATE_VALUE for _ in values), degenerate=True)
    span = hi - lo
    if direction == Direction.MAXIMIZE:
        normalized = (values - lo) / span
    else:
        normalized = (hi - values) / span
    return NormalizedColumn(tuple(float(v) for v in normalized))


def encode_column(
    situation: DecisionSituation,
    index: int,
    encoding: QualitativeEncoding = QualitativeEncoding.RANK_INDEX,
    method_name: str = "method",
) -> np.ndarray:
    """
    @brief Crisp numeric encoding of one performance column.

    Qualitative labels become their 0-based scale rank when the encoding
    allows it; fuzzy columns only pass when every cell is crisp.
    """
    criterion = situation.criteria[index]
    cells = situation.column(index)

    if criterion.data_type == DataType.QUALITATIVE:
        if encoding == QualitativeEncoding.REJECT:
            raise QualitativeDataUnsupported(
                f"{method_name} needs quantitative data; criterion '{criterion.name}' is qualitative"
            )
        return np.array([criterion.rank_of(cell.label) for cell in cells], dtype=float)

    encoded = []
    for cell in cells:
        if isinstance(cell, Numeric):
            encoded.append(cell.value)
        elif isinstance(cell, FuzzyTriple) and cell.l == cell.u:
            encoded.append(cell.m)
        elif isinstance(cell, Label):
            raise QualitativeDataUnsupported(
                f"{method_name} cannot read label '{cell.label}' of criterion '{criterion.name}'"
            )
        else:
            raise DataTypeUnsupported(
                f"{method_name} does not accept fuzzy values (criterion '{criterion.name}')"
            )
    return np.array(encoded, dtype=float)


def encode_table(
    situation: DecisionSituation,
    encoding: QualitativeEncoding = QualitativeEncoding.RANK_INDEX,
    method_name: str = "method",
) -> np.ndarray:
    """Alternatives x criteria float matrix built column by column."""
    columns = [
        encode_column(situation, j, encoding, method_name)
        for j in range(len(situation.criteria))
    ]
    return np.column_stack(columns)


def warn_degenerate(method_name: str, criterion_name: str) -> str:
    message = (
        f"{CLASS_PREFIX_MESSAGE} [{LogLevel.WARNING.name}] {method_name}: criterion "
        f"'{criterion_name}' is constant over all alternatives; every value maps to {DEGENERATE_VALUE}"
    )
    shared_logger.log(message)
    return f"constant criterion '{criterion_name}'"

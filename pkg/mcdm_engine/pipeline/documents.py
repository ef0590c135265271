"""
Input documents: situation, usage preferences, L2 weights and method
configuration, all JSON.

A situation document looks like:
{
    "name": "Select Tools",
    "problem": "choice",
    "alternatives": ["T01", "T02"],
    "criteria": [
        {"name": "cost", "direction": "minimize", "data_type": "quantitative", "weight": 0.3},
        {"name": "vendor", "data_type": "qualitative", "scale": ["weak", "fair", "good"]}
    ],
    "performance": {"T01": [1200, "good"], "T02": [800, "fair"]},
    "investigation": ["retain_problem_type", "calculate_alternatives_number"]
}

Cells are numbers (quantitative), labels (qualitative) or [l, m, u]
triples (fuzzy). "performance" may also be a list of rows in alternatives
order, and "criteria_pairwise" may replace per-criterion weights.
"""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, FrozenSet, Optional

from ..core_model import (
    AlternativesNature,
    Criterion,
    DataType,
    DecisionSituation,
    Direction,
    FuzzyTriple,
    Label,
    Numeric,
    ProblemKind,
    WeightingSource,
)
from ..exceptions import DocumentError, McdmError
from ..methods import MethodConfig, PairwiseMatrix, ahp_priorities
from ..requirements import InvestigationOperation, UsagePreferences, enum_by_name
from ..shared_logger import LogLevel, shared_logger

CLASS_PREFIX_MESSAGE = "[Documents]"


@dataclass(frozen=True)
class SituationDocument:
    situation: DecisionSituation
    operations: Optional[FrozenSet[InvestigationOperation]] = None
    description: str = ""


def load_json_document(path, kind: str = "document"):
    """
    @brief Read one JSON document.
    @exception DocumentError when the file is missing, unreadable or not JSON
    """
    path = Path(path)
    if not path.is_file():
        raise DocumentError(f"{kind.capitalize()} file not found: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            document = json.load(f)
    except json.JSONDecodeError as e:
        raise DocumentError(
            f"Invalid JSON in {kind} file {path}: line {e.lineno}, column {e.colno}: {e.msg}"
        ) from e
    except OSError as e:
        raise DocumentError(f"Cannot read {kind} file {path}: {e}") from e

    shared_logger.log(f"{CLASS_PREFIX_MESSAGE} [{LogLevel.INFO.name}] Loaded {kind} from {path}")
    return document


def _parse_enum(enum_cls, raw, where):
    try:
        return enum_by_name(enum_cls, raw)
    except ValueError as e:
        raise DocumentError(f"{where}: {e}") from e


def parse_cell(raw, where: str):
    """Number -> Numeric, string -> Label, [l, m, u] -> FuzzyTriple."""
    if isinstance(raw, bool):
        raise DocumentError(f"{where}: booleans are not performance values")
    if isinstance(raw, (int, float)):
        return Numeric(float(raw))
    if isinstance(raw, str):
        return Label(raw)
    if isinstance(raw, list) and len(raw) == 3 and all(
        isinstance(v, (int, float)) and not isinstance(v, bool) for v in raw
    ):
        return FuzzyTriple(*(float(v) for v in raw))
    raise DocumentError(f"{where}: cannot read performance value {raw!r}")


def _parse_number(raw, where, cast=float):
    if isinstance(raw, bool):
        raise DocumentError(f"{where}: expected a number, got {raw!r}")
    try:
        return cast(raw)
    except (TypeError, ValueError) as e:
        raise DocumentError(f"{where}: expected a number, got {raw!r}") from e


def _parse_list(raw, where):
    if not isinstance(raw, list):
        raise DocumentError(f"{where} must be a list, got {type(raw).__name__}")
    return raw


def _parse_flag(raw, where):
    if raw is not None and not isinstance(raw, bool):
        raise DocumentError(f"{where}: expected true, false or null, got {raw!r}")
    return raw


def _parse_criterion(raw, index) -> Criterion:
    if isinstance(raw, str):
        raw = {"name": raw}
    if not isinstance(raw, dict) or "name" not in raw:
        raise DocumentError(f"criteria[{index}] needs at least a name")
    scale = raw.get("scale")
    if scale is not None:
        _parse_list(scale, f"criterion '{raw['name']}' scale")
    return Criterion(
        name=str(raw["name"]),
        direction=_parse_enum(Direction, raw.get("direction", "maximize"), f"criterion '{raw['name']}'"),
        data_type=_parse_enum(DataType, raw.get("data_type", "quantitative"), f"criterion '{raw['name']}'"),
        scale=None if scale is None else tuple(str(s) for s in scale),
        weight=_parse_number(raw.get("weight", 1.0), f"criterion '{raw['name']}' weight"),
    )


def parse_situation(document) -> SituationDocument:
    """
    @brief Build a decision situation from its JSON form (not yet validated).
    @exception DocumentError on missing or malformed fields
    """
    if not isinstance(document, dict):
        raise DocumentError("A situation document must be a JSON object")
    for key in ("problem", "alternatives", "criteria", "performance"):
        if key not in document:
            raise DocumentError(f"Situation document misses field '{key}'")

    alternatives = tuple(str(a) for a in _parse_list(document["alternatives"], "'alternatives'"))
    criteria = [
        _parse_criterion(c, i) for i, c in enumerate(_parse_list(document["criteria"], "'criteria'"))
    ]

    raw_rows = document["performance"]
    if isinstance(raw_rows, dict):
        missing = [a for a in alternatives if a not in raw_rows]
        if missing:
            raise DocumentError(f"No performance row for {', '.join(missing)}")
        raw_rows = [raw_rows[a] for a in alternatives]
    if not isinstance(raw_rows, list):
        raise DocumentError("'performance' must be an object keyed by alternative or a list of rows")
    performance = tuple(
        tuple(
            parse_cell(cell, f"performance row {i + 1}")
            for cell in _parse_list(row, f"performance row {i + 1}")
        )
        for i, row in enumerate(raw_rows)
    )

    weighting_source = _parse_enum(
        WeightingSource, document.get("weighting_source", "direct"), "weighting_source"
    )
    pairwise = document.get("criteria_pairwise")
    if pairwise is not None:
        try:
            weights, _ = ahp_priorities(PairwiseMatrix(pairwise))
        except (McdmError, TypeError, ValueError) as e:
            raise DocumentError(f"criteria_pairwise: {e}") from e
        if len(weights) != len(criteria):
            raise DocumentError(
                f"criteria_pairwise has order {len(weights)} for {len(criteria)} criteria"
            )
        criteria = [
            Criterion(c.name, c.direction, c.data_type, c.scale, float(w))
            for c, w in zip(criteria, weights)
        ]
        weighting_source = WeightingSource.PAIRWISE

    categories = document.get("sorting_categories")
    operations = document.get("investigation")
    situation = DecisionSituation(
        problem=_parse_enum(ProblemKind, document["problem"], "problem"),
        alternatives=alternatives,
        criteria=tuple(criteria),
        performance=performance,
        alternatives_nature=_parse_enum(
            AlternativesNature, document.get("alternatives_nature", "discrete"), "alternatives_nature"
        ),
        incompatibility_present=_parse_flag(document.get("incompatibility_present"), "incompatibility_present"),
        decision_maker_count=_parse_number(
            document.get("decision_maker_count", 1), "decision_maker_count", int
        ),
        sorting_categories=None
        if categories is None
        else tuple(str(c) for c in _parse_list(categories, "'sorting_categories'")),
        weighting_source=weighting_source,
        name=str(document.get("name", "")),
    )
    return SituationDocument(
        situation=situation,
        operations=None
        if operations is None
        else frozenset(
            _parse_enum(InvestigationOperation, op, "investigation")
            for op in _parse_list(operations, "'investigation'")
        ),
        description=str(document.get("description", "")),
    )


def load_situation(path) -> SituationDocument:
    return parse_situation(load_json_document(path, "situation"))


def load_usage(path) -> UsagePreferences:
    document = load_json_document(path, "usage")
    if not isinstance(document, dict):
        raise DocumentError("A usage document must be a JSON object")
    try:
        return UsagePreferences.from_document(document)
    except ValueError as e:
        raise DocumentError(f"Usage document: {e}") from e


def load_l2_weights(path) -> Dict[str, float]:
    document = load_json_document(path, "weights")
    if not isinstance(document, dict):
        raise DocumentError("A weights document maps L2 attribute names to numbers")
    weights = document.get("weights", document)
    if not isinstance(weights, dict):
        raise DocumentError("'weights' must map L2 attribute names to numbers")
    return dict(weights)


def load_method_config(path=None, defaults=None) -> MethodConfig:
    """
    @brief Method configuration from a file, layered over settings defaults.
    @param path Optional JSON file; defaults only when None
    """
    document = {} if path is None else load_json_document(path, "method config")
    if not isinstance(document, dict):
        raise DocumentError("A method config document must be a JSON object")
    try:
        return MethodConfig.from_document(document, defaults)
    except (McdmError, TypeError, ValueError) as e:
        if isinstance(e, DocumentError):
            raise
        raise DocumentError(f"Method config: {e}") from e

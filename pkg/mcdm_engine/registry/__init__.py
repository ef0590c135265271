"""
Method registry: interfaces of the MC method families, requirement matching
and the three selection strategies (search, weighting, experience).
"""

from .experience_store import (
    ExperienceRecord,
    ExperienceStore,
    canonical_fingerprint,
    record_experience,
    select_by_experience,
)
from .interfaces import (
    AHP,
    ANY,
    FUZZY,
    MAUT,
    OUTRANKING,
    WEIGHTING,
    MethodInterface,
    MethodRegistry,
    Wildcard,
    builtin_interfaces,
    fuzzy_interface,
    load_registry_file,
)
from .matcher import SelectionReport, SelectionStrategy, match_methods, satisfies
from .strategies import (
    WeightedSelection,
    parse_l2_weights,
    rank_by_weighting,
    select_by_weighting,
)

__all__ = [
    "AHP",
    "ANY",
    "FUZZY",
    "MAUT",
    "OUTRANKING",
    "WEIGHTING",
    "ExperienceRecord",
    "ExperienceStore",
    "MethodInterface",
    "MethodRegistry",
    "SelectionReport",
    "SelectionStrategy",
    "WeightedSelection",
    "Wildcard",
    "builtin_interfaces",
    "canonical_fingerprint",
    "fuzzy_interface",
    "load_registry_file",
    "match_methods",
    "parse_l2_weights",
    "rank_by_weighting",
    "record_experience",
    "satisfies",
    "select_by_experience",
    "select_by_weighting",
]

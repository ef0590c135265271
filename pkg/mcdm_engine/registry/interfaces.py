"""
MC method interfaces and the method registry.

An interface lists the situation characteristics under which a method family
applies. The builtin registry encodes the five families; cells a family
leaves open ("Different" for the fuzzy family) are wildcards.
"""

import hashlib
import json
from dataclasses import dataclass, field
from enum import Enum, IntEnum
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, Iterator, Tuple, Union

from ..core_model import AlternativesNature, DataType, ProblemKind
from ..exceptions import DocumentError, InvalidInterface, UnknownMethod
from ..requirements import CountBucket, Easiness, Notation, SkillLevel, WeightingType, enum_by_name
from ..shared_logger import LogLevel, shared_logger

CLASS_PREFIX_MESSAGE = "[MethodRegistry]"


class Wildcard(Enum):
    ANY = "any"


ANY = Wildcard.ANY

MAUT = "MAUT"
AHP = "AHP"
OUTRANKING = "Outranking"
WEIGHTING = "Weighting"
FUZZY = "Fuzzy"

BUNDLED_EXTENSIONS_DIR = Path(__file__).resolve().parent.parent / "fixtures" / "registry"


@dataclass(frozen=True)
class MethodInterface:
    method_id: str
    problems: FrozenSet[ProblemKind]
    count_buckets: Union[FrozenSet[CountBucket], Wildcard]
    natures: Union[FrozenSet[AlternativesNature], Wildcard]
    incompatibility_support: Union[bool, Wildcard]
    data_types: Union[FrozenSet[DataType], Wildcard]
    measure_scale_support: Union[bool, Wildcard]
    weighting_types: Union[FrozenSet[WeightingType], Wildcard]
    tool_available: Union[bool, Wildcard]
    notation: Union[Notation, Wildcard]
    easiness: Easiness
    skill_demand: SkillLevel
    description: str = field(default="", compare=False)

    def __post_init__(self):
        if not self.method_id:
            raise InvalidInterface("Method interfaces need a method_id")
        if not self.problems:
            raise InvalidInterface(f"Interface '{self.method_id}' supports no problem kind")
        for name in ("count_buckets", "natures", "data_types", "weighting_types"):
            value = getattr(self, name)
            if value is not ANY and not value:
                raise InvalidInterface(
                    f"Interface '{self.method_id}': '{name}' must be 'any' or a nonempty set"
                )

    def to_document(self) -> dict:
        return {
            "method_id": self.method_id,
            "problems": _plain(self.problems),
            "count_buckets": _plain(self.count_buckets),
            "natures": _plain(self.natures),
            "incompatibility_support": _plain(self.incompatibility_support),
            "data_types": _plain(self.data_types),
            "measure_scale_support": _plain(self.measure_scale_support),
            "weighting_types": _plain(self.weighting_types),
            "tool_available": _plain(self.tool_available),
            "notation": _plain(self.notation),
            "easiness": _plain(self.easiness),
            "skill_demand": _plain(self.skill_demand),
        }

    @classmethod
    def from_document(cls, document: dict) -> "MethodInterface":
        def members(key, enum_cls, wildcard=True):
            raw = document.get(key)
            if wildcard and _is_any(raw):
                return ANY
            if not isinstance(raw, list):
                expected = "a list or \"any\"" if wildcard else "a list"
                raise InvalidInterface(f"'{key}' must be {expected}")
            return frozenset(enum_by_name(enum_cls, item) for item in raw)

        def flag(key):
            raw = document.get(key)
            if _is_any(raw):
                return ANY
            if not isinstance(raw, bool):
                raise InvalidInterface(f"'{key}' must be true, false or \"any\"")
            return raw

        try:
            notation = document.get("notation")
            return cls(
                method_id=str(document["method_id"]),
                problems=members("problems", ProblemKind, wildcard=False),
                count_buckets=members("count_buckets", CountBucket),
                natures=members("natures", AlternativesNature),
                incompatibility_support=flag("incompatibility_support"),
                data_types=members("data_types", DataType),
                measure_scale_support=flag("measure_scale_support"),
                weighting_types=members("weighting_types", WeightingType),
                tool_available=flag("tool_available"),
                notation=ANY if _is_any(notation) else enum_by_name(Notation, notation),
                easiness=enum_by_name(Easiness, document["easiness"]),
                skill_demand=enum_by_name(SkillLevel, document["skill_demand"]),
                description=str(document.get("description", "")),
            )
        except KeyError as e:
            raise InvalidInterface(f"Interface document misses field {e}") from e
        except ValueError as e:
            raise InvalidInterface(str(e)) from e


class MethodRegistry:
    """
    Ordered, immutable collection of method interfaces.

    Declaration order is significant: it breaks weighting ties and orders the
    selection matrix columns.
    """

    def __init__(self, interfaces: Iterable[MethodInterface] = ()):
        self._interfaces: Dict[str, MethodInterface] = {}
        for interface in interfaces:
            self._interfaces[interface.method_id] = interface

    def __iter__(self) -> Iterator[MethodInterface]:
        return iter(self._interfaces.values())

    def __len__(self) -> int:
        return len(self._interfaces)

    def __contains__(self, method_id) -> bool:
        return method_id in self._interfaces

    def __eq__(self, other) -> bool:
        return isinstance(other, MethodRegistry) and list(self) == list(other)

    @property
    def method_ids(self) -> Tuple[str, ...]:
        return tuple(self._interfaces)

    def lookup(self, method_id: str) -> MethodInterface:
        try:
            return self._interfaces[method_id]
        except KeyError:
            raise UnknownMethod(
                f"Method '{method_id}' is not registered (known: {', '.join(self.method_ids)})"
            ) from None

    def extended(self, other: Iterable[MethodInterface]) -> "MethodRegistry":
        """
        @brief New registry with other's interfaces added.

        Entries sharing a method_id replace the existing interface in place;
        new entries are appended. Existing methods are never removed.
        """
        merged = MethodRegistry(self)
        for interface in other:
            merged._interfaces[interface.method_id] = interface
        return merged

    def subset(self, method_ids: Iterable[str]) -> "MethodRegistry":
        wanted = set(method_ids)
        for method_id in wanted:
            self.lookup(method_id)
        return MethodRegistry(i for i in self if i.method_id in wanted)

    def to_document(self) -> dict:
        return {"interfaces": [interface.to_document() for interface in self]}

    def snapshot_id(self) -> str:
        canonical = json.dumps(self.to_document(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:12]

    @classmethod
    def from_document(cls, document) -> "MethodRegistry":
        entries = document.get("interfaces") if isinstance(document, dict) else document
        if not isinstance(entries, list):
            raise InvalidInterface("A registry document holds an 'interfaces' list")
        return cls(MethodInterface.from_document(entry) for entry in entries)


def builtin_interfaces(include_fuzzy: bool = True) -> MethodRegistry:
    """
    @brief The five method families with their interface characteristics.
    @param include_fuzzy False yields the four crisp families only
    """
    every_count = frozenset(CountBucket)
    discrete = frozenset({AlternativesNature.DISCRETE})
    mixed_data = frozenset({DataType.QUANTITATIVE, DataType.QUALITATIVE})
    choice_ranking = frozenset({ProblemKind.CHOICE, ProblemKind.RANKING})

    interfaces = [
        MethodInterface(
            method_id=MAUT,
            problems=choice_ranking,
            count_buckets=every_count,
            natures=discrete,
            incompatibility_support=True,
            data_types=mixed_data,
            measure_scale_support=True,
            weighting_types=frozenset({WeightingType.SIMPLE}),
            tool_available=False,
            notation=Notation.UTILITY_FUNCTION,
            easiness=Easiness.DIFFICULT,
            skill_demand=SkillLevel.STRONG,
            description="Multi-attribute utility theory",
        ),
        MethodInterface(
            method_id=AHP,
            problems=choice_ranking,
            count_buckets=frozenset({CountBucket.SMALL}),
            natures=discrete,
            incompatibility_support=False,
            data_types=mixed_data,
            measure_scale_support=False,
            weighting_types=frozenset({WeightingType.INTERDEPENDENT}),
            tool_available=True,
            notation=Notation.WEIGHTED_SUM,
            easiness=Easiness.EASY,
            skill_demand=SkillLevel.MEDIUM,
            description="Analytic hierarchy process",
        ),
        MethodInterface(
            method_id=OUTRANKING,
            problems=frozenset(ProblemKind),
            count_buckets=every_count,
            natures=discrete,
            incompatibility_support=True,
            data_types=mixed_data,
            measure_scale_support=True,
            weighting_types=frozenset({WeightingType.INTERDEPENDENT}),
            tool_available=True,
            notation=Notation.TEXTUAL,
            easiness=Easiness.MEDIUM,
            skill_demand=SkillLevel.STRONG,
            description="Outranking methods (PROMETHEE I/II)",
        ),
        MethodInterface(
            method_id=WEIGHTING,
            problems=choice_ranking,
            count_buckets=every_count,
            natures=discrete,
            incompatibility_support=False,
            data_types=frozenset({DataType.QUANTITATIVE}),
            measure_scale_support=False,
            weighting_types=frozenset({WeightingType.SIMPLE}),
            tool_available=True,
            notation=Notation.WEIGHTED_SUM,
            easiness=Easiness.EASY,
            skill_demand=SkillLevel.WEAK,
            description="Simple additive weighting",
        ),
    ]
    if include_fuzzy:
        interfaces.append(fuzzy_interface())
    return MethodRegistry(interfaces)


def fuzzy_interface() -> MethodInterface:
    """Fuzzy family: every cell depending on the base method is a wildcard."""
    return MethodInterface(
        method_id=FUZZY,
        problems=frozenset(ProblemKind),
        count_buckets=ANY,
        natures=ANY,
        incompatibility_support=ANY,
        data_types=ANY,
        measure_scale_support=ANY,
        weighting_types=ANY,
        tool_available=ANY,
        notation=ANY,
        easiness=Easiness.DIFFICULT,
        skill_demand=SkillLevel.STRONG,
        description="Fuzzy MC methods (family level)",
    )


def load_registry_file(path) -> MethodRegistry:
    """
    @brief Load a registry (or registry override) document.
    @param path JSON file, or the name of a bundled extension such as "fuzzy"
    """
    path = resolve_registry_path(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            document = json.load(f)
    except FileNotFoundError as e:
        raise DocumentError(f"Registry file not found: {path}") from e
    except (OSError, json.JSONDecodeError) as e:
        shared_logger.log(
            f"{CLASS_PREFIX_MESSAGE} [{LogLevel.CRITICAL.name}] Cannot read registry file {path}: {e}"
        )
        raise DocumentError(f"Cannot read registry file {path}: {e}") from e

    registry = MethodRegistry.from_document(document)
    shared_logger.log(
        f"{CLASS_PREFIX_MESSAGE} [{LogLevel.INFO.name}] Loaded {len(registry)} interface(s) from {path}"
    )
    return registry


def resolve_registry_path(source) -> Path:
    """Bundled extension names resolve to fixtures/registry/<name>.json."""
    candidate = Path(source)
    if candidate.suffix == "" and not candidate.exists():
        bundled = BUNDLED_EXTENSIONS_DIR / f"{source}.json"
        if bundled.exists():
            return bundled
    return candidate


def _is_any(raw) -> bool:
    return isinstance(raw, str) and raw.strip().lower() in ("any", "different")


def _plain(value):
    if value is ANY:
        return ANY.value
    if isinstance(value, bool):
        return value
    if isinstance(value, IntEnum):
        return value.name.lower()
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, frozenset):
        return sorted(_plain(v) for v in value)
    return value

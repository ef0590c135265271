"""
Run plans, flashback actions and run reports.
"""

from dataclasses import dataclass, field
from enum import IntEnum
from pathlib import Path
from typing import List, Optional, Tuple, Union

from ..exceptions import DocumentError
from ..methods import DecisionResult, ValidationVerdict
from ..registry import (
    MethodRegistry,
    SelectionReport,
    SelectionStrategy,
    WeightedSelection,
    load_registry_file,
)
from ..requirements import MethodRequirements, RequirementAttribute, enum_by_name


class ExitCode(IntEnum):
    SUCCESS = 0
    NO_METHOD = 2
    UNRESOLVABLE_TIE = 3
    VALIDATION_UNRESOLVED = 4
    INPUT_FAILURE = 5


@dataclass(frozen=True)
class RegistrySource:
    """Builtin panel when path is None, otherwise a registry document."""

    path: Optional[Path] = None

    @property
    def is_builtin(self) -> bool:
        return self.path is None

    def describe(self) -> str:
        return "builtin" if self.is_builtin else f"file:{self.path}"


# === Flashback actions ===
@dataclass(frozen=True)
class RelaxRequirement:
    """Remove one expressed requirement and re-match."""

    attribute: RequirementAttribute

    def apply(self, reqs: MethodRequirements, registry: MethodRegistry):
        return reqs.without(self.attribute), registry

    def describe(self) -> str:
        return f"relax:{self.attribute.value}"


@dataclass(frozen=True)
class ExtendRegistry:
    """Add the interfaces of a registry document (or bundled extension) and re-match."""

    source: str

    def apply(self, reqs: MethodRequirements, registry: MethodRegistry):
        return reqs, registry.extended(load_registry_file(self.source))

    def describe(self) -> str:
        return f"extend:{self.source}"


FlashbackAction = Union[RelaxRequirement, ExtendRegistry]


def parse_flashback(text: str) -> FlashbackAction:
    """
    @brief Parse "relax:<attribute>" or "extend:<registry file or bundled name>".
    """
    kind, _, argument = str(text).partition(":")
    kind = kind.strip().lower()
    argument = argument.strip()
    if not argument:
        raise DocumentError(f"Flashback action '{text}' needs an argument after ':'")
    if kind == "relax":
        try:
            return RelaxRequirement(enum_by_name(RequirementAttribute, argument))
        except ValueError as e:
            raise DocumentError(f"Flashback action '{text}': {e}") from e
    if kind == "extend":
        return ExtendRegistry(argument)
    raise DocumentError(f"Unknown flashback action '{text}' (expected relax:... or extend:...)")


@dataclass(frozen=True)
class RunPlan:
    situation_path: Path
    output_dir: Path
    usage_path: Optional[Path] = None
    registry_source: RegistrySource = RegistrySource()
    strategy: SelectionStrategy = SelectionStrategy.SEARCH
    weights_path: Optional[Path] = None
    flashback_policy: Tuple[FlashbackAction, ...] = ()
    method_config_path: Optional[Path] = None
    experience_path: Optional[Path] = None
    record_experience: bool = False

    def to_document(self) -> dict:
        def text(path):
            return None if path is None else str(path)

        return {
            "situation": text(self.situation_path),
            "usage": text(self.usage_path),
            "registry": self.registry_source.describe(),
            "strategy": self.strategy.value,
            "weights": text(self.weights_path),
            "flashback_policy": [a.describe() for a in self.flashback_policy],
            "method_config": text(self.method_config_path),
            "record_experience": self.record_experience,
        }


# === Report ===
@dataclass(frozen=True)
class Iteration:
    registry_snapshot: str
    attributes: Tuple[RequirementAttribute, ...]
    candidates: Tuple[str, ...]
    action: Optional[str] = None

    def to_document(self) -> dict:
        return {
            "registry_snapshot": self.registry_snapshot,
            "attributes": [a.value for a in self.attributes],
            "candidates": list(self.candidates),
            "action": self.action,
        }


@dataclass(frozen=True)
class MethodAttempt:
    method_id: str
    outcome: str
    detail: str = ""

    def to_document(self) -> dict:
        return {"method": self.method_id, "outcome": self.outcome, "detail": self.detail}


@dataclass
class RunReport:
    exit_code: ExitCode = ExitCode.SUCCESS
    derived_requirements: Optional[MethodRequirements] = None
    selection_report: Optional[SelectionReport] = None
    weighted_selection: Optional[WeightedSelection] = None
    iterations: List[Iteration] = field(default_factory=list)
    attempts: List[MethodAttempt] = field(default_factory=list)
    applied_method: Optional[str] = None
    result: Optional[DecisionResult] = None
    validation_verdict: Optional[ValidationVerdict] = None
    error: Optional[str] = None
    plan: Optional[RunPlan] = None

    @property
    def chosen_method(self) -> Optional[str]:
        return None if self.selection_report is None else self.selection_report.chosen

    def to_document(self) -> dict:
        registry = None
        if self.selection_report is not None:
            registry = {
                "snapshot_id": self.selection_report.registry.snapshot_id(),
                "document": self.selection_report.registry.to_document(),
            }
        return {
            "exit_code": int(self.exit_code),
            "plan": None if self.plan is None else self.plan.to_document(),
            "derived_requirements": None
            if self.derived_requirements is None
            else self.derived_requirements.to_document(),
            "selection": None
            if self.selection_report is None
            else self.selection_report.to_document(),
            "weighted_selection": None
            if self.weighted_selection is None
            else self.weighted_selection.to_document(),
            "iterations": [i.to_document() for i in self.iterations],
            "attempts": [a.to_document() for a in self.attempts],
            "applied_method": self.applied_method,
            "result": None if self.result is None else self.result.to_document(),
            "validation": None
            if self.validation_verdict is None
            else self.validation_verdict.to_document(),
            "registry": registry,
            "error": self.error,
        }

"""
Integration Orchestrator

Runs the four steps of the integration process (identify requirements,
specify requirements, select a method, apply it) for one run plan,
including flashbacks to earlier steps.
"""

# === System Imports ===
from typing import Dict, List, Optional

# === Custom Imports ===
from ..core_model import validate_situation
from ..core_state import PipelineStep
from ..error_handler import ErrorHandler
from ..exceptions import DocumentError, McdmError, MethodError, TieNotResolvable
from ..methods import MethodConfig, apply_method, validate_result
from ..registry import (
    ExperienceStore,
    MethodRegistry,
    SelectionReport,
    SelectionStrategy,
    builtin_interfaces,
    load_registry_file,
    match_methods,
    rank_by_weighting,
    record_experience,
    select_by_experience,
)
from ..requirements import MethodRequirements, UsagePreferences, derive_requirements
from ..settings_loader import EngineSettings
from ..shared_logger import LogLevel, shared_logger
from .documents import load_l2_weights, load_method_config, load_situation, load_usage
from .report_writer import write_run_outputs
from .run_plan import ExitCode, Iteration, MethodAttempt, RunPlan, RunReport


class IntegrationOrchestrator:
    """
    Coordinates one run: loads the plan's documents, derives requirements,
    matches them (with flashbacks while no method matches), selects a
    method, applies it and validates the result.
    """

    def __init__(self, plan: RunPlan, settings: Optional[EngineSettings] = None):
        self.class_prefix_message = "[Pipeline]"
        self.plan = plan
        self.settings = settings or EngineSettings().load()
        self.report = RunReport(plan=plan)

        self.situation = None
        self.operations = None
        self.usage = UsagePreferences()
        self.l2_weights: Dict[str, float] = {}
        self.config: Optional[MethodConfig] = None
        self.registry: Optional[MethodRegistry] = None

    # ===============================
    # Entry point
    # ===============================

    def run(self) -> RunReport:
        self._log(
            f"Run started for {self.plan.situation_path} ({self.plan.strategy.value} strategy)"
        )
        try:
            self._identify_requirements()
            reqs = self._specify_requirements()
        except McdmError as e:
            ErrorHandler.log_error(self.class_prefix_message, e, context="loading inputs")
            return self._finish(ExitCode.INPUT_FAILURE, str(e))

        report = self._match_with_flashbacks(reqs)
        if not report.candidates:
            return self._finish(
                ExitCode.NO_METHOD,
                "No registered method matches the requirements after all flashbacks",
            )

        try:
            ordered = self._select_method(reqs, report)
        except TieNotResolvable as e:
            ErrorHandler.log_error(self.class_prefix_message, e, LogLevel.WARNING, "selecting a method")
            return self._finish(ExitCode.UNRESOLVABLE_TIE, str(e))
        except McdmError as e:
            ErrorHandler.log_error(self.class_prefix_message, e, context="selecting a method")
            return self._finish(ExitCode.INPUT_FAILURE, str(e))

        return self._apply_method(reqs, ordered)

    # ===============================
    # Step 1: identify requirements
    # ===============================

    def _identify_requirements(self):
        document = load_situation(self.plan.situation_path)
        self.situation = validate_situation(document.situation)
        self.operations = document.operations

        if self.plan.usage_path is not None:
            self.usage = load_usage(self.plan.usage_path)
        if self.plan.weights_path is not None:
            self.l2_weights = load_l2_weights(self.plan.weights_path)
        elif self.plan.strategy == SelectionStrategy.WEIGHTED:
            raise DocumentError("The weighted strategy needs an L2 weights document")

        self.config = load_method_config(
            self.plan.method_config_path, self.settings.method_defaults()
        )
        if self.plan.registry_source.is_builtin:
            self.registry = builtin_interfaces(include_fuzzy=False)
        else:
            self.registry = load_registry_file(self.plan.registry_source.path)

    # ===============================
    # Step 2: specify requirements
    # ===============================

    def _specify_requirements(self) -> MethodRequirements:
        reqs = derive_requirements(
            self.situation,
            self.usage,
            self.settings.count_thresholds,
            self.operations,
        )
        self.report.derived_requirements = reqs
        return reqs

    # ===============================
    # Step 3: select a method
    # ===============================

    def _match_with_flashbacks(self, reqs: MethodRequirements) -> SelectionReport:
        registry = self.registry
        report = match_methods(reqs, registry)
        self._record_iteration(report, None)

        pending = list(self.plan.flashback_policy)
        while not report.candidates and pending:
            action = pending.pop(0)
            self._log(f"No candidate method; flashback {action.describe()}", LogLevel.WARNING)
            try:
                reqs, registry = action.apply(reqs, registry)
            except McdmError as e:
                ErrorHandler.log_error(
                    self.class_prefix_message, e, LogLevel.WARNING, f"flashback {action.describe()}"
                )
                continue
            report = match_methods(reqs, registry)
            self._record_iteration(report, action.describe())

        self.report.selection_report = report
        return report

    def _record_iteration(self, report: SelectionReport, action: Optional[str]):
        self.report.iterations.append(
            Iteration(
                registry_snapshot=report.registry.snapshot_id(),
                attributes=report.attributes,
                candidates=report.candidates,
                action=action,
            )
        )
        self._log(
            f"Iteration {len(self.report.iterations)}: candidates "
            f"{', '.join(report.candidates) or 'none'}"
        )

    def _select_method(self, reqs: MethodRequirements, report: SelectionReport) -> List[str]:
        """
        @brief Choose a method and order the fallbacks.
        @return Candidate ids, chosen first
        """
        candidates = list(report.candidates)

        if self.plan.strategy == SelectionStrategy.EXPERIENCE:
            store = ExperienceStore(self._experience_path())
            remembered = select_by_experience(self.report.derived_requirements, store)
            if remembered in candidates:
                self.report.selection_report = report.with_choice(
                    remembered, SelectionStrategy.EXPERIENCE
                )
                return [remembered] + [m for m in candidates if m != remembered]
            if remembered is not None:
                self._log(
                    f"Remembered method '{remembered}' is not a current candidate; searching instead",
                    LogLevel.WARNING,
                )

        if len(candidates) == 1:
            self.report.selection_report = report.with_choice(
                candidates[0], SelectionStrategy.SEARCH
            )
            return candidates

        weighted = rank_by_weighting(report, self.l2_weights)
        self.report.weighted_selection = weighted
        self.report.selection_report = report.with_choice(
            weighted.chosen, SelectionStrategy.WEIGHTED
        )
        declaration = {m: i for i, m in enumerate(report.methods)}
        rest = sorted(
            (m for m in candidates if m != weighted.chosen),
            key=lambda m: (-weighted.scores[m], declaration[m]),
        )
        return [weighted.chosen] + rest

    # ===============================
    # Step 4: apply the method
    # ===============================

    def _apply_method(self, reqs: MethodRequirements, ordered: List[str]) -> RunReport:
        for method_id in ordered:
            try:
                result = apply_method(self.situation, method_id, self.config)
            except MethodError as e:
                ErrorHandler.log_error(
                    self.class_prefix_message, e, LogLevel.WARNING, f"applying {method_id}"
                )
                self.report.attempts.append(
                    MethodAttempt(method_id, "error", f"{type(e).__name__}: {e}")
                )
                continue

            verdict = validate_result(result, self.situation, reqs)
            self.report.applied_method = method_id
            self.report.result = result
            self.report.validation_verdict = verdict
            if verdict.ok:
                self.report.attempts.append(MethodAttempt(method_id, "ok"))
                self._remember(method_id)
                return self._finish(ExitCode.SUCCESS)

            self.report.attempts.append(
                MethodAttempt(method_id, f"flashback:{verdict.flashback.value}", verdict.reason)
            )
            if verdict.flashback != PipelineStep.APPLY_METHOD:
                break

        return self._finish(
            ExitCode.VALIDATION_UNRESOLVED, "No candidate method produced a valid result"
        )

    def _remember(self, method_id: str):
        if not self.plan.record_experience:
            return
        with ErrorHandler.catch_and_log(self.class_prefix_message, context="recording experience"):
            record_experience(
                self.report.derived_requirements,
                method_id,
                ExperienceStore(self._experience_path()),
                registry=self.report.selection_report.registry,
            )

    # ===============================
    # Helpers
    # ===============================

    def _experience_path(self):
        return self.plan.experience_path or self.settings.experience_path

    def _finish(self, exit_code: ExitCode, error: Optional[str] = None) -> RunReport:
        self.report.exit_code = exit_code
        self.report.error = error
        try:
            write_run_outputs(self.report, self.plan.output_dir)
        except DocumentError as e:
            ErrorHandler.log_error(self.class_prefix_message, e, context="writing outputs")
            self.report.exit_code = ExitCode.INPUT_FAILURE
            self.report.error = str(e)
        level = LogLevel.INFO if self.report.exit_code == ExitCode.SUCCESS else LogLevel.WARNING
        self._log(f"Run finished with exit code {int(self.report.exit_code)}", level)
        return self.report

    def _log(self, message: str, level: LogLevel = LogLevel.INFO):
        shared_logger.log(f"{self.class_prefix_message} [{level.name}] {message}")


def run(plan: RunPlan, settings: Optional[EngineSettings] = None) -> RunReport:
    """
    @brief Execute a run plan end to end.
    @return RunReport whose exit_code tells how the run ended
    """
    return IntegrationOrchestrator(plan, settings).run()

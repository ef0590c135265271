"""
End-to-end orchestration: input documents, run plans, the integration run
and its report files.
"""

from .documents import (
    SituationDocument,
    load_l2_weights,
    load_method_config,
    load_situation,
    load_usage,
    parse_situation,
)
from .orchestrator import IntegrationOrchestrator, run
from .report_writer import emit_matrix, render_report, write_run_outputs
from .run_plan import (
    ExitCode,
    ExtendRegistry,
    FlashbackAction,
    Iteration,
    MethodAttempt,
    RegistrySource,
    RelaxRequirement,
    RunPlan,
    RunReport,
    parse_flashback,
)

__all__ = [
    "ExitCode",
    "ExtendRegistry",
    "FlashbackAction",
    "IntegrationOrchestrator",
    "Iteration",
    "MethodAttempt",
    "RegistrySource",
    "RelaxRequirement",
    "RunPlan",
    "RunReport",
    "SituationDocument",
    "emit_matrix",
    "load_l2_weights",
    "load_method_config",
    "load_situation",
    "load_usage",
    "parse_flashback",
    "parse_situation",
    "render_report",
    "run",
    "write_run_outputs",
]

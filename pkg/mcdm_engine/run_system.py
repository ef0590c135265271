#!/usr/bin/env python3
"""
Decision Engine CLI

Command-line entry point for DM-point screening, requirement derivation,
method selection, method application and full integration runs. Results are
printed as JSON on stdout; diagnostics go to the shared logger (stderr).
"""

import argparse
import json
import sys
from pathlib import Path

from .core_model import (
    DmPointScreen,
    GuidanceForm,
    classify_typology,
    screen_dm_point,
    validate_situation,
)
from .exceptions import (
    DocumentError,
    McdmError,
    MethodError,
    NoCandidates,
    TieNotResolvable,
)
from .methods import apply_method
from .pipeline import (
    ExitCode,
    RegistrySource,
    RunPlan,
    emit_matrix,
    load_l2_weights,
    load_method_config,
    load_situation,
    load_usage,
    parse_flashback,
    run,
)
from .registry import (
    ExperienceStore,
    SelectionStrategy,
    builtin_interfaces,
    load_registry_file,
    match_methods,
    rank_by_weighting,
    record_experience,
    select_by_experience,
)
from .requirements import InvestigationOperation, derive_requirements, enum_by_name
from .settings_loader import EngineSettings
from .shared_logger import LogLevel, shared_logger

CLASS_PREFIX_MESSAGE = "[Cli]"


def print_json(document):
    print(json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False))


# ===============================
# Shared input helpers
# ===============================


def load_requirements(args, settings):
    """Load and validate the situation, then derive its requirements."""
    document = load_situation(args.situation)
    situation = validate_situation(document.situation)
    usage = load_usage(args.usage) if getattr(args, "usage", None) else None

    operations = document.operations
    if getattr(args, "operations", None):
        try:
            operations = frozenset(
                enum_by_name(InvestigationOperation, op) for op in args.operations
            )
        except ValueError as e:
            raise DocumentError(str(e)) from e

    reqs = derive_requirements(situation, usage, settings.count_thresholds, operations)
    return situation, reqs


def load_panel(args):
    """Registry for select/matrix: builtin crisp panel or a file, plus extensions."""
    registry = (
        load_registry_file(args.registry)
        if getattr(args, "registry", None)
        else builtin_interfaces(include_fuzzy=False)
    )
    for extension in getattr(args, "registry_extension", None) or ():
        registry = registry.extended(load_registry_file(extension))
    return registry


# ===============================
# Subcommands
# ===============================


def cmd_screen(args, settings):
    verdict = screen_dm_point(
        DmPointScreen(
            guidance_form=GuidanceForm(args.guidance),
            offers_arguments=args.offers_arguments,
            offers_prioritization=args.offers_prioritization,
        )
    )
    print_json(
        {
            "is_dm_point": verdict.is_dm_point,
            "needs_criteria_definition": verdict.needs_criteria_definition,
        }
    )
    return 0


def cmd_typology(args, settings):
    verdict = classify_typology(args.criteria, args.decision_makers)
    print_json(
        {
            "criteria_axis": verdict.criteria_axis.value,
            "dm_axis": verdict.dm_axis.value,
            "mc_eligible": verdict.mc_eligible,
        }
    )
    return 0


def cmd_describe(args, settings):
    document = load_situation(args.situation)
    situation = validate_situation(document.situation)
    print_json(
        {
            "name": situation.name,
            "description": document.description,
            "problem": situation.problem.value,
            "alternatives": len(situation.alternatives),
            "decision_makers": situation.decision_maker_count,
            "weighting_source": situation.weighting_source.value,
            "criteria": [
                {
                    "name": c.name,
                    "direction": c.direction.value,
                    "data_type": c.data_type.value,
                    "weight": c.weight,
                    "scale": None if c.scale is None else list(c.scale),
                }
                for c in situation.criteria
            ],
        }
    )
    return 0


def cmd_derive(args, settings):
    _, reqs = load_requirements(args, settings)
    print_json(reqs.to_document())
    return 0


def cmd_select(args, settings):
    _, reqs = load_requirements(args, settings)
    report = match_methods(reqs, load_panel(args))
    document = {"selection": report.to_document(), "weighted_selection": None}

    if args.matrix_out:
        emit_matrix(report, args.matrix_out, full_grid=args.full_grid)

    if not report.candidates:
        print_json(document)
        return int(ExitCode.NO_METHOD)

    strategy = SelectionStrategy(args.strategy)
    if strategy == SelectionStrategy.EXPERIENCE:
        path = args.experience_path or settings.experience_path
        remembered = select_by_experience(reqs, ExperienceStore(path))
        if remembered in report.candidates:
            report = report.with_choice(remembered, SelectionStrategy.EXPERIENCE)

    # Several candidates left: weight the L2 attributes (no weights means a tie)
    if report.chosen is None:
        weighted = rank_by_weighting(report, load_l2_weights(args.weights) if args.weights else {})
        report = report.with_choice(weighted.chosen, SelectionStrategy.WEIGHTED)
        document["weighted_selection"] = weighted.to_document()

    document["selection"] = report.to_document()
    print_json(document)
    return 0


def cmd_apply(args, settings):
    document = load_situation(args.situation)
    config = load_method_config(args.config, settings.method_defaults())
    result = apply_method(document.situation, args.method, config)
    print_json(result.to_document())
    return 0


def cmd_run(args, settings):
    plan = RunPlan(
        situation_path=Path(args.situation),
        output_dir=Path(args.output_dir),
        usage_path=None if args.usage is None else Path(args.usage),
        registry_source=RegistrySource(None if args.registry is None else Path(args.registry)),
        strategy=SelectionStrategy(args.strategy),
        weights_path=None if args.weights is None else Path(args.weights),
        flashback_policy=tuple(parse_flashback(a) for a in args.flashback or ()),
        method_config_path=None if args.config is None else Path(args.config),
        experience_path=None if args.experience_path is None else Path(args.experience_path),
        record_experience=args.record_experience,
    )
    report = run(plan, settings)
    print_json(report.to_document())
    return int(report.exit_code)


def cmd_matrix(args, settings):
    _, reqs = load_requirements(args, settings)
    report = match_methods(reqs, load_panel(args))
    text = emit_matrix(report, args.output, full_grid=args.full_grid)
    if not args.output:
        sys.stdout.write(text)
    return 0


def cmd_experience(args, settings):
    store = ExperienceStore(args.path or settings.experience_path)
    if args.experience_command == "list":
        print_json(
            [
                {
                    "fingerprint": json.loads(r.fingerprint),
                    "method_id": r.chosen_method,
                    "timestamp": r.timestamp,
                }
                for r in store.records()
            ]
        )
        return 0

    _, reqs = load_requirements(args, settings)
    record_experience(reqs, args.method, store)
    print_json({"recorded": args.method, "path": str(store.path)})
    return 0


COMMANDS = {
    "screen": cmd_screen,
    "typology": cmd_typology,
    "describe": cmd_describe,
    "derive": cmd_derive,
    "select": cmd_select,
    "apply": cmd_apply,
    "run": cmd_run,
    "matrix": cmd_matrix,
    "experience": cmd_experience,
}


# ===============================
# Argument parsing
# ===============================


def _add_situation_inputs(parser, operations=True):
    parser.add_argument("situation", help="Situation document (JSON)")
    parser.add_argument("--usage", help="Usage preferences document (JSON)")
    if operations:
        parser.add_argument(
            "--operations",
            nargs="+",
            metavar="OPERATION",
            help="Investigation operations to perform (overrides the situation document)",
        )


def _add_panel_inputs(parser):
    parser.add_argument("--registry", help="Registry document replacing the builtin panel")
    parser.add_argument(
        "--registry-extension",
        action="append",
        metavar="SOURCE",
        help="Registry document or bundled extension name to add (repeatable)",
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mcdm_engine",
        description="Select and apply multicriteria decision-making methods",
    )
    parser.add_argument("--settings", help="Engine settings file (default: bundled settings)")
    parser.add_argument("--verbose", action="store_true", help="Log INFO messages to stderr")

    subparsers = parser.add_subparsers(dest="command", help="Command to execute")

    screen_parser = subparsers.add_parser("screen", help="Decide whether a task is a DM point")
    screen_parser.add_argument("--guidance", choices=[g.value for g in GuidanceForm], required=True)
    screen_parser.add_argument("--offers-arguments", action="store_true")
    screen_parser.add_argument("--offers-prioritization", action="store_true")

    typology_parser = subparsers.add_parser("typology", help="Classify on the criteria/DM axes")
    typology_parser.add_argument("--criteria", type=int, required=True)
    typology_parser.add_argument("--decision-makers", type=int, default=1)

    describe_parser = subparsers.add_parser("describe", help="Validate and summarize a situation")
    describe_parser.add_argument("situation", help="Situation document (JSON)")

    derive_parser = subparsers.add_parser("derive", help="Derive requirements for MC methods")
    _add_situation_inputs(derive_parser)

    strategies = [s.value for s in SelectionStrategy]
    select_parser = subparsers.add_parser("select", help="Match requirements against the registry")
    _add_situation_inputs(select_parser)
    _add_panel_inputs(select_parser)
    select_parser.add_argument("--strategy", choices=strategies, default="search")
    select_parser.add_argument("--weights", help="L2 attribute weights document (JSON)")
    select_parser.add_argument("--experience-path", help="Experience store (JSON lines)")
    select_parser.add_argument("--matrix-out", help="Also write the selection matrix here")
    select_parser.add_argument("--full-grid", action="store_true")

    apply_parser = subparsers.add_parser("apply", help="Apply one method to a situation")
    apply_parser.add_argument("situation", help="Situation document (JSON)")
    apply_parser.add_argument("--method", required=True, help="Method id, e.g. Weighting")
    apply_parser.add_argument("--config", help="Method configuration document (JSON)")

    run_parser = subparsers.add_parser("run", help="Run the whole integration process")
    _add_situation_inputs(run_parser, operations=False)
    run_parser.add_argument("--output-dir", required=True)
    run_parser.add_argument("--registry", help="Registry document replacing the builtin panel")
    run_parser.add_argument("--strategy", choices=strategies, default="search")
    run_parser.add_argument("--weights", help="L2 attribute weights document (JSON)")
    run_parser.add_argument(
        "--flashback",
        action="append",
        metavar="ACTION",
        help="Flashback action, relax:<attribute> or extend:<registry> (repeatable, in order)",
    )
    run_parser.add_argument("--config", help="Method configuration document (JSON)")
    run_parser.add_argument("--experience-path", help="Experience store (JSON lines)")
    run_parser.add_argument("--record-experience", action="store_true")

    matrix_parser = subparsers.add_parser("matrix", help="Print the 0/1 selection matrix (CSV)")
    _add_situation_inputs(matrix_parser)
    _add_panel_inputs(matrix_parser)
    matrix_parser.add_argument("--full-grid", action="store_true")
    matrix_parser.add_argument("--output", help="Write the matrix to this file instead of stdout")

    experience_parser = subparsers.add_parser("experience", help="Inspect or extend the experience store")
    experience_parser.add_argument("--path", help="Experience store (JSON lines)")
    experience_sub = experience_parser.add_subparsers(dest="experience_command", required=True)
    experience_sub.add_parser("list", help="List recorded decisions")
    record_parser = experience_sub.add_parser("record", help="Record a requirement -> method decision")
    _add_situation_inputs(record_parser)
    record_parser.add_argument("--method", required=True)

    return parser


def exit_code_for(error: McdmError) -> int:
    if isinstance(error, NoCandidates):
        return int(ExitCode.NO_METHOD)
    if isinstance(error, TieNotResolvable):
        return int(ExitCode.UNRESOLVABLE_TIE)
    if isinstance(error, MethodError):
        return int(ExitCode.VALIDATION_UNRESOLVED)
    return int(ExitCode.INPUT_FAILURE)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return 1

    try:
        settings = EngineSettings(args.settings).load()
        settings.apply_logging()
        if args.verbose:
            shared_logger.set_level(LogLevel.INFO)
        return COMMANDS[args.command](args, settings)
    except McdmError as e:
        shared_logger.log(
            f"{CLASS_PREFIX_MESSAGE} [{LogLevel.CRITICAL.name}] {type(e).__name__}: {e}"
        )
        return exit_code_for(e)


if __name__ == "__main__":
    sys.exit(main())

"""
Result validation: checks a decision result against the situation and the
requirements it was produced for, and names the step to return to otherwise.
"""

from dataclasses import dataclass
from typing import Optional

from ..core_model import DecisionSituation
from ..core_state import PipelineStep
from ..requirements import MethodRequirements
from .results import ChoiceSubset, DecisionResult, RankingResult, SortingResult


@dataclass(frozen=True)
class ValidationVerdict:
    flashback: Optional[PipelineStep] = None
    reason: str = ""

    @property
    def ok(self) -> bool:
        return self.flashback is None

    def to_document(self) -> dict:
        if self.ok:
            return {"ok": True}
        return {"ok": False, "flashback": self.flashback.value, "reason": self.reason}


OK = ValidationVerdict()


def validate_result(
    result: DecisionResult,
    situation: DecisionSituation,
    reqs: Optional[MethodRequirements] = None,
) -> ValidationVerdict:
    """
    @brief Match an obtained result against the users' requirements.
    @return OK, or a verdict naming the pipeline step to revisit. Never raises.
    """
    if result.problem != situation.problem:
        return ValidationVerdict(
            PipelineStep.APPLY_METHOD,
            f"{result.problem.value} result for a {situation.problem.value} problem",
        )

    if reqs is not None and reqs.problem is not None and reqs.problem != situation.problem:
        return ValidationVerdict(
            PipelineStep.SPECIFY_REQUIREMENTS,
            f"requirements state a {reqs.problem.value} problem, the situation a {situation.problem.value} one",
        )

    expected = set(situation.alternatives)

    if isinstance(result, RankingResult):
        covered = set(result.ranking.alternatives)
        if covered != expected:
            return ValidationVerdict(
                PipelineStep.IDENTIFY_REQUIREMENTS,
                f"ranking covers {len(covered & expected)} of {len(expected)} alternatives",
            )
        return OK

    if isinstance(result, SortingResult):
        if set(result.assignments) != expected:
            return ValidationVerdict(
                PipelineStep.IDENTIFY_REQUIREMENTS,
                "sorting does not assign exactly the situation's alternatives",
            )
        categories = set(situation.sorting_categories or ())
        stray = sorted(set(result.assignments.values()) - categories)
        if stray:
            return ValidationVerdict(
                PipelineStep.IDENTIFY_REQUIREMENTS,
                f"alternatives assigned to undeclared categories {stray}",
            )
        return OK

    if isinstance(result, ChoiceSubset):
        chosen = set(result.alternatives)
        if not chosen <= expected:
            return ValidationVerdict(
                PipelineStep.IDENTIFY_REQUIREMENTS,
                f"choice names unknown alternatives {sorted(chosen - expected)}",
            )
        if not chosen:
            return ValidationVerdict(PipelineStep.APPLY_METHOD, "choice is empty")
        if chosen == expected:
            return ValidationVerdict(
                PipelineStep.APPLY_METHOD, "choice keeps every alternative and discriminates nothing"
            )
        return OK

    return ValidationVerdict(PipelineStep.APPLY_METHOD, f"unrecognised result {type(result).__name__}")

"""
DM-point screening questions and the typology gate.
"""

from ..exceptions import ZeroCount
from .situation import (
    CriteriaAxis,
    DecisionMakerAxis,
    DmPointScreen,
    DmPointVerdict,
    GuidanceForm,
    TypologyVerdict,
)


def screen_dm_point(screen: DmPointScreen) -> DmPointVerdict:
    """
    @brief Decide whether a process task is a DM point.

    Only tree-form guidance offers alternatives. A DM point whose guidance
    offers no arguments needs its criteria defined by the engineer.
    """
    is_dm_point = screen.guidance_form == GuidanceForm.TREE
    return DmPointVerdict(
        is_dm_point=is_dm_point,
        needs_criteria_definition=is_dm_point and not screen.offers_arguments,
    )


def classify_typology(criteria_count: int, dm_count: int) -> TypologyVerdict:
    """
    @brief Place a problem on the criteria/decision-maker axes.
    @param criteria_count Number of criteria (>= 1)
    @param dm_count Number of decision makers (>= 1)
    @return TypologyVerdict; only the mono-criterion single-DM case is not MC-eligible.
    """
    if criteria_count < 1 or dm_count < 1:
        raise ZeroCount(
            f"Counts must be positive (criteria={criteria_count}, decision makers={dm_count})"
        )

    criteria_axis = CriteriaAxis.MONO if criteria_count == 1 else CriteriaAxis.MULTI
    dm_axis = DecisionMakerAxis.SINGLE if dm_count == 1 else DecisionMakerAxis.MULTIPLE
    return TypologyVerdict(
        criteria_axis=criteria_axis,
        dm_axis=dm_axis,
        mc_eligible=not (
            criteria_axis == CriteriaAxis.MONO and dm_axis == DecisionMakerAxis.SINGLE
        ),
    )

"""
Core Pipeline Step Definitions

This module defines the steps of the integration process. Separating the enum
makes it easier to import and reference steps (for example in flashback
verdicts) without circular dependencies.
"""

from enum import Enum


class PipelineStep(Enum):
    """
    Steps of the integration process, in execution order.

    Steps:
    - IDENTIFY_REQUIREMENTS: describe the DM situation (L1)
    - SPECIFY_REQUIREMENTS: derive the requirements for MC methods (L2)
    - SELECT_METHOD: match, then choose a method
    - APPLY_METHOD: execute the method and validate its result
    """

    IDENTIFY_REQUIREMENTS = "identify_requirements"
    SPECIFY_REQUIREMENTS = "specify_requirements"
    SELECT_METHOD = "select_method"
    APPLY_METHOD = "apply_method"

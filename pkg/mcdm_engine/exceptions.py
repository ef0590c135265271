"""
Engine exception hierarchy.

Every failure the engine reports is an McdmError. Family bases let the
pipeline map a whole group of failures to one exit code.
"""


class McdmError(Exception):
    """Base class for all decision-engine errors."""


# === Situation (L1) ===
class SituationError(McdmError):
    """The decision situation violates one of its invariants."""


class ZeroCount(SituationError):
    pass


class TooFewAlternatives(SituationError):
    pass


class DimensionMismatch(SituationError):
    pass


class IncompatibleCell(SituationError):
    pass


class AllZeroWeights(SituationError):
    pass


class MissingSortingCategories(SituationError):
    pass


class InvalidCriterion(SituationError):
    pass


class InvalidPerformanceValue(SituationError):
    pass


# === Requirements (L2) ===
class RequirementsError(McdmError):
    pass


class BadThresholds(RequirementsError):
    pass


class EmptyRequirements(RequirementsError):
    pass


# === Registry and selection ===
class RegistryError(McdmError):
    pass


class InvalidInterface(RegistryError):
    pass


class UnknownMethod(RegistryError):
    pass


class InvalidWeights(RegistryError):
    pass


class NoCandidates(RegistryError):
    pass


class TieNotResolvable(RegistryError):
    """Top-scoring candidates share the same interface over the weighted attributes."""

    def __init__(self, message, methods=()):
        super().__init__(message)
        self.methods = tuple(methods)


class StoreUnreadable(RegistryError):
    pass


class StoreUnwritable(RegistryError):
    pass


# === Method execution ===
class MethodError(McdmError):
    pass


class DataTypeUnsupported(MethodError):
    pass


class QualitativeDataUnsupported(DataTypeUnsupported):
    pass


class NotReciprocal(MethodError):
    pass


class NotPositive(MethodError):
    pass


class DimensionTooLarge(MethodError):
    pass


class TooManyAlternatives(MethodError):
    pass


class InconsistentMatrix(MethodError):
    pass


class InvalidSortingThresholds(MethodError):
    pass


class NonMonotoneThresholds(InvalidSortingThresholds):
    pass


class InvalidUtilityFunction(MethodError):
    pass


class EmptyUtility(InvalidUtilityFunction):
    pass


class InvalidPreferenceFunction(MethodError):
    pass


class InvalidFuzzyNumber(MethodError):
    pass


class NegativeSupport(MethodError):
    pass


class UnsupportedProblem(MethodError):
    pass


class MissingConfig(MethodError):
    pass


# === Input documents ===
class DocumentError(McdmError):
    """An input document is missing, unreadable or malformed."""

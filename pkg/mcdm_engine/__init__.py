"""
Decision engine for integrating multicriteria decision-making methods into
development processes: describe a decision situation, derive requirements
for MC methods, select a method from the registry and apply it.
"""

__version__ = "0.1.0"

"""
Shared fixtures for the decision engine tests.
"""

import os
import sys
from pathlib import Path

import pytest

# Add the repository root to the path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from mcdm_engine.core_model import Criterion, DataType, DecisionSituation, Direction, Label, Numeric, ProblemKind
from mcdm_engine.settings_loader import EngineSettings
from mcdm_engine.shared_logger import LogLevel, shared_logger

FIXTURES_DIR = Path(__file__).resolve().parent.parent / "mcdm_engine" / "fixtures" / "rup"


@pytest.fixture(autouse=True)
def quiet_logger():
    """Keep test output clean; individual tests may re-enable the console."""
    shared_logger.set_console(False)
    shared_logger.set_level(LogLevel.WARNING)
    yield
    shared_logger.set_console(True)
    shared_logger.set_log_file(None)


@pytest.fixture
def settings(monkeypatch, tmp_path):
    monkeypatch.setenv("MCDM_EXPERIENCE_PATH", str(tmp_path / "experience.jsonl"))
    return EngineSettings().load()


@pytest.fixture
def fixtures_dir():
    return FIXTURES_DIR


def make_situation(
    rows,
    directions=None,
    weights=None,
    problem=ProblemKind.RANKING,
    names=None,
    **kwargs,
):
    """Quantitative situation from a list of numeric rows."""
    n_criteria = len(rows[0])
    directions = directions or [Direction.MAXIMIZE] * n_criteria
    weights = weights or [1.0] * n_criteria
    names = names or tuple(f"a{i + 1}" for i in range(len(rows)))
    criteria = tuple(
        Criterion(f"c{j + 1}", directions[j], DataType.QUANTITATIVE, weight=weights[j])
        for j in range(n_criteria)
    )
    return DecisionSituation(
        problem=problem,
        alternatives=tuple(names),
        criteria=criteria,
        performance=tuple(tuple(Numeric(float(v)) for v in row) for row in rows),
        **kwargs,
    )


def qualitative_criterion(name, scale, weight=1.0, direction=Direction.MAXIMIZE):
    return Criterion(name, direction, DataType.QUALITATIVE, tuple(scale), weight)


def label(text):
    return Label(text)

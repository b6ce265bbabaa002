"""
Core utilities - logging, exceptions
"""

from src.app.core.logging_config import setup_logging, logger
from src.app.core.exceptions import (
    HenSchedException,
    TemperatureCrossError,
    NoConvergenceError,
    EnergyBalanceError,
    ScenarioParseError,
    ScenarioValidationError,
    DegenerateReferenceError,
    MissingArtifactError,
    ObjectiveEvaluationError,
)

__all__ = [
    "setup_logging",
    "logger",
    "HenSchedException",
    "TemperatureCrossError",
    "NoConvergenceError",
    "EnergyBalanceError",
    "ScenarioParseError",
    "ScenarioValidationError",
    "DegenerateReferenceError",
    "MissingArtifactError",
    "ObjectiveEvaluationError",
]

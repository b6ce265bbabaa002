from src.app.models.thermal import (
    StreamState,
    ExchangerGeometry,
    ExchangerResult,
    HotAssignment,
    BoundaryConditions,
    NetworkTopology,
    NetworkSolution,
)
from src.app.models.fouling import FoulingParams, ResistanceTimeline
from src.app.models.schedule import (
    CleaningSchedule,
    CostCoefficients,
    PumpingModel,
    ExchangerCost,
    CostBreakdown,
    ReferenceBreakdowns,
    ScheduleSimulation,
)
from src.app.models.swarm import SwarmConfig, Particle, SwarmState, OptimizationTrace
from src.app.models.scenario import HotStream, ExchangerConfig, Scenario
from src.app.models.artifacts import GbestRecord, RunArtifacts

__all__ = [
    "StreamState",
    "ExchangerGeometry",
    "ExchangerResult",
    "HotAssignment",
    "BoundaryConditions",
    "NetworkTopology",
    "NetworkSolution",
    "FoulingParams",
    "ResistanceTimeline",
    "CleaningSchedule",
    "CostCoefficients",
    "PumpingModel",
    "ExchangerCost",
    "CostBreakdown",
    "ReferenceBreakdowns",
    "ScheduleSimulation",
    "SwarmConfig",
    "Particle",
    "SwarmState",
    "OptimizationTrace",
    "HotStream",
    "ExchangerConfig",
    "Scenario",
    "GbestRecord",
    "RunArtifacts",
]

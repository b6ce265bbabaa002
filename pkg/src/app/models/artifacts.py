"""
Run Artifacts
What simulate / optimize runs produce and persist.
"""

from dataclasses import dataclass, field
from typing import List, Optional

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from src.app.models.schedule import ReferenceBreakdowns


class GbestRecord(BaseModel):
    """Contents of gbest.json."""
    model_config = ConfigDict(frozen=True)

    intervals: List[int] = Field(..., description="Decoded Gbest cleaning intervals")
    position: List[float] = Field(..., description="Continuous Gbest position")
    best_fitness: float
    convergence_iteration: int
    iterations: int
    particles: int
    seed: int


@dataclass
class RunArtifacts:
    """In-memory view of a run directory."""
    gbest_intervals: List[int]
    cleaning_counts: List[int]
    breakdowns: ReferenceBreakdowns
    duty_series: pd.DataFrame
    fitness_history: List[float] = field(default_factory=list)
    exchanger_savings: Optional[pd.DataFrame] = None

"""
Swarm configuration, particle state and optimization trace.
"""

from dataclasses import dataclass, field
from typing import List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator


class SwarmConfig(BaseModel):
    """Parameters of one particle-swarm run."""
    model_config = ConfigDict(frozen=True)

    particle_count: int = Field(..., ge=1)
    dimensions: int = Field(..., ge=1)
    iterations: int = Field(100, ge=1)
    c1: float = Field(2.0, ge=0.0, description="Cognitive weight")
    c2: float = Field(2.0, ge=0.0, description="Social weight")
    inertia_max: float = Field(0.9, gt=0.0, description="theta_max")
    inertia_min: float = Field(0.4, gt=0.0, description="theta_min")
    inertia_policy: Literal["linear", "constant"] = "linear"
    position_bounds: List[Tuple[float, float]] = Field(..., description="Per-dimension [low, high]")
    velocity_bounds: List[Tuple[float, float]] = Field(..., description="Per-dimension [low, high]")
    seed: int = Field(0, ge=0, lt=2**64)

    @model_validator(mode="after")
    def check_bounds(self) -> "SwarmConfig":
        if self.inertia_max < self.inertia_min:
            raise ValueError("inertia_max must be >= inertia_min")
        for name in ("position_bounds", "velocity_bounds"):
            bounds = getattr(self, name)
            if len(bounds) != self.dimensions:
                raise ValueError(f"{name} needs {self.dimensions} entries, got {len(bounds)}")
            for low, high in bounds:
                if low > high:
                    raise ValueError(f"{name} entry [{low}, {high}] is not well-ordered")
        return self

    @classmethod
    def for_box(
        cls,
        dimensions: int,
        low: float,
        high: float,
        velocity_low: float,
        velocity_high: float,
        **kwargs,
    ) -> "SwarmConfig":
        """Same bounds on every dimension."""
        return cls(
            dimensions=dimensions,
            position_bounds=[(low, high)] * dimensions,
            velocity_bounds=[(velocity_low, velocity_high)] * dimensions,
            **kwargs,
        )

    @property
    def lower(self) -> np.ndarray:
        return np.array([b[0] for b in self.position_bounds], dtype=float)

    @property
    def upper(self) -> np.ndarray:
        return np.array([b[1] for b in self.position_bounds], dtype=float)

    @property
    def velocity_limit(self) -> np.ndarray:
        """Symmetric clamp magnitude: |high| of each velocity bound."""
        return np.array([abs(b[1]) for b in self.velocity_bounds], dtype=float)


@dataclass
class Particle:
    position: np.ndarray
    velocity: np.ndarray
    personal_best_position: np.ndarray
    personal_best_fitness: float = float("inf")


@dataclass
class SwarmState:
    particles: List[Particle]
    global_best_position: Optional[np.ndarray] = None
    global_best_fitness: float = float("inf")
    evaluations: int = 0
    history: List[float] = field(default_factory=list)


class OptimizationTrace(BaseModel):
    """Outcome of a swarm run. fitness_history[i] is the best-so-far after iteration i + 1."""
    model_config = ConfigDict(frozen=True)

    best_position: List[float]
    best_fitness: float
    fitness_history: List[float]
    convergence_iteration: int = Field(0, ge=0, description="First iteration holding the final best; 0 = initial swarm")
    evaluation_count: int = Field(0, ge=0)

    @model_validator(mode="after")
    def check_history(self) -> "OptimizationTrace":
        history = self.fitness_history
        if any(later > earlier for earlier, later in zip(history, history[1:])):
            raise ValueError("fitness_history must be non-increasing")
        if history and history[-1] != self.best_fitness:
            raise ValueError("best_fitness must equal the last history entry")
        return self

"""
Inertia weight policies for the particle swarm.

A policy maps the iteration index to the multiplier on a particle's previous
velocity. Policies are plain picklable objects so a swarm run can ship them
to worker processes along with its configuration.
"""

from typing import Dict, Type

from loguru import logger


class InertiaStrategy:
    """Base policy: theta as a function of (iteration, total iterations)."""

    name = "base"

    def __init__(self, inertia_max: float, inertia_min: float):
        if inertia_min <= 0.0 or inertia_max < inertia_min:
            raise ValueError(
                f"inertia bounds must satisfy inertia_max >= inertia_min > 0, "
                f"got {inertia_max} / {inertia_min}"
            )
        self.inertia_max = inertia_max
        self.inertia_min = inertia_min

    def weight(self, iteration: int, iterations: int) -> float:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"{type(self).__name__}(inertia_max={self.inertia_max}, inertia_min={self.inertia_min})"


class LinearDecreasingInertia(InertiaStrategy):
    """theta(i) = theta_max - (theta_max - theta_min) i / iterations."""

    name = "linear"

    def weight(self, iteration: int, iterations: int) -> float:
        if not 0 <= iteration <= iterations:
            raise ValueError(f"iteration {iteration} outside 0..{iterations}")
        theta = self.inertia_max - (self.inertia_max - self.inertia_min) * iteration / iterations
        # Rounding can step a hair outside the band at the end points
        return min(self.inertia_max, max(self.inertia_min, theta))


class ConstantInertia(InertiaStrategy):
    """Fixed theta_max for every iteration."""

    name = "constant"

    def weight(self, iteration: int, iterations: int) -> float:
        if not 0 <= iteration <= iterations:
            raise ValueError(f"iteration {iteration} outside 0..{iterations}")
        return self.inertia_max


INERTIA_POLICIES: Dict[str, Type[InertiaStrategy]] = {
    LinearDecreasingInertia.name: LinearDecreasingInertia,
    ConstantInertia.name: ConstantInertia,
}


def get_inertia_strategy(name: str, inertia_max: float, inertia_min: float) -> InertiaStrategy:
    """Build a policy by name ('linear' or 'constant')."""
    policy = INERTIA_POLICIES.get(name.lower())
    if policy is None:
        logger.error(f"[PSO] Unknown inertia policy '{name}'")
        raise ValueError(f"unknown inertia policy '{name}', expected one of {sorted(INERTIA_POLICIES)}")
    return policy(inertia_max, inertia_min)

"""
Cleaning schedule and cost accounting models.
"""

from dataclasses import dataclass
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.app.core.model_config import (
    ADDITIVITY_RELATIVE_TOLERANCE,
    DEFAULT_CLEANING_COST,
    ENERGY_LOSS_RELATIVE_SLACK,
    SECONDS_PER_MONTH,
)


# ============================================================================
# SCHEDULE
# ============================================================================

class CleaningSchedule(BaseModel):
    """
    Integer cleaning intervals and the decoded status matrix.

    matrix[n][t - 1] is 1 while exchanger n operates in month t and 0 while it is cleaned.
    """
    model_config = ConfigDict(frozen=True)

    intervals: List[int] = Field(..., description="Months between cleanings, 0 = never")
    horizon: int = Field(..., ge=1, description="t_F in months")
    matrix: List[List[int]] = Field(..., description="Binary status y[n][t]")

    @model_validator(mode="after")
    def check_shape(self) -> "CleaningSchedule":
        if len(self.matrix) != len(self.intervals):
            raise ValueError("matrix must have one row per interval")
        for row in self.matrix:
            if len(row) != self.horizon:
                raise ValueError("every matrix row must span the horizon")
            if any(value not in (0, 1) for value in row):
                raise ValueError("status matrix must be binary")
        return self

    @property
    def exchanger_count(self) -> int:
        return len(self.intervals)

    def clean_steps(self, n: int) -> List[int]:
        """1-based months in which exchanger `n` (0-based row) is cleaned."""
        return [t + 1 for t, status in enumerate(self.matrix[n]) if status == 0]

    @property
    def cleaning_counts(self) -> List[int]:
        return [row.count(0) for row in self.matrix]

    @property
    def total_cleanings(self) -> int:
        return sum(self.cleaning_counts)


# ============================================================================
# COST COEFFICIENTS
# ============================================================================

class CostCoefficients(BaseModel):
    """Prices of the objective. Currency is one abstract unit throughout."""
    model_config = ConfigDict(populate_by_name=True, frozen=True)

    energy_price: float = Field(..., ge=0.0, alias="energy_price_per_j", description="C_E, $/J")
    cleaning_cost: float = Field(DEFAULT_CLEANING_COST, ge=0.0, alias="cleaning_cost_per_action",
                                 description="C_cl, $ per cleaning of one exchanger")
    pump_energy_price: float = Field(..., ge=0.0, alias="pump_energy_price_per_j", description="C_p, $/J")
    step_duration: float = Field(SECONDS_PER_MONTH, ge=0.0, alias="step_duration_s",
                                 description="Seconds per schedule step")
    charge_downtime: bool = Field(False, description=(
        "Also charge energy loss in cleaning months, against the fully clean network without bypasses"
    ))


class PumpingModel(BaseModel):
    """Pumping power of one exchanger, linear in normalised fouling resistance."""
    model_config = ConfigDict(populate_by_name=True, frozen=True)

    base_power: float = Field(..., ge=0.0, alias="base_power_w", description="Clean-condition power, W")
    fouling_coefficient: float = Field(..., ge=0.0, alias="fouling_coefficient_w",
                                       description="Extra power at the fouling asymptote, W")


# ============================================================================
# COST BREAKDOWN
# ============================================================================

class ExchangerCost(BaseModel):
    """Cost components attributed to a single exchanger over the horizon."""
    model_config = ConfigDict(frozen=True)

    exchanger: str
    recovered_energy_value: float = Field(0.0, ge=0.0)
    energy_loss_cost: float = Field(0.0, description="Signed: downstream exchangers can gain duty")
    cleaning_cost: float = Field(0.0, ge=0.0)
    pumping_cost: float = Field(0.0, ge=0.0)
    cleanings: int = Field(0, ge=0)

    @property
    def net_benefit(self) -> float:
        """Recovered value less cleaning and pumping spend."""
        return self.recovered_energy_value - self.cleaning_cost - self.pumping_cost


class CostBreakdown(BaseModel):
    """Totals of one simulated run. total_j is the objective value."""
    model_config = ConfigDict(frozen=True)

    recovered_energy_value: float = Field(..., ge=0.0)
    energy_loss_cost: float = Field(..., description="y-weighted ideal minus actual recovery value")
    cleaning_cost_total: float = Field(..., ge=0.0)
    pumping_cost_total: float = Field(..., ge=0.0)
    total_j: float = Field(...)
    per_exchanger: List[ExchangerCost] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_additivity(self) -> "CostBreakdown":
        expected = self.energy_loss_cost + self.cleaning_cost_total + self.pumping_cost_total
        if abs(self.total_j - expected) > ADDITIVITY_RELATIVE_TOLERANCE * max(1.0, abs(expected)):
            raise ValueError(f"total_j {self.total_j} != sum of components {expected}")
        return self

    @model_validator(mode="after")
    def check_energy_loss(self) -> "CostBreakdown":
        # Per-exchanger losses are signed; the network total is not
        if self.energy_loss_cost < -ENERGY_LOSS_RELATIVE_SLACK * max(1.0, self.recovered_energy_value):
            raise ValueError(f"energy_loss_cost must be non-negative, got {self.energy_loss_cost}")
        return self

    @classmethod
    def from_components(
        cls,
        recovered_energy_value: float,
        energy_loss_cost: float,
        cleaning_cost_total: float,
        pumping_cost_total: float,
        per_exchanger: Optional[List[ExchangerCost]] = None,
    ) -> "CostBreakdown":
        return cls(
            recovered_energy_value=recovered_energy_value,
            energy_loss_cost=energy_loss_cost,
            cleaning_cost_total=cleaning_cost_total,
            pumping_cost_total=pumping_cost_total,
            total_j=energy_loss_cost + cleaning_cost_total + pumping_cost_total,
            per_exchanger=per_exchanger or [],
        )

    @property
    def net_benefit(self) -> float:
        return self.recovered_energy_value - self.cleaning_cost_total - self.pumping_cost_total


class ReferenceBreakdowns(BaseModel):
    """Clean / fouled / scheduled triplet reported side by side."""
    model_config = ConfigDict(frozen=True)

    clean: CostBreakdown
    fouled: CostBreakdown
    scheduled: CostBreakdown


# ============================================================================
# SIMULATION
# ============================================================================

@dataclass
class ScheduleSimulation:
    """
    One simulated horizon.

    Duty matrices are indexed [n, t - 1] in cold-path order, in watts.
    """
    exchangers: List[str]
    schedule: CleaningSchedule
    actual_duty: np.ndarray
    ideal_duty: np.ndarray
    breakdown: CostBreakdown

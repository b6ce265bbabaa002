"""
Scenario Model
The full problem instance: exchangers, wiring, boundary streams, prices and horizon.
"""

from typing import Dict, List, Optional
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from src.app.core.model_config import DEFAULT_HORIZON_MONTHS
from src.app.models.fouling import FoulingParams
from src.app.models.schedule import CostCoefficients, PumpingModel
from src.app.models.thermal import (
    BoundaryConditions,
    ExchangerGeometry,
    HotAssignment,
    NetworkTopology,
    StreamState,
)


class HotStream(BaseModel):
    """A hot product stream and its inlet state."""
    model_config = ConfigDict(populate_by_name=True, frozen=True)

    id: str = Field(..., min_length=1)
    inlet: StreamState


class ExchangerConfig(BaseModel):
    """Everything the scenario declares about one exchanger."""
    model_config = ConfigDict(populate_by_name=True, frozen=True)

    id: str = Field(..., min_length=1, description="E-1 ... E-N")
    hot_stream: str = Field(..., min_length=1)
    hot_visit_order: int = Field(1, ge=1)
    geometry: ExchangerGeometry
    fouling: FoulingParams
    pumping: PumpingModel
    r_f_outer: float = Field(0.0, ge=0.0, alias="r_f_outer_m2k_w", description="Static shell-side resistance")
    cleaning_cost: Optional[float] = Field(None, ge=0.0, alias="cleaning_cost_per_action",
                                           description="Overrides the scenario-wide cleaning cost")

    @model_validator(mode="after")
    def check_wall(self) -> "ExchangerConfig":
        if self.geometry.d_inner >= self.geometry.d_outer:
            raise ValueError(
                f"exchanger '{self.id}': geometry.d_inner_m ({self.geometry.d_inner}) "
                f"must be smaller than geometry.d_outer_m ({self.geometry.d_outer})"
            )
        return self


class Scenario(BaseModel):
    """
    Problem instance loaded from a scenario document.

    `cold_path` defaults to the declaration order of `exchangers`.
    """
    model_config = ConfigDict(populate_by_name=True, frozen=True)

    name: str = "scenario"
    description: str = ""
    horizon: int = Field(DEFAULT_HORIZON_MONTHS, ge=1, alias="horizon_months")
    costs: CostCoefficients
    cold_stream: StreamState = Field(..., alias="cold_inlet")
    hot_streams: List[HotStream] = Field(..., min_length=1)
    exchangers: List[ExchangerConfig] = Field(..., min_length=1)
    cold_path: Optional[List[str]] = None

    @model_validator(mode="after")
    def check_references(self) -> "Scenario":
        ids = [ex.id for ex in self.exchangers]
        duplicates = sorted({ex_id for ex_id in ids if ids.count(ex_id) > 1})
        if duplicates:
            raise ValueError(f"duplicate exchanger id(s): {', '.join(duplicates)}")

        stream_ids = [s.id for s in self.hot_streams]
        duplicate_streams = sorted({s for s in stream_ids if stream_ids.count(s) > 1})
        if duplicate_streams:
            raise ValueError(f"duplicate hot stream id(s): {', '.join(duplicate_streams)}")

        for ex in self.exchangers:
            if ex.hot_stream not in stream_ids:
                raise ValueError(f"exchanger '{ex.id}' references undeclared hot stream '{ex.hot_stream}'")

        if self.cold_path is not None:
            undeclared = [ex_id for ex_id in self.cold_path if ex_id not in ids]
            if undeclared:
                raise ValueError(f"cold_path references undeclared exchanger(s): {undeclared}")
            if sorted(self.cold_path) != sorted(ids):
                raise ValueError("cold_path must visit every declared exchanger exactly once")

        # Builds and validates the wiring (visit orders, boundary coverage)
        try:
            self.topology
        except ValidationError as exc:
            raise ValueError(f"invalid topology: {exc.errors()[0]['msg']}") from exc
        return self

    # ------------------------------------------------------------------
    # Derived views
    # ------------------------------------------------------------------

    @property
    def exchanger_ids(self) -> List[str]:
        """Identifiers in cold-path order."""
        return list(self.cold_path) if self.cold_path is not None else [ex.id for ex in self.exchangers]

    @property
    def exchanger_count(self) -> int:
        return len(self.exchangers)

    def exchangers_in_path_order(self) -> List[ExchangerConfig]:
        by_id: Dict[str, ExchangerConfig] = {ex.id: ex for ex in self.exchangers}
        return [by_id[ex_id] for ex_id in self.exchanger_ids]

    @property
    def topology(self) -> NetworkTopology:
        return NetworkTopology(
            exchangers=self.exchanger_ids,
            hot_assignments={
                ex.id: HotAssignment(stream=ex.hot_stream, visit_order=ex.hot_visit_order)
                for ex in self.exchangers
            },
            boundary=BoundaryConditions(
                cold=self.cold_stream,
                hot={s.id: s.inlet for s in self.hot_streams},
            ),
        )

    def cleaning_cost_for(self, exchanger: ExchangerConfig) -> float:
        if exchanger.cleaning_cost is not None:
            return exchanger.cleaning_cost
        return self.costs.cleaning_cost

    def with_fouling_disabled(self) -> "Scenario":
        """Copy with every fouling asymptote set to zero (the always-clean reference)."""
        clean = [
            ex.model_copy(update={"fouling": ex.fouling.model_copy(update={"asymptote": 0.0})})
            for ex in self.exchangers
        ]
        return self.model_copy(update={"exchangers": clean})

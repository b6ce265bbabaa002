"""
Thermal network models: streams, exchanger geometry, topology and solve results.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence
from pydantic import BaseModel, ConfigDict, Field, model_validator


class StreamState(BaseModel):
    """Temperature, mass flow and constant specific heat of a stream at a network node."""
    model_config = ConfigDict(populate_by_name=True, frozen=True)

    temperature: float = Field(..., gt=0.0, alias="temperature_k", description="Kelvin")
    mass_flow: float = Field(..., gt=0.0, alias="mass_flow_kg_s", description="kg/s")
    specific_heat: float = Field(..., gt=0.0, alias="specific_heat_j_kg_k", description="J/(kg K)")

    @property
    def heat_capacity_rate(self) -> float:
        """m * c_p in W/K."""
        return self.mass_flow * self.specific_heat


class ExchangerGeometry(BaseModel):
    """
    Shell-and-tube geometry and film coefficients of one exchanger.

    d_outer == d_inner is accepted as the thin-wall idealisation; scenario
    documents require a real wall (see ExchangerConfig).
    """
    model_config = ConfigDict(populate_by_name=True, frozen=True)

    area: float = Field(..., gt=0.0, alias="area_m2", description="Outer heat-transfer area")
    d_outer: float = Field(..., gt=0.0, alias="d_outer_m")
    d_inner: float = Field(..., gt=0.0, alias="d_inner_m")
    wall_conductivity: float = Field(..., gt=0.0, alias="wall_conductivity_w_mk")
    h_tube: float = Field(..., gt=0.0, alias="h_tube_w_m2k", description="Tube-side (crude) film coefficient")
    h_shell: float = Field(..., gt=0.0, alias="h_shell_w_m2k", description="Shell-side film coefficient")
    lmtd_correction: float = Field(1.0, gt=0.0, le=1.0, alias="lmtd_correction")

    @model_validator(mode="after")
    def check_diameters(self) -> "ExchangerGeometry":
        if self.d_inner > self.d_outer:
            raise ValueError("d_inner_m must not exceed d_outer_m")
        return self


@dataclass(frozen=True)
class ExchangerResult:
    """Outlet state of one solved exchanger."""
    t_cold_out: float
    t_hot_out: float
    duty: float
    overall_u: float = 0.0
    lmtd: Optional[float] = None
    bypassed: bool = False
    t_cold_in: Optional[float] = None
    t_hot_in: Optional[float] = None


class HotAssignment(BaseModel):
    """Which hot stream serves an exchanger and at which position along that stream."""
    model_config = ConfigDict(populate_by_name=True, frozen=True)

    stream: str = Field(..., min_length=1, alias="hot_stream")
    visit_order: int = Field(..., ge=1, alias="hot_visit_order")


class BoundaryConditions(BaseModel):
    """Inlet states of the cold (crude) stream and every hot stream."""
    model_config = ConfigDict(frozen=True)

    cold: StreamState
    hot: Dict[str, StreamState]


class NetworkTopology(BaseModel):
    """
    Wiring of the network.

    The cold stream visits `exchangers` in order. Each hot stream visits its
    assigned exchangers in ascending visit order.
    """
    model_config = ConfigDict(frozen=True)

    exchangers: List[str] = Field(..., min_length=1, description="Cold-path order")
    hot_assignments: Dict[str, HotAssignment]
    boundary: BoundaryConditions

    @model_validator(mode="after")
    def check_wiring(self) -> "NetworkTopology":
        seen = set()
        for ex_id in self.exchangers:
            if ex_id in seen:
                raise ValueError(f"cold path visits exchanger '{ex_id}' more than once")
            seen.add(ex_id)

        missing = [ex_id for ex_id in self.exchangers if ex_id not in self.hot_assignments]
        if missing:
            raise ValueError(f"exchangers without a hot assignment: {missing}")
        unknown = [ex_id for ex_id in self.hot_assignments if ex_id not in seen]
        if unknown:
            raise ValueError(f"hot assignments reference undeclared exchangers: {unknown}")

        orders: Dict[str, List[int]] = {}
        for assignment in self.hot_assignments.values():
            orders.setdefault(assignment.stream, []).append(assignment.visit_order)
        for stream, visits in orders.items():
            if stream not in self.boundary.hot:
                raise ValueError(f"hot stream '{stream}' has no inlet boundary state")
            if sorted(visits) != list(range(1, len(visits) + 1)):
                raise ValueError(
                    f"visit orders of hot stream '{stream}' must be 1..{len(visits)}, got {sorted(visits)}"
                )
        return self

    @classmethod
    def series(
        cls,
        exchanger_ids: Sequence[str],
        cold: StreamState,
        hot: Sequence[StreamState],
    ) -> "NetworkTopology":
        """Exchangers in series on the cold stream, one independent hot stream each."""
        if len(exchanger_ids) != len(hot):
            raise ValueError("series topology needs one hot inlet per exchanger")
        streams = {f"H-{ex_id}": state for ex_id, state in zip(exchanger_ids, hot)}
        assignments = {
            ex_id: HotAssignment(stream=f"H-{ex_id}", visit_order=1) for ex_id in exchanger_ids
        }
        return cls(
            exchangers=list(exchanger_ids),
            hot_assignments=assignments,
            boundary=BoundaryConditions(cold=cold, hot=streams),
        )

    def hot_chain(self, stream: str) -> List[str]:
        """Exchangers served by `stream`, in visit order."""
        members = [
            (a.visit_order, ex_id) for ex_id, a in self.hot_assignments.items() if a.stream == stream
        ]
        return [ex_id for _, ex_id in sorted(members)]

    def hot_successor(self) -> Dict[str, Optional[str]]:
        """Map each exchanger to the next exchanger on its hot stream (None at the end)."""
        successor: Dict[str, Optional[str]] = {}
        for stream in self.boundary.hot:
            chain = self.hot_chain(stream)
            for position, ex_id in enumerate(chain):
                successor[ex_id] = chain[position + 1] if position + 1 < len(chain) else None
        return successor


@dataclass(frozen=True)
class NetworkSolution:
    """Results of a converged network solve, in cold-path order."""
    results: List[ExchangerResult]
    sweeps: int
    cold_outlet_temperature: float
    hot_outlet_temperatures: Dict[str, float] = field(default_factory=dict)

    @property
    def duties(self) -> List[float]:
        return [r.duty for r in self.results]

    @property
    def total_duty(self) -> float:
        return sum(r.duty for r in self.results)

from typing import FrozenSet, List
from pydantic import BaseModel, ConfigDict, Field


class FoulingParams(BaseModel):
    """Asymptotic fouling law parameters: R_f(t) = a (1 - exp(-b t))."""
    model_config = ConfigDict(populate_by_name=True, frozen=True)

    asymptote: float = Field(..., ge=0.0, alias="asymptote_m2k_w", description="a, m2K/W")
    rate: float = Field(..., gt=0.0, alias="rate_per_month", description="b, 1/month")


class ResistanceTimeline(BaseModel):
    """Fouling resistance per month. values[0] belongs to month 1."""
    model_config = ConfigDict(frozen=True)

    values: List[float] = Field(..., description="m2K/W per time step")
    clean_steps: FrozenSet[int] = Field(default_factory=frozenset)

    @property
    def horizon(self) -> int:
        return len(self.values)

    def at(self, step: int) -> float:
        """Resistance at 1-based month `step`."""
        if not 1 <= step <= len(self.values):
            raise IndexError(f"step {step} outside 1..{len(self.values)}")
        return self.values[step - 1]

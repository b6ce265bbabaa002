from typing import Optional, Sequence


class HenSchedException(Exception):
    """Base exception for the HEN cleaning scheduler."""
    def __init__(self, message: str):
        self.message = message
        super().__init__(self.message)

class TemperatureCrossError(HenSchedException):
    """Raised when an exchanger end temperature difference is not positive."""
    pass

class NoConvergenceError(HenSchedException):
    """Raised when the network fixed-point iteration exceeds its sweep cap."""
    def __init__(self, message: str, sweeps: int = 0, residual: float = float("nan")):
        self.sweeps = sweeps
        self.residual = residual
        super().__init__(message)

class EnergyBalanceError(HenSchedException):
    """Raised when hot-side and cold-side duties disagree beyond tolerance."""
    pass

class ScenarioParseError(HenSchedException):
    """Raised when a scenario document is not well-formed JSON."""
    pass

class ScenarioValidationError(HenSchedException):
    """Raised when a scenario document breaks an invariant. Names the offending field."""
    def __init__(self, message: str, field_path: str = ""):
        self.field_path = field_path
        super().__init__(message)

class DegenerateReferenceError(HenSchedException):
    """Raised when the clean reference does not beat the fouled reference."""
    pass

class MissingArtifactError(HenSchedException):
    """Raised when a run directory lacks an expected artifact file."""
    pass

class ObjectiveEvaluationError(HenSchedException):
    """Raised when an objective call fails; carries the offending position."""
    def __init__(self, message: str, position: Optional[Sequence[float]] = None):
        self.position = list(position) if position is not None else None
        super().__init__(message)

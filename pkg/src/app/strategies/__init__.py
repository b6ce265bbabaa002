from src.app.strategies.inertia_strategy import (
    InertiaStrategy,
    LinearDecreasingInertia,
    ConstantInertia,
    INERTIA_POLICIES,
    get_inertia_strategy,
)

__all__ = [
    "InertiaStrategy",
    "LinearDecreasingInertia",
    "ConstantInertia",
    "INERTIA_POLICIES",
    "get_inertia_strategy",
]

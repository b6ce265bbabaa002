import pytest

from src.app.models.swarm import SwarmConfig
from src.app.services.swarm_optimizer import inertia_weight
from src.app.strategies.inertia_strategy import (
    ConstantInertia,
    LinearDecreasingInertia,
    get_inertia_strategy,
)


def test_linear_starts_at_the_maximum():
    assert LinearDecreasingInertia(0.9, 0.4).weight(0, 100) == 0.9


def test_linear_ends_at_the_minimum():
    assert LinearDecreasingInertia(0.9, 0.4).weight(100, 100) == pytest.approx(0.4)


def test_linear_midpoint():
    assert LinearDecreasingInertia(0.9, 0.4).weight(50, 100) == pytest.approx(0.65)


def test_linear_stays_inside_the_band():
    strategy = LinearDecreasingInertia(0.9, 0.4)
    weights = [strategy.weight(i, 37) for i in range(38)]
    assert all(0.4 <= w <= 0.9 for w in weights)
    assert all(a >= b for a, b in zip(weights, weights[1:]))


def test_constant_policy():
    strategy = ConstantInertia(0.7, 0.4)
    assert {strategy.weight(i, 10) for i in range(11)} == {0.7}


@pytest.mark.parametrize("iteration", [-1, 101])
def test_iteration_outside_the_run_is_rejected(iteration):
    with pytest.raises(ValueError):
        LinearDecreasingInertia(0.9, 0.4).weight(iteration, 100)


@pytest.mark.parametrize("bounds", [(0.4, 0.9), (0.9, 0.0)])
def test_invalid_bounds_are_rejected(bounds):
    with pytest.raises(ValueError):
        LinearDecreasingInertia(*bounds)


def test_policies_are_selected_by_name():
    assert isinstance(get_inertia_strategy("linear", 0.9, 0.4), LinearDecreasingInertia)
    assert isinstance(get_inertia_strategy("CONSTANT", 0.9, 0.4), ConstantInertia)
    with pytest.raises(ValueError):
        get_inertia_strategy("exponential", 0.9, 0.4)


def test_inertia_weight_follows_the_configured_policy():
    config = SwarmConfig.for_box(
        dimensions=2, low=0.0, high=1.0, velocity_low=0.0, velocity_high=1.0,
        particle_count=3, iterations=10, inertia_max=0.9, inertia_min=0.4,
    )
    assert inertia_weight(config, 0) == 0.9
    assert inertia_weight(config, 10) == pytest.approx(0.4)
    constant = config.model_copy(update={"inertia_policy": "constant"})
    assert inertia_weight(constant, 5) == 0.9

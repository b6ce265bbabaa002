"""
Two-exchanger scenario small enough to enumerate: the swarm is checked
against the exhaustive optimum over {0..11}^2.
"""

import pytest

from src.app.services.cleaning_optimizer import CleaningOptimizer

INTERVAL_MAX = 11


@pytest.fixture(scope="module")
def brute_force(small_scenario):
    return CleaningOptimizer.brute_force(small_scenario, INTERVAL_MAX)


def test_brute_force_covers_the_grid(brute_force):
    assert brute_force.evaluated == 144
    assert all(0 <= d <= INTERVAL_MAX for d in brute_force.intervals)
    assert brute_force.total_j == brute_force.breakdown.total_j


def test_brute_force_limit(small_scenario):
    with pytest.raises(ValueError):
        CleaningOptimizer.brute_force(small_scenario, INTERVAL_MAX, max_schedules=100)


def test_swarm_reaches_the_enumerated_optimum(small_scenario, brute_force):
    optimizer = CleaningOptimizer(small_scenario, interval_max=INTERVAL_MAX)
    hits = 0
    for seed in range(10):
        result = optimizer.optimize(optimizer.swarm_config(particles=20, iterations=100, seed=seed))
        assert result.total_j >= brute_force.total_j - 1e-6 * abs(brute_force.total_j)
        hits += result.total_j <= brute_force.total_j + 0.01 * abs(brute_force.total_j)
    assert hits >= 8


def test_objective_memoises_decoded_schedules(small_scenario):
    optimizer = CleaningOptimizer(small_scenario, interval_max=INTERVAL_MAX)
    result = optimizer.optimize(optimizer.swarm_config(particles=10, iterations=20, seed=3))
    assert result.evaluated == 10 * 21
    assert optimizer.objective.distinct_schedules <= 144
    assert optimizer.objective([4.4, 6.6]) == optimizer.objective.cost([4, 7])

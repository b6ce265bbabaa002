"""
End-to-end runs on the shipped 11-exchanger scenario.
"""

import pandas as pd
import pytest

from src.app.services.artifact_writer import run_optimize, run_simulate
from src.app.services.savings import net_savings, savings_fraction

TABLE_INTERVALS = [16, 23, 28, 9, 5, 9, 28, 5, 9, 5, 24]
TABLE_COUNTS = [2, 1, 1, 4, 8, 4, 1, 8, 4, 8, 1]

# Fraction of the clean-network savings the default swarm recovers on this scenario
OPTIMIZED_SAVINGS_FRACTION = 0.305


def test_case_study_intervals_decode_to_case_study_counts(default_scenario, tmp_path):
    artifacts = run_simulate(default_scenario, TABLE_INTERVALS, str(tmp_path))
    assert artifacts.cleaning_counts == TABLE_COUNTS
    assert artifacts.breakdowns.scheduled.cleaning_cost_total == 1_478_400.0

    schedule = pd.read_csv(tmp_path / "schedule.csv")
    months = schedule.filter(like="month_")
    assert months.shape == (11, 44)
    assert (months == 0).sum(axis=1).tolist() == TABLE_COUNTS


def test_references_bracket_the_case_study_schedule(default_scenario, tmp_path):
    refs = run_simulate(default_scenario, TABLE_INTERVALS, str(tmp_path)).breakdowns
    assert refs.clean.energy_loss_cost == 0.0
    assert net_savings(refs.clean, refs.fouled) > 0.0
    assert net_savings(refs.clean, refs.scheduled) > 0.0


@pytest.mark.slow
def test_optimized_savings_fraction_is_stable_across_seeds(default_scenario, tmp_path):
    for seed in (0, 1, 2):
        artifacts = run_optimize(default_scenario, str(tmp_path / f"seed-{seed}"), seed=seed)
        history = artifacts.fitness_history
        assert len(history) == 100
        assert all(later <= earlier for earlier, later in zip(history, history[1:]))
        assert all(0 <= d <= 31 for d in artifacts.gbest_intervals)

        refs = artifacts.breakdowns
        assert net_savings(refs.scheduled, refs.fouled) >= 0.0
        fraction = savings_fraction(refs.scheduled, refs.fouled, refs.clean)
        assert fraction == pytest.approx(OPTIMIZED_SAVINGS_FRACTION, abs=0.02), f"seed {seed}"

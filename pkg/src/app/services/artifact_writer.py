"""
Artifact Writer Service
Runs simulate / optimize and persists their outputs to a run directory.

Artifacts carry no timestamps, so identical inputs give byte-identical files.
"""

import os
from typing import Dict, Optional, Sequence

import pandas as pd
from loguru import logger
from pydantic import BaseModel

from src.app.core.model_config import INTERVAL_MAX_MONTHS
from src.app.models.artifacts import GbestRecord, RunArtifacts
from src.app.models.scenario import Scenario
from src.app.models.schedule import CleaningSchedule, ReferenceBreakdowns, ScheduleSimulation
from src.app.services.cleaning_optimizer import CleaningOptimizer
from src.app.services.cost_evaluator import reference_simulations
from src.app.services.savings import exchanger_net_savings

SCHEDULE_FILE = "schedule.csv"
BREAKDOWN_FILE = "breakdown.json"
DUTY_SERIES_FILE = "duty_series.csv"
EXCHANGER_SAVINGS_FILE = "exchanger_savings.csv"
FITNESS_HISTORY_FILE = "fitness_history.csv"
GBEST_FILE = "gbest.json"

CONDITIONS = ("clean", "fouled", "scheduled")


# ============================================================================
# FRAMES
# ============================================================================

def schedule_frame(schedule: CleaningSchedule, exchangers: Sequence[str]) -> pd.DataFrame:
    """The status matrix, one row per exchanger, one month_t column per month."""
    frame = pd.DataFrame(
        schedule.matrix,
        columns=[f"month_{t}" for t in range(1, schedule.horizon + 1)],
    )
    frame.insert(0, "interval", schedule.intervals)
    frame.insert(0, "exchanger", list(exchangers))
    return frame


def duty_series_frame(simulations: Dict[str, ScheduleSimulation]) -> pd.DataFrame:
    """Long format: month, exchanger, condition, duty_watts."""
    rows = []
    for condition in CONDITIONS:
        sim = simulations[condition]
        horizon = sim.actual_duty.shape[1]
        for t in range(horizon):
            for n, ex_id in enumerate(sim.exchangers):
                rows.append((t + 1, ex_id, condition, float(sim.actual_duty[n, t])))
    return pd.DataFrame(rows, columns=["month", "exchanger", "condition", "duty_watts"])


def exchanger_savings_frame(breakdowns: ReferenceBreakdowns, schedule: CleaningSchedule) -> pd.DataFrame:
    savings = exchanger_net_savings(breakdowns.scheduled, breakdowns.fouled)
    return pd.DataFrame({
        "exchanger": list(savings.keys()),
        "interval": schedule.intervals,
        "cleanings": schedule.cleaning_counts,
        "net_savings": list(savings.values()),
        "pays_back": [value > 0.0 for value in savings.values()],
    })


def fitness_history_frame(history: Sequence[float]) -> pd.DataFrame:
    return pd.DataFrame({
        "iteration": list(range(1, len(history) + 1)),
        "best_fitness": list(history),
    })


# ============================================================================
# WRITERS
# ============================================================================

def write_csv(frame: pd.DataFrame, path: str) -> str:
    frame.to_csv(path, index=False, lineterminator="\n", encoding="utf-8")
    return path


def write_json(model: BaseModel, path: str) -> str:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(model.model_dump_json(indent=2, by_alias=True) + "\n")
    return path


# ============================================================================
# RUNS
# ============================================================================

def run_simulate(scenario: Scenario, intervals: Sequence[int], out_dir: str) -> RunArtifacts:
    """
    Simulate clean, fouled and scheduled conditions and write the run directory.

    Writes schedule.csv, breakdown.json, duty_series.csv and exchanger_savings.csv.
    """
    intervals = [int(d) for d in intervals]
    if len(intervals) != scenario.exchanger_count:
        raise ValueError(
            f"expected {scenario.exchanger_count} intervals for '{scenario.name}', got {len(intervals)}"
        )
    os.makedirs(out_dir, exist_ok=True)
    logger.info(f"[ARTIFACTS] Simulating intervals {intervals} on '{scenario.name}' -> {out_dir}")

    sims = reference_simulations(scenario, intervals)
    scheduled = sims["scheduled"]
    breakdowns = ReferenceBreakdowns(
        clean=sims["clean"].breakdown,
        fouled=sims["fouled"].breakdown,
        scheduled=scheduled.breakdown,
    )

    duty_series = duty_series_frame(sims)
    savings = exchanger_savings_frame(breakdowns, scheduled.schedule)

    write_csv(schedule_frame(scheduled.schedule, scheduled.exchangers), os.path.join(out_dir, SCHEDULE_FILE))
    write_json(breakdowns, os.path.join(out_dir, BREAKDOWN_FILE))
    write_csv(duty_series, os.path.join(out_dir, DUTY_SERIES_FILE))
    write_csv(savings, os.path.join(out_dir, EXCHANGER_SAVINGS_FILE))

    logger.info(
        f"[ARTIFACTS] Scheduled J={breakdowns.scheduled.total_j:,.2f}, "
        f"{scheduled.schedule.total_cleanings} cleanings"
    )
    return RunArtifacts(
        gbest_intervals=intervals,
        cleaning_counts=scheduled.schedule.cleaning_counts,
        breakdowns=breakdowns,
        duty_series=duty_series,
        exchanger_savings=savings,
    )


def run_optimize(
    scenario: Scenario,
    out_dir: str,
    seed: int,
    particles: int = 30,
    iterations: int = 100,
    workers: int = 1,
    interval_max: int = INTERVAL_MAX_MONTHS,
    velocity_max: float = 1.0,
    **swarm_overrides,
) -> RunArtifacts:
    """
    Search cleaning intervals with the swarm, then simulate the Gbest schedule.

    Args:
        scenario: Problem instance
        out_dir: Run directory
        seed: Swarm seed
        particles / iterations: Swarm size and length
        workers: Processes for fitness evaluation
        interval_max: Upper bound of the interval box
        velocity_max: Initial speed range [0, velocity_max] and speed clamp
        **swarm_overrides: c1, c2, inertia_max, inertia_min, inertia_policy

    Returns:
        RunArtifacts including the fitness history; also writes
        fitness_history.csv and gbest.json next to the simulate outputs
    """
    optimizer = CleaningOptimizer(scenario, interval_max=interval_max, workers=workers)
    config = optimizer.swarm_config(
        particles=particles,
        iterations=iterations,
        seed=seed,
        velocity_max=velocity_max,
        **swarm_overrides,
    )
    result = optimizer.optimize(config)
    trace = result.trace

    artifacts = run_simulate(scenario, result.intervals, out_dir)
    write_csv(fitness_history_frame(trace.fitness_history), os.path.join(out_dir, FITNESS_HISTORY_FILE))
    write_json(
        GbestRecord(
            intervals=result.intervals,
            position=trace.best_position,
            best_fitness=trace.best_fitness,
            convergence_iteration=trace.convergence_iteration,
            iterations=config.iterations,
            particles=config.particle_count,
            seed=config.seed,
        ),
        os.path.join(out_dir, GBEST_FILE),
    )
    artifacts.fitness_history = list(trace.fitness_history)
    return artifacts


def existing_artifact(run_dir: str, name: str) -> Optional[str]:
    path = os.path.join(run_dir, name)
    return path if os.path.isfile(path) else None

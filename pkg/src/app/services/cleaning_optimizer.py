"""
Cleaning Optimizer Service
Searches per-exchanger cleaning intervals with the particle swarm.

Positions stay continuous inside [0, interval_max]^N; the objective rounds
them to integer intervals before costing the schedule.
"""

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from src.app.core.model_config import INTERVAL_MAX_MONTHS, INTERVAL_MIN_MONTHS
from src.app.models.schedule import CostBreakdown
from src.app.models.scenario import Scenario
from src.app.models.swarm import OptimizationTrace, SwarmConfig
from src.app.services.cost_evaluator import ScheduleCostEvaluator
from src.app.services.schedule_decoder import decode_position
from src.app.services.swarm_optimizer import optimize

opt_logger = logger.bind(type="optimizer")


class HenObjective:
    """
    Total cost J of the schedule a swarm position decodes to.

    Costs are memoised per decoded interval vector, since many continuous
    positions share one schedule. Pickling drops the evaluator and the memo;
    each worker process rebuilds them on first use and keeps them for the run.
    """

    def __init__(self, scenario: Scenario, interval_max: int = INTERVAL_MAX_MONTHS):
        self.scenario = scenario
        self.interval_max = interval_max
        self._evaluator: Optional[ScheduleCostEvaluator] = None
        self._memo: Dict[Tuple[int, ...], float] = {}

    def __getstate__(self) -> dict:
        return {"scenario": self.scenario, "interval_max": self.interval_max}

    def __setstate__(self, state: dict) -> None:
        self.__init__(state["scenario"], state["interval_max"])

    @property
    def evaluator(self) -> ScheduleCostEvaluator:
        if self._evaluator is None:
            self._evaluator = ScheduleCostEvaluator(self.scenario)
        return self._evaluator

    @property
    def distinct_schedules(self) -> int:
        return len(self._memo)

    def decode(self, position: Sequence[float]) -> List[int]:
        return decode_position(position, INTERVAL_MIN_MONTHS, self.interval_max)

    def cost(self, intervals: Sequence[int]) -> float:
        key = tuple(int(d) for d in intervals)
        value = self._memo.get(key)
        if value is None:
            value = self.evaluator.evaluate(key).total_j
            self._memo[key] = value
        return value

    def __call__(self, position: np.ndarray) -> float:
        return self.cost(self.decode(position))


@dataclass
class ScheduleSearchResult:
    """Best schedule found by a search."""
    intervals: List[int]
    total_j: float
    breakdown: CostBreakdown
    trace: Optional[OptimizationTrace] = None
    evaluated: int = 0


class CleaningOptimizer:
    """
    Finds the cleaning intervals that minimise total cost on one scenario.
    """

    def __init__(
        self,
        scenario: Scenario,
        interval_max: int = INTERVAL_MAX_MONTHS,
        workers: int = 1,
    ):
        if interval_max < 1:
            raise ValueError("interval_max must be >= 1")
        self.scenario = scenario
        self.interval_max = interval_max
        self.workers = workers
        self.objective = HenObjective(scenario, interval_max)

    def swarm_config(
        self,
        particles: int,
        iterations: int,
        seed: int,
        velocity_max: float = 1.0,
        **kwargs,
    ) -> SwarmConfig:
        """
        Box [0, interval_max]^N; initial speeds uniform in [0, velocity_max],
        later speeds clamped to +/- velocity_max.
        """
        return SwarmConfig.for_box(
            dimensions=self.scenario.exchanger_count,
            low=float(INTERVAL_MIN_MONTHS),
            high=float(self.interval_max),
            velocity_low=0.0,
            velocity_high=velocity_max,
            particle_count=particles,
            iterations=iterations,
            seed=seed,
            **kwargs,
        )

    def optimize(self, config: SwarmConfig) -> ScheduleSearchResult:
        """Run the swarm and cost its Gbest schedule."""
        if config.dimensions != self.scenario.exchanger_count:
            raise ValueError(
                f"swarm has {config.dimensions} dimensions, scenario has {self.scenario.exchanger_count} exchangers"
            )
        opt_logger.info(
            f"[OPTIMIZER] Searching intervals 0..{self.interval_max} for "
            f"{self.scenario.exchanger_count} exchangers on '{self.scenario.name}'"
        )
        trace = optimize(self.objective, config, workers=self.workers)
        intervals = self.objective.decode(trace.best_position)
        breakdown = self.objective.evaluator.evaluate(intervals)

        opt_logger.info(
            f"[OPTIMIZER] Gbest intervals {intervals}: J={breakdown.total_j:,.2f}, "
            f"{sum(c.cleanings for c in breakdown.per_exchanger)} cleanings"
        )
        return ScheduleSearchResult(
            intervals=intervals,
            total_j=breakdown.total_j,
            breakdown=breakdown,
            trace=trace,
            evaluated=trace.evaluation_count,
        )

    @staticmethod
    def brute_force(
        scenario: Scenario,
        interval_max: int,
        max_schedules: int = 1_000_000,
    ) -> ScheduleSearchResult:
        """
        Exhaustive search over {0..interval_max}^N.

        Ties keep the first schedule in lexicographic order.

        Raises:
            ValueError: If the grid exceeds `max_schedules`
        """
        n_ex = scenario.exchanger_count
        grid = (interval_max + 1) ** n_ex
        if grid > max_schedules:
            raise ValueError(f"{grid} schedules exceeds the brute-force limit of {max_schedules}")

        logger.info(f"[OPTIMIZER] Brute force over {grid} schedules ({n_ex} exchangers, 0..{interval_max})")
        evaluator = ScheduleCostEvaluator(scenario)
        best: Optional[Tuple[int, ...]] = None
        best_j = float("inf")
        for intervals in itertools.product(range(interval_max + 1), repeat=n_ex):
            total_j = evaluator.evaluate(intervals).total_j
            if total_j < best_j:
                best, best_j = intervals, total_j

        breakdown = evaluator.evaluate(best)
        logger.info(f"[OPTIMIZER] Brute-force optimum {list(best)}: J={best_j:,.2f}")
        return ScheduleSearchResult(
            intervals=list(best),
            total_j=best_j,
            breakdown=breakdown,
            evaluated=grid,
        )

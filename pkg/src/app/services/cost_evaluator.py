"""
Cost Evaluator Service
Simulates the network over the horizon and accumulates the total-cost objective.

Per exchanger n and month t, with status y (1 = operating, 0 = cleaning):
    J += C_E (Q_ideal - Q_actual) dt y + C_cl (1 - y) + C_p W_P dt y
Q_actual comes from the network with the fouling timeline applied. Q_ideal comes
from the same network with every fouling resistance at zero. Both solves bypass
the exchangers being cleaned that month.

With costs.charge_downtime the loss term is accumulated in every month and
Q_ideal is the fully clean network with nothing bypassed. J + net benefit is
then the same constant for every schedule.
"""

from typing import Dict, List, Sequence, Tuple

import numpy as np
from loguru import logger

from src.app.models.schedule import (
    CostBreakdown,
    ExchangerCost,
    PumpingModel,
    ReferenceBreakdowns,
    ScheduleSimulation,
)
from src.app.models.scenario import Scenario
from src.app.services.fouling_model import effective_ua, resistance_timeline, ua_timeline
from src.app.services.network_solver import solve_network
from src.app.services.schedule_decoder import clean_steps_for, decode_intervals


def pumping_power(model: PumpingModel, r_f: float, asymptote: float) -> float:
    """
    W_P = base + kappa (r_f / a).

    An exchanger that cannot foul (a = 0) draws its base power only.
    """
    if r_f < 0.0:
        raise ValueError("fouling resistance must be non-negative")
    if asymptote <= 0.0:
        return model.base_power
    return model.base_power + model.fouling_coefficient * (r_f / asymptote)


class ScheduleCostEvaluator:
    """
    Evaluates cleaning schedules on one scenario.

    Clean UA is computed once. Ideal solves are cached per bypass pattern, and
    UA / pumping timelines per (exchanger, interval), since an exchanger's
    timeline depends only on its own interval.
    """

    def __init__(self, scenario: Scenario):
        self.scenario = scenario
        self.exchangers = scenario.exchangers_in_path_order()
        self.ids = [ex.id for ex in self.exchangers]
        self.horizon = scenario.horizon
        self.topology = scenario.topology
        self.corrections = [ex.geometry.lmtd_correction for ex in self.exchangers]
        self.cleaning_costs = [scenario.cleaning_cost_for(ex) for ex in self.exchangers]
        self.clean_ua = [effective_ua(ex.geometry, 0.0, ex.r_f_outer) for ex in self.exchangers]

        self._ideal: Dict[Tuple[bool, ...], List[float]] = {}
        self._timelines: Dict[Tuple[int, int], Tuple[List[float], List[float]]] = {}

        logger.debug(
            f"[COST] Prepared evaluator for '{scenario.name}': {len(self.ids)} exchangers, "
            f"horizon {self.horizon}, ideal duty {sum(self.ideal_duties()):.6g} W"
        )

    def ideal_duties(self, bypassed: Sequence[bool] = ()) -> List[float]:
        """Duties of the fully clean network with `bypassed` exchangers offline (default none)."""
        key = tuple(bool(b) for b in bypassed) or (False,) * len(self.exchangers)
        duties = self._ideal.get(key)
        if duties is None:
            duties = solve_network(self.topology, self.clean_ua, key, lmtd_corrections=self.corrections).duties
            self._ideal[key] = duties
        return duties

    def _timeline(self, n: int, interval: int) -> Tuple[List[float], List[float]]:
        """(UA per month, pumping power per month) for exchanger n at this interval."""
        key = (n, interval)
        cached = self._timelines.get(key)
        if cached is not None:
            return cached
        ex = self.exchangers[n]
        steps = clean_steps_for(interval, self.horizon)
        ua = ua_timeline(ex.geometry, ex.fouling, steps, self.horizon, ex.r_f_outer)
        resistances = resistance_timeline(ex.fouling, steps, self.horizon)
        pumping = [pumping_power(ex.pumping, r_f, ex.fouling.asymptote) for r_f in resistances.values]
        self._timelines[key] = (ua, pumping)
        return ua, pumping

    def simulate(self, intervals: Sequence[int]) -> ScheduleSimulation:
        """
        Run the horizon month by month and account every cost term.

        Raises:
            ValueError: If the interval vector does not match the exchanger count
            NoConvergenceError / TemperatureCrossError: From the network solve
        """
        n_ex = len(self.exchangers)
        if len(intervals) != n_ex:
            raise ValueError(f"expected {n_ex} intervals, got {len(intervals)}")

        schedule = decode_intervals(intervals, self.horizon)
        costs = self.scenario.costs
        dt = costs.step_duration
        timelines = [self._timeline(n, schedule.intervals[n]) for n in range(n_ex)]

        actual = np.zeros((n_ex, self.horizon))
        ideal = np.zeros((n_ex, self.horizon))

        recovered = [0.0] * n_ex
        loss = [0.0] * n_ex
        cleaning = [0.0] * n_ex
        pumping = [0.0] * n_ex

        for t in range(self.horizon):
            bypassed = tuple(schedule.matrix[n][t] == 0 for n in range(n_ex))
            q_ideal = self.ideal_duties(() if costs.charge_downtime else bypassed)
            solution = solve_network(
                self.topology,
                [timelines[n][0][t] for n in range(n_ex)],
                bypassed,
                lmtd_corrections=self.corrections,
            )
            for n in range(n_ex):
                q_actual = solution.results[n].duty
                actual[n, t] = q_actual
                ideal[n, t] = q_ideal[n]
                recovered[n] += costs.energy_price * q_actual * dt
                if bypassed[n]:
                    cleaning[n] += self.cleaning_costs[n]
                else:
                    pumping[n] += costs.pump_energy_price * timelines[n][1][t] * dt
                if costs.charge_downtime or not bypassed[n]:
                    loss[n] += costs.energy_price * (q_ideal[n] - q_actual) * dt

        counts = schedule.cleaning_counts
        per_exchanger = [
            ExchangerCost(
                exchanger=self.ids[n],
                recovered_energy_value=recovered[n],
                energy_loss_cost=loss[n],
                cleaning_cost=cleaning[n],
                pumping_cost=pumping[n],
                cleanings=counts[n],
            )
            for n in range(n_ex)
        ]
        breakdown = CostBreakdown.from_components(
            recovered_energy_value=sum(recovered),
            energy_loss_cost=sum(loss),
            cleaning_cost_total=sum(cleaning),
            pumping_cost_total=sum(pumping),
            per_exchanger=per_exchanger,
        )
        return ScheduleSimulation(
            exchangers=list(self.ids),
            schedule=schedule,
            actual_duty=actual,
            ideal_duty=ideal,
            breakdown=breakdown,
        )

    def evaluate(self, intervals: Sequence[int]) -> CostBreakdown:
        return self.simulate(intervals).breakdown


def simulate_schedule(scenario: Scenario, intervals: Sequence[int]) -> ScheduleSimulation:
    """Breakdown plus monthly duty matrices for one schedule."""
    return ScheduleCostEvaluator(scenario).simulate(intervals)


def evaluate_schedule(scenario: Scenario, intervals: Sequence[int]) -> CostBreakdown:
    """Total cost J and its components for one interval vector."""
    return ScheduleCostEvaluator(scenario).evaluate(intervals)


def reference_simulations(scenario: Scenario, intervals: Sequence[int]) -> Dict[str, ScheduleSimulation]:
    """
    Clean, fouled and scheduled runs side by side.

    clean: fouling disabled, never cleaned. fouled: never cleaned.
    """
    never = [0] * scenario.exchanger_count
    evaluator = ScheduleCostEvaluator(scenario)
    simulations = {
        "clean": ScheduleCostEvaluator(scenario.with_fouling_disabled()).simulate(never),
        "fouled": evaluator.simulate(never),
        "scheduled": evaluator.simulate(intervals),
    }
    logger.info(
        "[COST] References: "
        + ", ".join(f"{name} J={sim.breakdown.total_j:,.0f}" for name, sim in simulations.items())
    )
    return simulations


def reference_breakdowns(scenario: Scenario, intervals: Sequence[int]) -> ReferenceBreakdowns:
    sims = reference_simulations(scenario, intervals)
    return ReferenceBreakdowns(
        clean=sims["clean"].breakdown,
        fouled=sims["fouled"].breakdown,
        scheduled=sims["scheduled"].breakdown,
    )

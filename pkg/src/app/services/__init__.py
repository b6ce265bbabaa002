from src.app.services.heat_exchanger import lmtd, overall_u, effectiveness, exchanger_outlets
from src.app.services.network_solver import solve_network
from src.app.services.fouling_model import fouling_resistance, resistance_timeline, effective_ua, ua_timeline
from src.app.services.schedule_decoder import decode_intervals, decode_position
from src.app.services.cost_evaluator import (
    ScheduleCostEvaluator,
    pumping_power,
    simulate_schedule,
    evaluate_schedule,
    reference_breakdowns,
)
from src.app.services.savings import net_savings, savings_fraction, exchanger_net_savings
from src.app.services.swarm_optimizer import init_swarm, inertia_weight, update_velocity, update_position, optimize
from src.app.services.cleaning_optimizer import CleaningOptimizer, HenObjective
from src.app.services.artifact_writer import run_simulate, run_optimize
from src.app.services.report_service import run_report

__all__ = [
    "lmtd",
    "overall_u",
    "effectiveness",
    "exchanger_outlets",
    "solve_network",
    "fouling_resistance",
    "resistance_timeline",
    "effective_ua",
    "ua_timeline",
    "decode_intervals",
    "decode_position",
    "ScheduleCostEvaluator",
    "pumping_power",
    "simulate_schedule",
    "evaluate_schedule",
    "reference_breakdowns",
    "net_savings",
    "savings_fraction",
    "exchanger_net_savings",
    "init_swarm",
    "inertia_weight",
    "update_velocity",
    "update_position",
    "optimize",
    "CleaningOptimizer",
    "HenObjective",
    "run_simulate",
    "run_optimize",
    "run_report",
]

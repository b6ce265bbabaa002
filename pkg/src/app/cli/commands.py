"""
Command surface: hensched simulate | optimize | report.

Flags override settings; settings override built-in defaults.

Exit codes:
    0  success
    2  invalid input (parse / validation / degenerate reference)
    3  model failure (no convergence / temperature cross / energy balance)
    4  IO error or missing artifact
"""

import argparse
import sys
from typing import List, Optional, Sequence

from pydantic import ValidationError

from config.settings import settings
from src.app.core.exceptions import (
    DegenerateReferenceError,
    EnergyBalanceError,
    MissingArtifactError,
    NoConvergenceError,
    ObjectiveEvaluationError,
    ScenarioParseError,
    ScenarioValidationError,
    TemperatureCrossError,
)
from src.app.core.logging_config import logger, setup_logging

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INVALID = 2
EXIT_MODEL = 3
EXIT_IO = 4


def parse_intervals(text: str) -> List[int]:
    """'16,23,28' -> [16, 23, 28]."""
    try:
        values = [int(part) for part in text.replace(" ", "").split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"intervals must be comma-separated integers, got '{text}'")
    if not values:
        raise argparse.ArgumentTypeError("at least one interval is required")
    if any(v < 0 for v in values):
        raise argparse.ArgumentTypeError("intervals must be non-negative")
    return values


def exit_code_for(exc: BaseException) -> int:
    """Map an exception to the process exit code, looking through objective wrappers."""
    if isinstance(exc, ObjectiveEvaluationError) and exc.__cause__ is not None:
        return exit_code_for(exc.__cause__)
    if isinstance(exc, (NoConvergenceError, TemperatureCrossError, EnergyBalanceError)):
        return EXIT_MODEL
    if isinstance(exc, (MissingArtifactError, OSError)):
        return EXIT_IO
    if isinstance(exc, (
        ScenarioParseError, ScenarioValidationError, DegenerateReferenceError, ValidationError, ValueError,
    )):
        return EXIT_INVALID
    return EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hensched",
        description="Fouling heat-exchanger network simulator and cleaning-schedule optimizer",
    )
    parser.add_argument("--log-level", default=None,
                        choices=["TRACE", "DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
                        help=f"Overrides LOG_LEVEL (default {settings.LOG_LEVEL})")
    sub = parser.add_subparsers(dest="command", required=True)

    simulate = sub.add_parser("simulate", help="Simulate one cleaning schedule against the references")
    simulate.add_argument("--scenario", default=None, help="Scenario JSON (default SCENARIO_PATH)")
    simulate.add_argument("--intervals", required=True, type=parse_intervals,
                          help='Comma-separated months between cleanings, e.g. "16,23,28"; 0 = never')
    simulate.add_argument("--out", default=None, help="Run directory (default OUTPUT_DIR)")

    optimize = sub.add_parser("optimize", help="Search cleaning intervals with the particle swarm")
    optimize.add_argument("--scenario", default=None)
    optimize.add_argument("--particles", type=int, default=None)
    optimize.add_argument("--iterations", type=int, default=None)
    optimize.add_argument("--seed", type=int, default=None)
    optimize.add_argument("--workers", type=int, default=None, help="Processes for fitness evaluation")
    optimize.add_argument("--c1", type=float, default=None, help="Cognitive weight")
    optimize.add_argument("--c2", type=float, default=None, help="Social weight")
    optimize.add_argument("--inertia-max", type=float, default=None)
    optimize.add_argument("--inertia-min", type=float, default=None)
    optimize.add_argument("--inertia-policy", choices=["linear", "constant"], default=None)
    optimize.add_argument("--interval-max", type=int, default=None, help="Upper bound of the interval box")
    optimize.add_argument("--out", default=None)

    report = sub.add_parser("report", help="Summarise a run directory")
    report.add_argument("--in", dest="run_dir", default=None, help="Run directory (default OUTPUT_DIR)")
    report.add_argument("--plot", action="store_true", help="Also render fitness_history.png and duty_series.png")

    return parser


def _pick(value, default):
    return default if value is None else value


def _simulate(args: argparse.Namespace) -> None:
    from src.app.parsers.scenario_loader import load_scenario
    from src.app.services.artifact_writer import run_simulate

    scenario = load_scenario(_pick(args.scenario, settings.SCENARIO_PATH))
    out_dir = _pick(args.out, settings.OUTPUT_DIR)
    artifacts = run_simulate(scenario, args.intervals, out_dir)
    b = artifacts.breakdowns.scheduled
    print(f"Scheduled total cost J: {b.total_j:,.0f}  (cleanings: {sum(artifacts.cleaning_counts)})")
    print(f"Artifacts written to {out_dir}")


def _optimize(args: argparse.Namespace) -> None:
    from src.app.parsers.scenario_loader import load_scenario
    from src.app.services.artifact_writer import run_optimize

    scenario = load_scenario(_pick(args.scenario, settings.SCENARIO_PATH))
    out_dir = _pick(args.out, settings.OUTPUT_DIR)
    artifacts = run_optimize(
        scenario,
        out_dir,
        seed=_pick(args.seed, settings.PSO_SEED),
        particles=_pick(args.particles, settings.PSO_PARTICLES),
        iterations=_pick(args.iterations, settings.PSO_ITERATIONS),
        workers=_pick(args.workers, settings.PSO_WORKERS),
        interval_max=_pick(args.interval_max, settings.INTERVAL_MAX_MONTHS),
        velocity_max=settings.INITIAL_VELOCITY_MAX,
        c1=_pick(args.c1, settings.PSO_C1),
        c2=_pick(args.c2, settings.PSO_C2),
        inertia_max=_pick(args.inertia_max, settings.PSO_INERTIA_MAX),
        inertia_min=_pick(args.inertia_min, settings.PSO_INERTIA_MIN),
        inertia_policy=_pick(args.inertia_policy, settings.PSO_INERTIA_POLICY),
    )
    print(f"Gbest intervals: {','.join(str(d) for d in artifacts.gbest_intervals)}")
    print(f"Cleanings per exchanger: {','.join(str(c) for c in artifacts.cleaning_counts)}")
    print(f"Best fitness: {artifacts.fitness_history[-1]:,.0f}")
    print(f"Artifacts written to {out_dir}")


def _report(args: argparse.Namespace) -> None:
    from src.app.services.report_service import run_report

    run_report(_pick(args.run_dir, settings.OUTPUT_DIR), plot=args.plot)


COMMANDS = {
    "simulate": _simulate,
    "optimize": _optimize,
    "report": _report,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(level=args.log_level)

    try:
        COMMANDS[args.command](args)
    except Exception as exc:
        code = exit_code_for(exc)
        message = getattr(exc, "message", None) or str(exc)
        if code == EXIT_FAILURE:
            logger.exception(f"[CLI] Unexpected failure in '{args.command}': {message}")
        else:
            logger.error(f"[CLI] {type(exc).__name__}: {message}")
        print(f"error: {message}", file=sys.stderr)
        return code

    logger.debug(f"[CLI] '{args.command}' finished")
    return EXIT_OK

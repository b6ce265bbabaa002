"""
Brute-Force Schedule Search - Exhaustive optimum for small scenarios

Enumerates every interval vector in {0..interval_max}^N and compares the
optimum with a swarm run on the same box.
"""

import argparse
import sys
from pathlib import Path

from loguru import logger

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from config.settings import settings
from src.app.core.logging_config import setup_logging
from src.app.parsers.scenario_loader import load_scenario
from src.app.services.cleaning_optimizer import CleaningOptimizer


def main():
    parser = argparse.ArgumentParser(description="Exhaustive cleaning-interval search for small scenarios")
    parser.add_argument("--scenario", default="./data/scenarios/scenario_2he.json")
    parser.add_argument("--interval-max", type=int, default=11)
    parser.add_argument("--particles", type=int, default=20)
    parser.add_argument("--iterations", type=int, default=100)
    parser.add_argument("--seed", type=int, default=settings.PSO_SEED)
    args = parser.parse_args()

    setup_logging(to_file=False)
    scenario = load_scenario(args.scenario)

    exact = CleaningOptimizer.brute_force(scenario, args.interval_max)
    logger.info(f"Brute force: intervals={exact.intervals} J={exact.total_j:,.2f} over {exact.evaluated} schedules")

    optimizer = CleaningOptimizer(scenario, interval_max=args.interval_max)
    swarm = optimizer.optimize(
        optimizer.swarm_config(particles=args.particles, iterations=args.iterations, seed=args.seed)
    )
    gap = (swarm.total_j - exact.total_j) / abs(exact.total_j) if exact.total_j else 0.0
    logger.info(f"Swarm:       intervals={swarm.intervals} J={swarm.total_j:,.2f} (gap {gap:.3%})")


if __name__ == "__main__":
    main()

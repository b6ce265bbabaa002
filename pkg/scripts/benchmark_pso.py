"""
PSO Benchmark - Run the swarm on the standard test functions across seeds
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
from src.app.models.swarm import SwarmConfig
from src.app.services.swarm_optimizer import optimize
from src.app.utils.benchmarks import BENCHMARKS

# Search box per benchmark
BOXES = {
    "sphere": (-10.0, 10.0),
    "rastrigin": (-5.12, 5.12),
    "rosenbrock": (-5.0, 10.0),
}


def run_benchmark(name: str, dimensions: int, particles: int, iterations: int, seeds: int, threshold: float) -> int:
    """Run one benchmark over `seeds` seeds and return how many beat `threshold`."""
    objective = BENCHMARKS[name]
    low, high = BOXES[name]
    v_max = 0.2 * (high - low)

    hits = 0
    for seed in range(seeds):
        config = SwarmConfig.for_box(
            dimensions=dimensions,
            low=low,
            high=high,
            velocity_low=-v_max,
            velocity_high=v_max,
            particle_count=particles,
            iterations=iterations,
            c1=settings.PSO_C1,
            c2=settings.PSO_C2,
            inertia_max=settings.PSO_INERTIA_MAX,
            inertia_min=settings.PSO_INERTIA_MIN,
            seed=seed,
        )
        trace = optimize(objective, config)
        passed = trace.best_fitness < threshold
        hits += passed
        logger.info(
            f"{name} seed={seed}: best={trace.best_fitness:.3e} "
            f"(iteration {trace.convergence_iteration}) {'PASS' if passed else 'miss'}"
        )

    logger.info(f"{name}: {hits}/{seeds} seeds below {threshold:g}")
    return hits


def main():
    parser = argparse.ArgumentParser(description="Swarm sanity runs on standard test functions")
    parser.add_argument("--function", choices=sorted(BENCHMARKS), default="sphere")
    parser.add_argument("--dimensions", type=int, default=5)
    parser.add_argument("--particles", type=int, default=30)
    parser.add_argument("--iterations", type=int, default=200)
    parser.add_argument("--seeds", type=int, default=10)
    parser.add_argument("--threshold", type=float, default=1e-3)
    args = parser.parse_args()

    setup_logging(to_file=False)
    logger.info("=" * 60)
    logger.info(f"PSO benchmark: {args.function}, {args.dimensions}-D")
    logger.info("=" * 60)

    hits = run_benchmark(args.function, args.dimensions, args.particles, args.iterations, args.seeds, args.threshold)
    sys.exit(0 if hits > 0 else 1)


if __name__ == "__main__":
    main()

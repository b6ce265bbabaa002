"""
Swarm Optimizer Service
Global-best particle swarm minimizer over a box.

Per iteration i (0-based) every particle moves with
    v = theta(i) v + c1 r1 (pbest - x) + c2 r2 (gbest - x),   |v| <= v_max
    x = clip(x + v, low, high)                               (v = 0 where clipped)
and the swarm is then re-evaluated. r1 and r2 are drawn per dimension.
"""

from concurrent.futures import Executor, ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence

import numpy as np
from loguru import logger

from src.app.core.exceptions import ObjectiveEvaluationError
from src.app.models.swarm import OptimizationTrace, Particle, SwarmConfig, SwarmState
from src.app.strategies.inertia_strategy import InertiaStrategy, get_inertia_strategy

Objective = Callable[[np.ndarray], float]

opt_logger = logger.bind(type="optimizer")

# Set once per worker process by the pool initializer
_worker_objective: Optional[Objective] = None


def init_swarm(config: SwarmConfig, rng: np.random.Generator) -> SwarmState:
    """
    Uniform positions and velocities inside their bounds.

    Positions are drawn for the whole swarm first, then velocities, so a seed
    fixes the swarm independently of later draws.
    """
    shape = (config.particle_count, config.dimensions)
    low, high = config.lower, config.upper
    v_low = np.array([b[0] for b in config.velocity_bounds], dtype=float)
    v_high = np.array([b[1] for b in config.velocity_bounds], dtype=float)

    positions = low + rng.random(shape) * (high - low)
    velocities = v_low + rng.random(shape) * (v_high - v_low)
    # Guard against x = low + 1.0 * (high - low) rounding past high
    positions = np.clip(positions, low, high)

    particles = [
        Particle(
            position=positions[k].copy(),
            velocity=velocities[k].copy(),
            personal_best_position=positions[k].copy(),
        )
        for k in range(config.particle_count)
    ]
    return SwarmState(particles=particles)


def inertia_weight(config: SwarmConfig, iteration: int) -> float:
    """theta at `iteration` under the configured policy."""
    strategy = get_inertia_strategy(config.inertia_policy, config.inertia_max, config.inertia_min)
    return strategy.weight(iteration, config.iterations)


def update_velocity(
    p: Particle,
    gbest: np.ndarray,
    theta: float,
    config: SwarmConfig,
    rng: np.random.Generator,
) -> np.ndarray:
    """New velocity of one particle, clamped to +/- |velocity high|. Stored on the particle."""
    r1 = rng.random(config.dimensions)
    r2 = rng.random(config.dimensions)
    velocity = (
        theta * p.velocity
        + config.c1 * r1 * (p.personal_best_position - p.position)
        + config.c2 * r2 * (gbest - p.position)
    )
    limit = config.velocity_limit
    p.velocity = np.clip(velocity, -limit, limit)
    return p.velocity


def update_position(p: Particle, config: SwarmConfig) -> np.ndarray:
    """x + v clamped into the box; clamped components lose their velocity."""
    moved = p.position + p.velocity
    clamped = np.clip(moved, config.lower, config.upper)
    hit = clamped != moved
    if hit.any():
        p.velocity = np.where(hit, 0.0, p.velocity)
    p.position = clamped
    return p.position


def _install_worker_objective(objective: Objective) -> None:
    global _worker_objective
    _worker_objective = objective


def _evaluate_in_worker(position: np.ndarray) -> float:
    return _worker_objective(position)


def _worker_pool(objective: Objective, workers: int) -> ProcessPoolExecutor:
    """
    Process pool whose workers each unpickle `objective` once and keep it, so
    caches the objective builds survive between tasks.
    """
    return ProcessPoolExecutor(
        max_workers=workers,
        initializer=_install_worker_objective,
        initargs=(objective,),
    )


class _FitnessEvaluator:
    """
    Calls the objective for a batch of positions, serially or through a process
    pool built by _worker_pool.
    """

    def __init__(self, objective: Objective, executor: Optional[Executor] = None):
        self.objective = objective
        self.executor = executor
        self.calls = 0

    def _wrap(self, position: np.ndarray, exc: Exception) -> ObjectiveEvaluationError:
        if isinstance(exc, ObjectiveEvaluationError):
            return exc
        return ObjectiveEvaluationError(
            f"Objective failed at position {np.array2string(position, precision=4)}: {exc}",
            position=position.tolist(),
        )

    def __call__(self, positions: Sequence[np.ndarray]) -> List[float]:
        self.calls += len(positions)
        if self.executor is None:
            values = []
            for position in positions:
                try:
                    values.append(float(self.objective(position.copy())))
                except Exception as exc:
                    raise self._wrap(position, exc) from exc
            return values

        futures = [self.executor.submit(_evaluate_in_worker, position.copy()) for position in positions]
        values = []
        # Merged in particle order regardless of completion order
        for position, future in zip(positions, futures):
            try:
                values.append(float(future.result()))
            except Exception as exc:
                for pending in futures:
                    pending.cancel()
                raise self._wrap(position, exc) from exc
        return values


def _run(
    evaluate: _FitnessEvaluator,
    config: SwarmConfig,
    strategy: InertiaStrategy,
) -> OptimizationTrace:
    rng = np.random.default_rng(config.seed)
    state = init_swarm(config, rng)

    initial = evaluate([p.position for p in state.particles])
    for p, fitness in zip(state.particles, initial):
        p.personal_best_fitness = fitness
        if state.global_best_position is None or fitness < state.global_best_fitness:
            state.global_best_fitness = fitness
            state.global_best_position = p.position.copy()
    convergence_iteration = 0

    for iteration in range(config.iterations):
        theta = strategy.weight(iteration, config.iterations)
        for p in state.particles:
            update_velocity(p, state.global_best_position, theta, config, rng)
            update_position(p, config)

        values = evaluate([p.position for p in state.particles])
        for p, fitness in zip(state.particles, values):
            if fitness < p.personal_best_fitness:
                p.personal_best_fitness = fitness
                p.personal_best_position = p.position.copy()
            if fitness < state.global_best_fitness:
                state.global_best_fitness = fitness
                state.global_best_position = p.position.copy()
                convergence_iteration = iteration + 1

        state.history.append(state.global_best_fitness)
        opt_logger.debug(
            f"[PSO] Iteration {iteration + 1}/{config.iterations}: theta={theta:.4f}, "
            f"best={state.global_best_fitness:.6g}"
        )

    state.evaluations = evaluate.calls
    return OptimizationTrace(
        best_position=state.global_best_position.tolist(),
        best_fitness=state.global_best_fitness,
        fitness_history=state.history,
        convergence_iteration=convergence_iteration,
        evaluation_count=state.evaluations,
    )


def optimize(
    objective: Objective,
    config: SwarmConfig,
    workers: int = 1,
    strategy: Optional[InertiaStrategy] = None,
) -> OptimizationTrace:
    """
    Minimize `objective` over the configured box.

    Args:
        objective: Callable on a position vector; must be picklable when workers > 1
        config: Swarm parameters, including the seed
        workers: Processes used for fitness evaluation (1 = in-process)
        strategy: Inertia policy; defaults to config.inertia_policy

    Returns:
        OptimizationTrace with one history entry per iteration

    Raises:
        ObjectiveEvaluationError: Wrapping the first objective failure, with its position
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")
    strategy = strategy or get_inertia_strategy(config.inertia_policy, config.inertia_max, config.inertia_min)

    opt_logger.info(
        f"[PSO] Starting: {config.particle_count} particles x {config.iterations} iterations, "
        f"{config.dimensions} dimensions, seed={config.seed}, {strategy!r}, workers={workers}"
    )

    if workers == 1:
        trace = _run(_FitnessEvaluator(objective), config, strategy)
    else:
        with _worker_pool(objective, workers) as executor:
            trace = _run(_FitnessEvaluator(objective, executor), config, strategy)

    opt_logger.info(
        f"[PSO] Finished: best={trace.best_fitness:.6g} at iteration {trace.convergence_iteration}, "
        f"{trace.evaluation_count} evaluations"
    )
    return trace

"""
Standard test objectives for the swarm optimizer. Each has its minimum 0.
"""

import numpy as np


def sphere(x: np.ndarray) -> float:
    """sum x_i^2, minimum at the origin."""
    x = np.asarray(x, dtype=float)
    return float(np.sum(x * x))


def rastrigin(x: np.ndarray) -> float:
    """10 n + sum(x_i^2 - 10 cos(2 pi x_i)), minimum at the origin."""
    x = np.asarray(x, dtype=float)
    return float(10.0 * x.size + np.sum(x * x - 10.0 * np.cos(2.0 * np.pi * x)))


def rosenbrock(x: np.ndarray) -> float:
    """sum 100 (x_{i+1} - x_i^2)^2 + (1 - x_i)^2, minimum at (1, ..., 1)."""
    x = np.asarray(x, dtype=float)
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (1.0 - x[:-1]) ** 2))


BENCHMARKS = {
    "sphere": sphere,
    "rastrigin": rastrigin,
    "rosenbrock": rosenbrock,
}

"""
App utilities package
"""

from src.app.utils.benchmarks import BENCHMARKS, sphere, rastrigin, rosenbrock

__all__ = ["BENCHMARKS", "sphere", "rastrigin", "rosenbrock"]

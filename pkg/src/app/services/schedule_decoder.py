"""
Schedule Decoder Service
Turns cleaning intervals into the binary status matrix, and swarm positions into intervals.
"""

import math
from typing import List, Sequence

from src.app.core.model_config import INTERVAL_MAX_MONTHS, INTERVAL_MIN_MONTHS
from src.app.models.schedule import CleaningSchedule


def clean_steps_for(interval: int, horizon: int) -> List[int]:
    """Months {d, 2d, ...} <= horizon; an interval of 0 never cleans."""
    if interval < 0:
        raise ValueError(f"interval must be non-negative, got {interval}")
    if interval == 0:
        return []
    return list(range(interval, horizon + 1, interval))


def decode_intervals(intervals: Sequence[int], horizon: int) -> CleaningSchedule:
    """
    Decode per-exchanger intervals into y[n][t].

    Args:
        intervals: Months between cleanings per exchanger (0 = never)
        horizon: t_F in months

    Returns:
        CleaningSchedule whose row n has floor(horizon / d) zeros
    """
    matrix: List[List[int]] = []
    for d in intervals:
        if int(d) != d:
            raise ValueError(f"intervals must be integers, got {d}")
        row = [1] * horizon
        for t in clean_steps_for(int(d), horizon):
            row[t - 1] = 0
        matrix.append(row)
    return CleaningSchedule(intervals=[int(d) for d in intervals], horizon=horizon, matrix=matrix)


def decode_position(
    position: Sequence[float],
    low: int = INTERVAL_MIN_MONTHS,
    high: int = INTERVAL_MAX_MONTHS,
) -> List[int]:
    """
    Round a continuous swarm position to integer intervals.

    Halves round up (floor(x + 0.5)); results are clamped to [low, high].
    """
    return [min(high, max(low, int(math.floor(x + 0.5)))) for x in position]

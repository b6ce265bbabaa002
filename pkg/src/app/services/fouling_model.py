"""
Fouling Model Service
Kern-Seaton asymptotic fouling with perfect cleaning resets, sampled monthly.
"""

import math
from typing import Iterable, List

from src.app.models.fouling import FoulingParams, ResistanceTimeline
from src.app.models.thermal import ExchangerGeometry
from src.app.services.heat_exchanger import overall_u


def fouling_resistance(params: FoulingParams, elapsed: float) -> float:
    """
    R_f = a (1 - exp(-b t)).

    Args:
        params: Asymptote a (m2K/W) and rate b (1/month)
        elapsed: Months since the surface was last clean

    Returns:
        Fouling resistance in m2K/W, in [0, a)
    """
    if elapsed < 0.0:
        raise ValueError("elapsed time must be non-negative")
    return -params.asymptote * math.expm1(-params.rate * elapsed)


def resistance_timeline(params: FoulingParams, clean_steps: Iterable[int], horizon: int) -> ResistanceTimeline:
    """
    Monthly resistance over the horizon.

    A clean month records 0 (the exchanger is offline) and the fouling clock
    restarts from that month, so month t sees t - t_last_clean elapsed months.
    """
    steps = frozenset(int(s) for s in clean_steps)
    outside = sorted(s for s in steps if not 1 <= s <= horizon)
    if outside:
        raise ValueError(f"clean steps {outside} outside 1..{horizon}")

    values: List[float] = []
    last_clean = 0
    for t in range(1, horizon + 1):
        if t in steps:
            last_clean = t
            values.append(0.0)
        else:
            values.append(fouling_resistance(params, t - last_clean))
    return ResistanceTimeline(values=values, clean_steps=steps)


def effective_ua(geom: ExchangerGeometry, r_f: float, r_f_outer: float = 0.0) -> float:
    """UA (W/K) with the dynamic resistance lumped on the tube side."""
    return geom.area * overall_u(geom, r_f, r_f_outer)


def ua_timeline(
    geom: ExchangerGeometry,
    params: FoulingParams,
    clean_steps: Iterable[int],
    horizon: int,
    r_f_outer: float = 0.0,
) -> List[float]:
    """Effective UA per month; clean months carry the clean UA."""
    timeline = resistance_timeline(params, clean_steps, horizon)
    return [effective_ua(geom, r_f, r_f_outer) for r_f in timeline.values]

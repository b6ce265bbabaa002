"""
Heat Exchanger Service
Steady-state model of a single counterflow shell-and-tube exchanger.

Closed-form outlets follow the k1/k2 formulation:
    k1 = m_h c_p,h / (m_c c_p,c)      k2 = UA / (m_h c_p,h)
with the LMTD correction F applied inside the exponent, exp(-k2 F (k1 - 1)).
"""

import math
import sys
from typing import Optional, Tuple

from src.app.core.exceptions import EnergyBalanceError, TemperatureCrossError
from src.app.core.model_config import (
    BALANCED_FLOW_THRESHOLD,
    ENERGY_BALANCE_RELATIVE_TOLERANCE,
    LMTD_EQUAL_ENDS_RELATIVE,
)
from src.app.models.thermal import ExchangerGeometry, ExchangerResult, StreamState

_FLOAT_EPS = sys.float_info.epsilon


def lmtd(dt_hot_end: float, dt_cold_end: float) -> float:
    """
    Log mean temperature difference of a counterflow exchanger.

    Args:
        dt_hot_end: T_h,i - T_c,o (K)
        dt_cold_end: T_h,o - T_c,i (K)

    Returns:
        (dT1 - dT2) / ln(dT1 / dT2), or dT1 when the ends are equal

    Raises:
        TemperatureCrossError: If either end difference is not positive
    """
    if dt_hot_end <= 0.0 or dt_cold_end <= 0.0:
        raise TemperatureCrossError(
            f"Temperature cross: end differences {dt_hot_end:.6g} K / {dt_cold_end:.6g} K must be positive"
        )
    if abs(dt_hot_end - dt_cold_end) <= LMTD_EQUAL_ENDS_RELATIVE * dt_hot_end:
        return dt_hot_end
    return (dt_hot_end - dt_cold_end) / math.log(dt_hot_end / dt_cold_end)


def overall_u(geom: ExchangerGeometry, r_f_inner: float, r_f_outer: float) -> float:
    """
    Overall heat-transfer coefficient referenced to the outer tube area.

    1/U = d_o/(d_i h_i) + d_o R_f,i/d_i + d_o ln(d_o/d_i)/(2 k_w) + R_f,o + 1/h_o
    """
    if r_f_inner < 0.0 or r_f_outer < 0.0:
        raise ValueError("fouling resistances must be non-negative")
    ratio = geom.d_outer / geom.d_inner
    resistance = (
        ratio / geom.h_tube
        + ratio * r_f_inner
        + geom.d_outer * math.log(ratio) / (2.0 * geom.wall_conductivity)
        + r_f_outer
        + 1.0 / geom.h_shell
    )
    return 1.0 / resistance


def effectiveness(k1: float, k2f: float) -> float:
    """
    Hot-side effectiveness (T_h,i - T_h,o) / (T_h,i - T_c,i).

    Equals (E - 1) / (E - k1) with E = exp(-k2 F (k1 - 1)); evaluated through
    expm1 so the near-balanced case keeps full precision, and rewritten in
    exp(-x) when the exponent is positive so large NTU cannot overflow.
    """
    if k2f <= 0.0:
        return 0.0
    if abs(k1 - 1.0) < BALANCED_FLOW_THRESHOLD:
        return k2f / (1.0 + k2f)
    x = -k2f * (k1 - 1.0)
    if x <= 0.0:
        em1 = math.expm1(x)
        return em1 / (em1 - (k1 - 1.0))
    inverse = math.exp(-x)
    return -math.expm1(-x) / (1.0 - k1 * inverse)


def solve_exchanger(
    t_cold_in: float,
    c_cold: float,
    t_hot_in: float,
    c_hot: float,
    ua: float,
    f: float = 1.0,
) -> Tuple[float, float, float]:
    """
    Scalar core used by the network sweep.

    Args:
        t_cold_in / t_hot_in: Inlet temperatures (K)
        c_cold / c_hot: Heat capacity rates m c_p (W/K)
        ua: Effective UA (W/K); 0 passes both streams through
        f: LMTD correction factor

    Returns:
        (t_cold_out, t_hot_out, duty)
    """
    if ua <= 0.0:
        return t_cold_in, t_hot_in, 0.0
    k1 = c_hot / c_cold
    k2 = ua / c_hot
    duty = c_hot * effectiveness(k1, k2 * f) * (t_hot_in - t_cold_in)
    return t_cold_in + duty / c_cold, t_hot_in - duty / c_hot, duty


def check_energy_balance(
    t_cold_in: float,
    t_cold_out: float,
    c_cold: float,
    t_hot_in: float,
    t_hot_out: float,
    c_hot: float,
    tolerance: float = ENERGY_BALANCE_RELATIVE_TOLERANCE,
) -> float:
    """
    Compare the cold-side gain with the hot-side release.

    Returns:
        The cold-side duty

    Raises:
        EnergyBalanceError: If the two disagree beyond `tolerance` relative,
            plus the rounding slack of the temperatures themselves
    """
    q_cold = c_cold * (t_cold_out - t_cold_in)
    q_hot = c_hot * (t_hot_in - t_hot_out)
    slack = 8.0 * _FLOAT_EPS * (c_cold * abs(t_cold_out) + c_hot * abs(t_hot_in))
    if abs(q_cold - q_hot) > tolerance * max(1.0, abs(q_cold)) + slack:
        raise EnergyBalanceError(
            f"Energy balance violated: cold side {q_cold:.9g} W vs hot side {q_hot:.9g} W"
        )
    return q_cold


def exchanger_outlets(
    cold_in: StreamState,
    hot_in: StreamState,
    ua: float,
    f: float = 1.0,
    area: Optional[float] = None,
    check_cross: bool = False,
) -> ExchangerResult:
    """
    Outlet temperatures and duty of one counterflow exchanger.

    Args:
        cold_in: Cold (crude) inlet state
        hot_in: Hot inlet state
        ua: Effective UA in W/K (0 = bypass)
        f: LMTD correction factor, 0 < f <= 1
        area: When given, overall_u is reported as ua / area
        check_cross: Raise TemperatureCrossError for an active exchanger whose
            hot inlet is not hotter than its cold inlet

    Returns:
        ExchangerResult with duty taken from the cold-side balance
    """
    if ua < 0.0:
        raise ValueError("ua must be non-negative")
    if not 0.0 < f <= 1.0:
        raise ValueError("LMTD correction must satisfy 0 < f <= 1")

    c_cold = cold_in.heat_capacity_rate
    c_hot = hot_in.heat_capacity_rate
    t_cold_out, t_hot_out, _ = solve_exchanger(
        cold_in.temperature, c_cold, hot_in.temperature, c_hot, ua, f
    )
    duty = check_energy_balance(
        cold_in.temperature, t_cold_out, c_cold, hot_in.temperature, t_hot_out, c_hot
    )
    log_mean = exchanger_lmtd(cold_in.temperature, t_cold_out, hot_in.temperature, t_hot_out, ua, check_cross)
    return ExchangerResult(
        t_cold_out=t_cold_out,
        t_hot_out=t_hot_out,
        duty=duty,
        overall_u=ua / area if area else 0.0,
        lmtd=log_mean,
        bypassed=ua == 0.0,
        t_cold_in=cold_in.temperature,
        t_hot_in=hot_in.temperature,
    )


def exchanger_lmtd(
    t_cold_in: float,
    t_cold_out: float,
    t_hot_in: float,
    t_hot_out: float,
    ua: float,
    check_cross: bool,
) -> Optional[float]:
    if ua <= 0.0:
        return None
    dt_hot_end = t_hot_in - t_cold_out
    dt_cold_end = t_hot_out - t_cold_in
    if t_hot_in <= t_cold_in:
        if check_cross:
            # Propagates the cross as an infeasible operating point
            lmtd(dt_hot_end, dt_cold_end)
        return None
    if dt_hot_end > 0.0 and dt_cold_end > 0.0:
        return lmtd(dt_hot_end, dt_cold_end)
    # Ends collapsed below float resolution at very high NTU
    return None

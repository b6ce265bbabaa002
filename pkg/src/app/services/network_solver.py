"""
Network Solver Service
Threads the cold stream and every hot stream through the exchanger network.

The cold stream is swept in path order. Hot inlet temperatures of exchangers
that sit downstream on a hot stream are updated as soon as their predecessor
is solved; sweeps repeat until no inter-exchanger temperature moves by more
than the tolerance.
"""

from typing import Dict, List, Optional, Sequence

from src.app.core.exceptions import NoConvergenceError
from src.app.core.model_config import NETWORK_MAX_SWEEPS, NETWORK_TOLERANCE_K
from src.app.models.thermal import ExchangerResult, NetworkSolution, NetworkTopology
from src.app.services.heat_exchanger import exchanger_lmtd, check_energy_balance, solve_exchanger


def solve_network(
    topo: NetworkTopology,
    per_exchanger_ua: Sequence[float],
    bypassed: Sequence[bool],
    lmtd_corrections: Optional[Sequence[float]] = None,
    areas: Optional[Sequence[float]] = None,
    tolerance: float = NETWORK_TOLERANCE_K,
    max_sweeps: int = NETWORK_MAX_SWEEPS,
) -> NetworkSolution:
    """
    Simultaneous steady-state solve of the whole network.

    Args:
        topo: Network wiring and inlet boundary states
        per_exchanger_ua: UA (W/K) per exchanger, indexed like topo.exchangers
        bypassed: True where the exchanger is offline (both streams pass through)
        lmtd_corrections: F per exchanger (default 1.0)
        areas: Outer areas, only used to report overall_u
        tolerance: Max absolute temperature change (K) between sweeps at convergence
        max_sweeps: Sweep cap

    Returns:
        NetworkSolution with one ExchangerResult per exchanger in cold-path order

    Raises:
        NoConvergenceError: If the sweep cap is reached
        TemperatureCrossError: If an active exchanger sees a hot inlet not above its cold inlet
    """
    n = len(topo.exchangers)
    if len(per_exchanger_ua) != n or len(bypassed) != n:
        raise ValueError(f"expected {n} UA values and bypass flags, got {len(per_exchanger_ua)} / {len(bypassed)}")
    corrections = list(lmtd_corrections) if lmtd_corrections is not None else [1.0] * n
    if len(corrections) != n:
        raise ValueError(f"expected {n} LMTD corrections, got {len(corrections)}")

    index = {ex_id: i for i, ex_id in enumerate(topo.exchangers)}
    boundary = topo.boundary
    c_cold = boundary.cold.heat_capacity_rate

    stream_of: List[str] = [topo.hot_assignments[ex_id].stream for ex_id in topo.exchangers]
    c_hot: List[float] = [boundary.hot[s].heat_capacity_rate for s in stream_of]
    successor: List[Optional[int]] = [None] * n
    for ex_id, nxt in topo.hot_successor().items():
        successor[index[ex_id]] = index[nxt] if nxt is not None else None

    # Hot inlet estimates start at the stream inlet temperature
    hot_in: List[float] = [boundary.hot[s].temperature for s in stream_of]

    cold_in: List[float] = [0.0] * n
    # Hot inlet each exchanger was last solved with; hot_in may move after that
    hot_in_used: List[float] = [0.0] * n
    cold_out: List[float] = [0.0] * n
    hot_out: List[float] = [0.0] * n
    duty: List[float] = [0.0] * n
    first_on_chain = [topo.hot_assignments[ex_id].visit_order == 1 for ex_id in topo.exchangers]

    sweeps = 0
    change = float("inf")
    while change > tolerance:
        if sweeps >= max_sweeps:
            raise NoConvergenceError(
                f"Network did not converge after {max_sweeps} sweeps (last change {change:.3e} K)",
                sweeps=sweeps,
                residual=change,
            )
        sweeps += 1
        change = 0.0
        t_cold = boundary.cold.temperature
        for i in range(n):
            ua = 0.0 if bypassed[i] else per_exchanger_ua[i]
            t_co, t_ho, q = solve_exchanger(t_cold, c_cold, hot_in[i], c_hot[i], ua, corrections[i])

            change = max(change, abs(t_cold - cold_in[i]), abs(t_co - cold_out[i]), abs(t_ho - hot_out[i]))
            cold_in[i], cold_out[i], hot_out[i], duty[i] = t_cold, t_co, t_ho, q
            hot_in_used[i] = hot_in[i]

            nxt = successor[i]
            if nxt is not None and not first_on_chain[nxt]:
                change = max(change, abs(t_ho - hot_in[nxt]))
                hot_in[nxt] = t_ho
            t_cold = t_co

    results: List[ExchangerResult] = []
    for i in range(n):
        active = not bypassed[i] and per_exchanger_ua[i] > 0.0
        ua = per_exchanger_ua[i] if active else 0.0
        q = check_energy_balance(cold_in[i], cold_out[i], c_cold, hot_in_used[i], hot_out[i], c_hot[i])
        results.append(ExchangerResult(
            t_cold_out=cold_out[i],
            t_hot_out=hot_out[i],
            duty=q,
            overall_u=ua / areas[i] if areas is not None and areas[i] else 0.0,
            lmtd=exchanger_lmtd(cold_in[i], cold_out[i], hot_in_used[i], hot_out[i], ua, check_cross=True),
            bypassed=bool(bypassed[i]),
            t_cold_in=cold_in[i],
            t_hot_in=hot_in_used[i],
        ))

    hot_outlets: Dict[str, float] = {}
    for stream in boundary.hot:
        chain = topo.hot_chain(stream)
        if chain:
            hot_outlets[stream] = hot_out[index[chain[-1]]]

    return NetworkSolution(
        results=results,
        sweeps=sweeps,
        cold_outlet_temperature=cold_out[-1],
        hot_outlet_temperatures=hot_outlets,
    )

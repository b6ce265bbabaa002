"""
Report Service
Summarises a run directory: reference cost table, net savings and savings fraction.
"""

import os
from dataclasses import dataclass, field
from typing import List, Optional

import pandas as pd
from loguru import logger

from src.app.core.exceptions import MissingArtifactError
from src.app.models.schedule import CostBreakdown, ReferenceBreakdowns
from src.app.services.artifact_writer import (
    BREAKDOWN_FILE,
    DUTY_SERIES_FILE,
    EXCHANGER_SAVINGS_FILE,
    FITNESS_HISTORY_FILE,
    existing_artifact,
)
from src.app.services.savings import net_savings, savings_fraction

TABLE_ROWS = (("Clean", "clean"), ("Fouled", "fouled"), ("Schedule", "scheduled"))


@dataclass
class ReportSummary:
    table: pd.DataFrame
    net_savings: float
    maximum_savings: float
    savings_fraction: float
    paying_exchangers: List[str] = field(default_factory=list)
    plots: List[str] = field(default_factory=list)


def load_breakdowns(run_dir: str) -> ReferenceBreakdowns:
    if not os.path.isdir(run_dir):
        raise MissingArtifactError(f"Run directory not found: {run_dir}")
    path = existing_artifact(run_dir, BREAKDOWN_FILE)
    if path is None:
        raise MissingArtifactError(f"{BREAKDOWN_FILE} not found in {run_dir}; run simulate or optimize first")
    with open(path, "r", encoding="utf-8") as f:
        return ReferenceBreakdowns.model_validate_json(f.read())


def cost_table(breakdowns: ReferenceBreakdowns) -> pd.DataFrame:
    """Energy recovery, cleaning, pumping and net benefit per reference condition."""
    rows = []
    for label, attr in TABLE_ROWS:
        b: CostBreakdown = getattr(breakdowns, attr)
        rows.append({
            "condition": label,
            "energy_recovery": b.recovered_energy_value,
            "cleaning_cost": b.cleaning_cost_total,
            "pumping_cost": b.pumping_cost_total,
            "net_benefit": b.net_benefit,
        })
    return pd.DataFrame(rows).set_index("condition")


def _money(value: float) -> str:
    # -0.0 + 0.0 prints as 0
    return f"{value + 0.0:,.0f}"


def run_report(run_dir: str, plot: bool = False) -> ReportSummary:
    """
    Print the reference table, net savings and savings fraction of a run.

    Raises:
        MissingArtifactError: If breakdown.json (or a file needed for --plot) is absent
        DegenerateReferenceError: If the clean reference does not beat the fouled one;
            the table is printed first
    """
    breakdowns = load_breakdowns(run_dir)
    table = cost_table(breakdowns)

    print("Cost of energy recovery by condition")
    print(table.to_string(float_format=_money))
    print()

    savings = net_savings(breakdowns.scheduled, breakdowns.fouled)
    maximum = net_savings(breakdowns.clean, breakdowns.fouled)
    print(f"Net savings vs fouled:      {_money(savings)}")
    print(f"Maximum potential savings:  {_money(maximum)}")

    fraction = savings_fraction(breakdowns.scheduled, breakdowns.fouled, breakdowns.clean)
    print(f"Savings fraction:           {fraction * 100.0:.1f}%")

    paying: List[str] = []
    savings_path = existing_artifact(run_dir, EXCHANGER_SAVINGS_FILE)
    if savings_path is not None:
        per_exchanger = pd.read_csv(savings_path)
        paying = per_exchanger.loc[per_exchanger["net_savings"] > 0.0, "exchanger"].tolist()
        print()
        print("Net savings by exchanger (vs fouled)")
        print(per_exchanger[["exchanger", "interval", "cleanings", "net_savings"]].to_string(
            index=False, float_format=_money
        ))
        print(f"Exchangers paying back their cleaning: {', '.join(paying) if paying else 'none'}")

    plots: List[str] = []
    if plot:
        plots = render_plots(run_dir)

    logger.info(f"[REPORT] {run_dir}: net savings {savings:,.2f}, fraction {fraction:.4f}")
    return ReportSummary(
        table=table,
        net_savings=savings,
        maximum_savings=maximum,
        savings_fraction=fraction,
        paying_exchangers=paying,
        plots=plots,
    )


def render_plots(run_dir: str) -> List[str]:
    """fitness_history.png (optimize runs only) and duty_series.png."""
    from src.app.utils.plotting import plot_duty_series, plot_fitness_history

    written: List[str] = []
    duty_path: Optional[str] = existing_artifact(run_dir, DUTY_SERIES_FILE)
    if duty_path is None:
        raise MissingArtifactError(f"{DUTY_SERIES_FILE} not found in {run_dir}")
    written.append(plot_duty_series(pd.read_csv(duty_path), os.path.join(run_dir, "duty_series.png")))

    history_path = existing_artifact(run_dir, FITNESS_HISTORY_FILE)
    if history_path is not None:
        written.append(
            plot_fitness_history(pd.read_csv(history_path), os.path.join(run_dir, "fitness_history.png"))
        )
    else:
        logger.warning(f"[REPORT] {FITNESS_HISTORY_FILE} not found in {run_dir}; skipping fitness plot")
    return written

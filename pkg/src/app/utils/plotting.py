"""
Plot helpers for run reports. Renders off-screen to PNG.
"""

import os

import matplotlib as mpl
mpl.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd
from loguru import logger

CONDITION_STYLES = {
    "clean": {"color": "tab:blue", "linestyle": "-"},
    "fouled": {"color": "tab:red", "linestyle": "--"},
    "scheduled": {"color": "tab:green", "linestyle": "-"},
}


def plot_fitness_history(history: pd.DataFrame, path: str) -> str:
    """Best-so-far fitness against iteration (columns: iteration, best_fitness)."""
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(history["iteration"], history["best_fitness"], color="tab:blue", linewidth=1.5)
    ax.set_xlabel("Iteration")
    ax.set_ylabel("Best fitness (total cost)")
    ax.set_xlim(1, max(1, int(history["iteration"].max())))
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    logger.info(f"[REPORT] Wrote {os.path.basename(path)}")
    return path


def plot_duty_series(duty_series: pd.DataFrame, path: str) -> str:
    """
    Total network duty per month for each condition.

    Expects long-format columns: month, exchanger, condition, duty_watts.
    """
    totals = (
        duty_series.groupby(["condition", "month"], sort=True)["duty_watts"].sum().unstack("condition")
    )
    fig, ax = plt.subplots(figsize=(7, 4))
    for condition in totals.columns:
        style = CONDITION_STYLES.get(condition, {})
        ax.plot(totals.index, totals[condition] / 1e6, label=condition, linewidth=1.5, **style)
    ax.set_xlabel("Month")
    ax.set_ylabel("Network duty (MW)")
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    logger.info(f"[REPORT] Wrote {os.path.basename(path)}")
    return path

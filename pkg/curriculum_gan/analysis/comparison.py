"""Strategy comparison: median curves over seeds and iterations to the baseline's final value."""

import logging
from typing import Dict, List, Optional

import numpy as np
import pandas as pd

from curriculum_gan.models.records import ComparisonSummary, StrategyComparison
from curriculum_gan.utils.errors import ConfigError

logger = logging.getLogger(__name__)

METRIC_DIRECTIONS = {
    "sliced_wasserstein": "lower",
    "mode_coverage": "higher",
    "hq_fraction": "higher",
}

# relative tolerance under which two final medians count as a tie
TIE_TOLERANCE = 1e-12


def median_curves(run_logs: List[pd.DataFrame]) -> pd.DataFrame:
    """Per-iteration median of every metric column across seeds."""
    if not run_logs:
        raise ConfigError("no run logs to aggregate")
    stacked = pd.concat(run_logs, ignore_index=True)
    return stacked.groupby("iteration", sort=True).median(numeric_only=True).reset_index()


def iterations_to_threshold(curve: pd.DataFrame, threshold: float, metric: str = "sliced_wasserstein") -> Optional[int]:
    """First logged iteration whose median metric reaches ``threshold`` (lower is better)."""
    reached = curve.loc[curve[metric] <= threshold, "iteration"]
    if reached.empty:
        return None
    return int(reached.iloc[0])


def _verdict(value: float, baseline: float, direction: str) -> str:
    if value is None or baseline is None or np.isnan(value) or np.isnan(baseline):
        return "n/a"
    if abs(value - baseline) <= TIE_TOLERANCE * max(1.0, abs(baseline)):
        return "tie"
    better = value < baseline if direction == "lower" else value > baseline
    return "win" if better else "loss"


def _final(curve: pd.DataFrame, metric: str) -> Optional[float]:
    if metric not in curve or curve.empty:
        return None
    value = curve[metric].iloc[-1]
    return None if pd.isna(value) else float(value)


def compare(
    runs: Dict[str, List[pd.DataFrame]],
    baseline: str = "none",
    seeds: Optional[List[int]] = None,
) -> ComparisonSummary:
    """Compare strategies against ``baseline``.

    The threshold is the baseline's final median sliced-Wasserstein value,
    logged at the last iteration of the grid. Each strategy gets the first
    iteration its median curve reaches the threshold, the speedup as that
    iteration over the baseline's iterations (the last grid point), and
    win/loss/tie verdicts on the final medians of every metric.

    Raises:
        ConfigError: missing baseline, or runs with different iteration grids
    """
    if baseline not in runs:
        raise ConfigError(f"baseline {baseline!r} not among compared runs {sorted(runs)}")
    curves = {name: median_curves(logs) for name, logs in runs.items()}
    grid = curves[baseline]["iteration"].tolist()
    for name, curve in curves.items():
        if curve["iteration"].tolist() != grid:
            raise ConfigError(f"run {name!r} was logged on a different iteration grid than {baseline!r}")
    if not grid:
        raise ConfigError("runs logged no evaluations")

    base_curve = curves[baseline]
    threshold = _final(base_curve, "sliced_wasserstein")
    base_iterations = int(grid[-1])

    results = []
    for name, curve in curves.items():
        reached = iterations_to_threshold(curve, threshold)
        speedup = None
        if reached is not None:
            speedup = reached / base_iterations
        verdicts = {
            metric: _verdict(_final(curve, metric), _final(base_curve, metric), direction)
            for metric, direction in METRIC_DIRECTIONS.items()
        }
        results.append(
            StrategyComparison(
                strategy=name,
                iterations_to_threshold=reached,
                speedup=speedup,
                final_sliced_wasserstein=_final(curve, "sliced_wasserstein"),
                final_mode_coverage=_final(curve, "mode_coverage"),
                final_hq_fraction=_final(curve, "hq_fraction"),
                verdicts=verdicts,
            )
        )
        logger.info(f"{name}: reaches {threshold:.4f} at {reached} (baseline {base_iterations}), verdicts {verdicts}")

    return ComparisonSummary(
        baseline=baseline,
        threshold=threshold,
        seeds=list(seeds or []),
        total_iterations=int(grid[-1]),
        strategies=results,
    )

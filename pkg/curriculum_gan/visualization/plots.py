"""SVG plots: sample scatter, convergence overlay, easiness-weight decay curves.

Every plot is a pure function of in-memory tables, so it can be rebuilt
offline from the CSV files of a run directory.
"""

from pathlib import Path
from typing import Dict, Optional, Union

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
import pandas as pd  # noqa: E402

from curriculum_gan.utils.errors import ArtifactIOError  # noqa: E402

# fixed hash salt and no date keep SVG bytes reproducible
plt.rcParams["svg.hashsalt"] = "curriculum-gan"
plt.rcParams["svg.fonttype"] = "none"

STRATEGY_COLORS = {
    "none": "#444444",
    "batches": "#1f77b4",
    "weighting": "#2ca02c",
    "sampling": "#d62728",
}


def _save(fig, path: Union[str, Path]) -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(path, format="svg", metadata={"Date": None})
    except OSError as e:
        raise ArtifactIOError(f"cannot write plot {path}: {e}")
    finally:
        plt.close(fig)
    return path


def plot_samples(real: np.ndarray, fake: np.ndarray, path: Union[str, Path], title: str = "") -> Path:
    """Scatter of real vs generated samples (first two coordinates)."""
    fig, ax = plt.subplots(figsize=(5, 5))
    ax.scatter(real[:, 0], real[:, 1] if real.shape[1] > 1 else np.zeros(len(real)), s=2, alpha=0.3, c="#888888", label="real")
    ax.scatter(fake[:, 0], fake[:, 1] if fake.shape[1] > 1 else np.zeros(len(fake)), s=2, alpha=0.5, c="#d62728", label="generated")
    ax.set_aspect("equal", adjustable="datalim")
    ax.legend(loc="upper right", markerscale=4)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    return _save(fig, path)


def plot_convergence(
    curves: Dict[str, pd.DataFrame],
    path: Union[str, Path],
    metric: str = "sliced_wasserstein",
    threshold: Optional[float] = None,
) -> Path:
    """Median metric curve per strategy, with the baseline threshold as a dashed line."""
    fig, ax = plt.subplots(figsize=(7, 4))
    for name, curve in curves.items():
        ax.plot(curve["iteration"], curve[metric], label=name, color=STRATEGY_COLORS.get(name))
    if threshold is not None:
        ax.axhline(threshold, linestyle="--", color="#999999", linewidth=1, label="baseline final")
    ax.set_xlabel("iteration")
    ax.set_ylabel(metric.replace("_", " "))
    ax.legend()
    fig.tight_layout()
    return _save(fig, path)


def plot_weight_decay(table: pd.DataFrame, path: Union[str, Path]) -> Path:
    """One curve per difficulty score: easiness weight over iterations (columns ``t`` and ``s=<score>``)."""
    fig, ax = plt.subplots(figsize=(7, 4))
    score_columns = [c for c in table.columns if c != "t"]
    colors = plt.cm.viridis(np.linspace(0.0, 1.0, max(1, len(score_columns))))
    for column, color in zip(score_columns, colors):
        ax.plot(table["t"], table[column], label=column, color=color)
    ax.set_xlabel("iteration t")
    ax.set_ylabel("easiness weight")
    ax.legend(fontsize="small")
    fig.tight_layout()
    return _save(fig, path)

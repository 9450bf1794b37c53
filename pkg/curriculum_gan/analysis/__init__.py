"""Evaluation metrics and strategy comparisons."""

from .comparison import compare, iterations_to_threshold, median_curves
from .metrics import evaluate, hq_fraction, mode_coverage, random_directions, sliced_wasserstein

__all__ = [
    "compare",
    "evaluate",
    "hq_fraction",
    "iterations_to_threshold",
    "median_curves",
    "mode_coverage",
    "random_directions",
    "sliced_wasserstein",
]

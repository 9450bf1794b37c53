"""SVG plots for runs, comparisons and weight schedules."""

from .plots import plot_convergence, plot_samples, plot_weight_decay

__all__ = ["plot_convergence", "plot_samples", "plot_weight_decay"]

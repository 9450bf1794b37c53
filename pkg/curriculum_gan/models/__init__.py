"""Data models for curriculum GAN experiments."""

from .config import (
    Activation,
    CurriculumConfig,
    DataConfig,
    DifficultyProxy,
    GanConfig,
    LossKind,
    MetricsConfig,
    Strategy,
    WeightingMode,
    default_stage_cuts,
    gamma_for_horizon,
)
from .records import (
    RUN_LOG_COLUMNS,
    ComparisonSummary,
    ExperimentSpec,
    LossReport,
    MetricReport,
    RunStatus,
    RunSummary,
    StrategyComparison,
)

__all__ = [
    "Activation",
    "CurriculumConfig",
    "DataConfig",
    "DifficultyProxy",
    "GanConfig",
    "LossKind",
    "MetricsConfig",
    "Strategy",
    "WeightingMode",
    "default_stage_cuts",
    "gamma_for_horizon",
    "RUN_LOG_COLUMNS",
    "ComparisonSummary",
    "ExperimentSpec",
    "LossReport",
    "MetricReport",
    "RunStatus",
    "RunSummary",
    "StrategyComparison",
]

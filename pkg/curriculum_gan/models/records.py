"""Record models for losses, metrics, run summaries and comparisons."""

from enum import Enum
from pathlib import Path
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, model_validator

from curriculum_gan.models.config import CurriculumConfig, DataConfig, GanConfig, MetricsConfig

RUN_LOG_COLUMNS = [
    "iteration",
    "d_loss_real",
    "d_loss_fake",
    "g_loss",
    "mean_weight",
    "sliced_wasserstein",
    "mode_coverage",
    "hq_fraction",
]


class RunStatus(str, Enum):
    OK = "ok"
    FAILED = "failed"


class LossReport(BaseModel):
    """Losses of one trainer step."""

    iteration: int
    d_loss_real: float
    d_loss_fake: float
    g_loss: float
    mean_weight: float
    pool_size: Optional[int] = None


class MetricReport(BaseModel):
    """Generative-quality metrics on a fixed noise bank."""

    sliced_wasserstein: float = Field(ge=0)
    mode_coverage: Optional[float] = Field(None, ge=0, le=1)
    hq_fraction: Optional[float] = Field(None, ge=0, le=1)


class ExperimentSpec(BaseModel):
    """Everything needed to reproduce a set of training runs."""

    data: DataConfig = DataConfig()
    gan: GanConfig = GanConfig()
    curriculum: CurriculumConfig = CurriculumConfig()
    metrics: MetricsConfig = MetricsConfig()
    seeds: List[int] = Field(default_factory=lambda: [0], min_length=1)
    out_dir: Path = Path("runs")

    @model_validator(mode="after")
    def _sync_iterations(self) -> "ExperimentSpec":
        # the curriculum schedule always spans the trainer's run
        if self.curriculum.total_iterations != self.gan.total_iterations:
            self.curriculum = CurriculumConfig(
                **self.curriculum.model_dump(exclude={"total_iterations"}),
                total_iterations=self.gan.total_iterations,
            )
        return self


class RunSummary(BaseModel):
    """Per-seed summary written next to the run log."""

    status: RunStatus
    seed: int
    strategy: str
    config: Dict
    final_metrics: Optional[MetricReport] = None
    iterations_completed: int = 0
    error: Optional[str] = None


class StrategyComparison(BaseModel):
    strategy: str
    iterations_to_threshold: Optional[int] = None
    speedup: Optional[float] = None
    final_sliced_wasserstein: float
    final_mode_coverage: Optional[float] = None
    final_hq_fraction: Optional[float] = None
    verdicts: Dict[str, str] = Field(default_factory=dict)


class ComparisonSummary(BaseModel):
    """Strategy comparison against the baseline's final median sliced-Wasserstein value."""

    baseline: str
    threshold: float
    seeds: List[int]
    total_iterations: int
    strategies: List[StrategyComparison]

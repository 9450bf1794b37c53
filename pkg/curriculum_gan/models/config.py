"""Configuration models for curriculum, GAN training, data and metrics."""

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field, model_validator

# Reference schedule: 80000 iterations, easy batch until 15000, easy+medium until 25000
REFERENCE_TOTAL_ITERATIONS = 80000
REFERENCE_STAGE_FRACTIONS = (15000 / REFERENCE_TOTAL_ITERATIONS, 25000 / REFERENCE_TOTAL_ITERATIONS)


class Strategy(str, Enum):
    """Curriculum strategies."""
    NONE = "none"
    BATCHES = "batches"
    WEIGHTING = "weighting"
    SAMPLING = "sampling"


class WeightingMode(str, Enum):
    """How easiness weights enter the real-sample term of the discriminator loss."""
    ADDITIVE = "additive"  # loss + mean(w), zero gradient contribution
    MULTIPLICATIVE = "multiplicative"  # per-sample factor on l(D(x))


class LossKind(str, Enum):
    HINGE = "hinge"
    CROSS_ENTROPY = "cross-entropy"


class Activation(str, Enum):
    RELU = "relu"
    LEAKY_RELU = "leaky-relu"
    TANH = "tanh"
    IDENTITY = "identity"


class DifficultyProxy(str, Enum):
    """Analytic difficulty of a synthetic sample."""
    MAHALANOBIS = "mahalanobis"  # distance from mode mean in units of sigma
    EUCLIDEAN = "euclidean"  # raw distance from mode mean


def default_stage_cuts(m: int, total_iterations: int) -> List[int]:
    """Stage cuts scaled from the reference 15000/25000-of-80000 schedule.

    For m=3 the reference fractions are kept exactly; other batch counts get
    evenly spaced cuts ending at the same 31.25% mark.
    """
    if m <= 1:
        return []
    if m == 3:
        fractions = REFERENCE_STAGE_FRACTIONS
    else:
        last = REFERENCE_STAGE_FRACTIONS[-1]
        fractions = tuple(last * j / (m - 1) for j in range(1, m))
    return [int(round(f * total_iterations)) for f in fractions]


def gamma_for_horizon(total_iterations: int) -> float:
    """Decay rate with 10/gamma equal to the run length, so weights settle by the end."""
    return 10.0 / max(1, total_iterations)


class CurriculumConfig(BaseModel):
    """Strategy selector and its parameters.

    ``stage_cuts`` left unset means the reference schedule scaled to
    ``total_iterations`` (see ``default_stage_cuts``).
    """

    strategy: Strategy = Strategy.NONE
    k: float = Field(1.0, gt=0)
    gamma: float = Field(5e-5, gt=0)
    m: int = Field(3, ge=1)
    stage_cuts: Optional[List[int]] = None
    weighting_mode: WeightingMode = WeightingMode.MULTIPLICATIVE
    total_iterations: int = Field(REFERENCE_TOTAL_ITERATIONS, ge=0)

    def resolved_stage_cuts(self) -> List[int]:
        if self.stage_cuts is not None:
            return list(self.stage_cuts)
        return default_stage_cuts(self.m, self.total_iterations)

    @model_validator(mode="after")
    def _check_stage_cuts(self) -> "CurriculumConfig":
        if self.strategy != Strategy.BATCHES:
            return self
        cuts = self.resolved_stage_cuts()
        if len(cuts) != self.m - 1:
            raise ValueError(f"stage_cuts needs m-1={self.m - 1} entries, got {len(cuts)}")
        if any(b <= a for a, b in zip(cuts, cuts[1:])):
            raise ValueError(f"stage_cuts must be strictly increasing, got {cuts}")
        if any(c < 0 or c >= self.total_iterations for c in cuts):
            raise ValueError(f"stage_cuts must lie in [0, {self.total_iterations}), got {cuts}")
        return self


class GanConfig(BaseModel):
    """Trainer settings. Defaults follow the reference setup scaled to toy data."""

    loss_kind: LossKind = LossKind.HINGE
    batch_size: int = Field(64, ge=1)
    total_iterations: int = Field(20000, ge=0)
    d_steps_per_g_step: int = Field(1, ge=1)
    noise_dim: int = Field(8, ge=1)
    hidden_dim: int = Field(64, ge=1)
    g_lr: float = Field(2e-4, gt=0)
    d_lr: float = Field(2e-4, gt=0)
    beta1: float = Field(0.5, ge=0, lt=1)
    beta2: float = Field(0.999, ge=0, lt=1)
    epsilon: float = Field(1e-8, gt=0)
    spectral_norm: bool = True
    eval_every: int = Field(500, ge=1)
    eval_samples: int = Field(2048, ge=256)
    seed: int = 0


class DataConfig(BaseModel):
    """Dataset and score-source selection, in CLI string form."""

    dataset: str = "ring:8,2,0.05"
    samples_per_mode: int = Field(1000, ge=1)
    scores: str = "analytic"
    proxy: Optional[DifficultyProxy] = None
    data_seed: int = 1234


class MetricsConfig(BaseModel):
    n_projections: int = Field(128, ge=1)
    threshold_multiple: float = Field(3.0, gt=0)
    projection_seed: int = 2024

"""Easiness weights and the evolving sampling distribution over real samples."""

import logging
from dataclasses import dataclass
from typing import Union

import numpy as np
from numpy.typing import NDArray

from curriculum_gan.models.config import CurriculumConfig
from curriculum_gan.utils.errors import DegenerateDistributionError

logger = logging.getLogger(__name__)

FloatArray = NDArray[np.float64]


@dataclass(frozen=True, eq=False)
class SampleWeights:
    """Easiness weight of every training sample at iteration ``t``."""

    w: FloatArray
    t: int


@dataclass(frozen=True, eq=False)
class SampleProbabilities:
    """Categorical distribution over training samples at iteration ``t``."""

    p: FloatArray
    t: int


def easiness_weight(
    s: Union[float, FloatArray], t: Union[int, float], k: float, gamma: float
) -> Union[float, FloatArray]:
    """w = 1 - k * s * exp(-gamma * t).

    Easy samples (s < 0) start above 1, hard ones below; all converge to 1.
    Works element-wise on arrays.
    """
    return 1.0 - k * s * np.exp(-gamma * t)


def batch_weights(scores: FloatArray, t: int, config: CurriculumConfig) -> SampleWeights:
    """Per-sample easiness weights for the weighting curriculum."""
    w = easiness_weight(np.asarray(scores, dtype=np.float64), t, config.k, config.gamma)
    return SampleWeights(w=w, t=t)


def sample_probabilities(scores: FloatArray, t: int, config: CurriculumConfig) -> SampleProbabilities:
    """Normalize easiness weights into sampling probabilities.

    For k > 1 the constant k - 1 is added to every weight so none is negative;
    for k <= 1 the weights are used as they are.

    Raises:
        DegenerateDistributionError: every shifted weight is zero
    """
    weights = batch_weights(scores, t, config).w
    shift = max(0.0, config.k - 1.0)
    # rounding can leave -1e-16 where the exact value is 0
    shifted = np.maximum(weights + shift, 0.0)
    total = shifted.sum()
    if not total > 0:
        raise DegenerateDistributionError(
            f"all sampling weights are zero at t={t} (k={config.k}); "
            "use k > 1 or scores that are not all +1"
        )
    return SampleProbabilities(p=shifted / total, t=t)


def draw_indices(probs: SampleProbabilities, count: int, rng: np.random.Generator) -> NDArray[np.int64]:
    """``count`` i.i.d. draws with replacement from ``probs``."""
    return rng.choice(probs.p.size, size=count, replace=True, p=probs.p).astype(np.int64)

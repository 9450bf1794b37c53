"""Curriculum strategies: batches, weighting, sampling, and the no-curriculum baseline."""

from typing import Dict, Type

import numpy as np
from numpy.typing import NDArray

from curriculum_gan.models.config import CurriculumConfig, Strategy

from .base_strategy import BaseStrategy, IterationPlan
from .baseline import NoCurriculum
from .batches import BatchCurriculum
from .pools import ActivePool, active_pool, current_stage
from .sampling import SamplingCurriculum
from .weighting import WeightingCurriculum
from .weights import (
    SampleProbabilities,
    SampleWeights,
    batch_weights,
    draw_indices,
    easiness_weight,
    sample_probabilities,
)

STRATEGIES: Dict[Strategy, Type[BaseStrategy]] = {
    Strategy.NONE: NoCurriculum,
    Strategy.BATCHES: BatchCurriculum,
    Strategy.WEIGHTING: WeightingCurriculum,
    Strategy.SAMPLING: SamplingCurriculum,
}


def build_strategy(config: CurriculumConfig, scores: NDArray[np.float64], ranking: NDArray[np.int64]) -> BaseStrategy:
    return STRATEGIES[Strategy(config.strategy)](config, scores, ranking)


def plan_for_iteration(
    t: int, config: CurriculumConfig, scores: NDArray[np.float64], ranking: NDArray[np.int64]
) -> IterationPlan:
    """One-shot plan for iteration ``t`` (the trainer keeps a strategy instance instead)."""
    return build_strategy(config, scores, ranking).plan(t)


def implied_sampling_distribution(plan: IterationPlan) -> NDArray[np.float64]:
    """Per-sample probability of being drawn under ``plan``.

    For the batch curriculum this is a step function over the difficulty
    ranking, the discrete counterpart of the sampling curriculum.
    """
    return plan.sampling_distribution()


__all__ = [
    "ActivePool",
    "BaseStrategy",
    "BatchCurriculum",
    "IterationPlan",
    "NoCurriculum",
    "STRATEGIES",
    "SampleProbabilities",
    "SampleWeights",
    "SamplingCurriculum",
    "WeightingCurriculum",
    "active_pool",
    "batch_weights",
    "build_strategy",
    "current_stage",
    "draw_indices",
    "easiness_weight",
    "implied_sampling_distribution",
    "plan_for_iteration",
    "sample_probabilities",
]

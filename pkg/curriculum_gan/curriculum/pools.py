"""Cumulative easy-to-hard pools for the batch curriculum."""

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from curriculum_gan.models.config import CurriculumConfig


@dataclass(frozen=True, eq=False)
class ActivePool:
    """The easiest ``size`` samples of the difficulty ranking."""

    size: int
    stage: int
    indices: NDArray[np.int64]


def current_stage(t: int, config: CurriculumConfig) -> int:
    """1-based batch stage: 1 + number of stage cuts already passed."""
    passed = sum(1 for cut in config.resolved_stage_cuts() if cut <= t)
    return min(config.m, 1 + passed)


def active_pool(t: int, config: CurriculumConfig, ranking: NDArray[np.int64]) -> ActivePool:
    """Easiest ceil(j * n / m) samples at stage j. Earlier batches stay in the pool."""
    n = len(ranking)
    stage = current_stage(t, config)
    size = min(n, -(-stage * n // config.m))
    return ActivePool(size=size, stage=stage, indices=np.asarray(ranking[:size], dtype=np.int64))

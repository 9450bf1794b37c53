"""Base class for curriculum strategies."""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional

import numpy as np
from numpy.typing import NDArray

from curriculum_gan.curriculum.weights import SampleProbabilities, draw_indices
from curriculum_gan.models.config import CurriculumConfig


@dataclass(frozen=True, eq=False)
class IterationPlan:
    """What the trainer uses at iteration ``t``.

    Real samples are drawn uniformly from ``eligible`` unless
    ``probabilities`` is set. ``weights`` holds one loss weight per
    training sample (all ones except for the weighting curriculum).
    """

    t: int
    eligible: NDArray[np.int64]
    weights: NDArray[np.float64]
    probabilities: Optional[SampleProbabilities] = None

    def draw(self, count: int, rng: np.random.Generator) -> NDArray[np.int64]:
        """Mini-batch indices, drawn with replacement."""
        if self.probabilities is not None:
            return draw_indices(self.probabilities, count, rng)
        return self.eligible[rng.integers(0, self.eligible.size, size=count)]

    def sampling_distribution(self) -> NDArray[np.float64]:
        """Probability of drawing each training sample under this plan."""
        if self.probabilities is not None:
            return self.probabilities.p.copy()
        p = np.zeros(self.weights.size, dtype=np.float64)
        p[self.eligible] = 1.0 / self.eligible.size
        return p


class BaseStrategy(ABC):
    """Base class for the curriculum policies the trainer consults each iteration."""

    def __init__(self, config: CurriculumConfig, scores: NDArray[np.float64], ranking: NDArray[np.int64]):
        """Initialize with the curriculum config and the normalized scores of the training set."""
        self.config = config
        self.scores = np.asarray(scores, dtype=np.float64)
        self.ranking = np.asarray(ranking, dtype=np.int64)
        self.n = self.scores.size
        self.all_indices = np.arange(self.n, dtype=np.int64)
        self.unit_weights = np.ones(self.n, dtype=np.float64)
        self.logger = logging.getLogger(f"{__name__}.{self.__class__.__name__}")

    @abstractmethod
    def plan(self, t: int) -> IterationPlan:
        """Plan for iteration ``t``."""
        pass

    def log(self, message: str, level: str = "INFO"):
        """Log a message."""
        getattr(self.logger, level.lower())(message)

"""Difficulty-weighted discriminator loss."""

from curriculum_gan.curriculum.base_strategy import BaseStrategy, IterationPlan
from curriculum_gan.curriculum.weights import batch_weights


class WeightingCurriculum(BaseStrategy):
    """Uniform sampling; each real sample's loss term carries its easiness weight."""

    def plan(self, t: int) -> IterationPlan:
        weights = batch_weights(self.scores, t, self.config)
        return IterationPlan(t=t, eligible=self.all_indices, weights=weights.w)

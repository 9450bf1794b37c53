"""Sampling real images from an evolving, easy-first distribution."""

from curriculum_gan.curriculum.base_strategy import BaseStrategy, IterationPlan
from curriculum_gan.curriculum.weights import sample_probabilities


class SamplingCurriculum(BaseStrategy):
    """Draws real samples with probability proportional to their (shifted) easiness weight.

    The distribution is recomputed from scratch every iteration and tends
    to uniform as the weights decay to 1.
    """

    def plan(self, t: int) -> IterationPlan:
        probabilities = sample_probabilities(self.scores, t, self.config)
        return IterationPlan(
            t=t, eligible=self.all_indices, weights=self.unit_weights, probabilities=probabilities
        )

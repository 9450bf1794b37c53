"""No curriculum: uniform sampling, unit weights."""

from curriculum_gan.curriculum.base_strategy import BaseStrategy, IterationPlan


class NoCurriculum(BaseStrategy):
    """Baseline policy."""

    def plan(self, t: int) -> IterationPlan:
        return IterationPlan(t=t, eligible=self.all_indices, weights=self.unit_weights)

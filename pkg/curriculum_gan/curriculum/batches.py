"""Easy-to-hard batch curriculum."""

from curriculum_gan.curriculum.base_strategy import BaseStrategy, IterationPlan
from curriculum_gan.curriculum.pools import active_pool


class BatchCurriculum(BaseStrategy):
    """Trains on the easiest batch first and adds harder batches at each stage cut.

    The ranking is split into ``m`` equally sized batches; pools are
    cumulative so easy samples are kept until the end.
    """

    def __init__(self, config, scores, ranking):
        super().__init__(config, scores, ranking)
        self._stage = None

    def plan(self, t: int) -> IterationPlan:
        pool = active_pool(t, self.config, self.ranking)
        if pool.stage != self._stage:
            self.log(f"t={t}: stage {pool.stage}/{self.config.m}, pool of {pool.size}/{self.n} easiest samples")
            self._stage = pool.stage
        return IterationPlan(t=t, eligible=pool.indices, weights=self.unit_weights)

"""Alternating minimax trainer with the curriculum plan injected into the discriminator objective."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np
import pandas as pd
from numpy.typing import NDArray

from curriculum_gan.analysis.metrics import evaluate
from curriculum_gan.curriculum import BaseStrategy, build_strategy
from curriculum_gan.data_sources.synthetic import Dataset
from curriculum_gan.difficulty.scoring import rank_by_difficulty
from curriculum_gan.gan.losses import discriminator_loss, generator_loss
from curriculum_gan.models.config import Activation, CurriculumConfig, GanConfig, MetricsConfig
from curriculum_gan.models.records import RUN_LOG_COLUMNS, LossReport, MetricReport
from curriculum_gan.nn import AdamState, Mlp, backward, checkpoint_dict, forward, optimize
from curriculum_gan.utils.errors import ConfigError, ScoreAlignmentError

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class TrainerState:
    """Networks, optimizers, iteration counter, rng streams and logs of one run."""

    generator: Mlp
    g_opt: AdamState
    discriminator: Mlp
    d_opt: AdamState
    noise_rng: np.random.Generator
    sampler_rng: np.random.Generator
    eval_noise: NDArray[np.float64]
    t: int = 0
    run_log: List[Dict] = field(default_factory=list)
    last_report: Optional[LossReport] = None
    index_history: Optional[List[NDArray[np.int64]]] = None


@dataclass(eq=False)
class TrainingResult:
    run_log: pd.DataFrame
    generator: Dict
    discriminator: Dict
    final_metrics: Optional[MetricReport]
    iterations_completed: int


def build_networks(config: GanConfig, data_dim: int, rng: np.random.Generator):
    """G: noise -> hidden -> hidden -> data (tanh); D: data -> hidden -> hidden -> 1 (leaky relu, spectral norm)."""
    h = config.hidden_dim
    generator = Mlp.build([config.noise_dim, h, h, data_dim], Activation.TANH, Activation.IDENTITY, rng=rng)
    discriminator = Mlp.build(
        [data_dim, h, h, 1], Activation.LEAKY_RELU, Activation.IDENTITY, rng=rng, spectral_norm=config.spectral_norm
    )
    return generator, discriminator


def run_log_frame(rows: List[Dict]) -> pd.DataFrame:
    frame = pd.DataFrame(rows, columns=RUN_LOG_COLUMNS)
    return frame.astype({"iteration": np.int64})


class GanTrainer:
    """Owns one GAN run: state, curriculum policy and the fixed evaluation noise bank.

    Root seed streams (spawned from one SeedSequence): network init, noise,
    real-sample sampler, evaluation noise bank.
    """

    def __init__(
        self,
        config: GanConfig,
        dataset: Dataset,
        scores: NDArray[np.float64],
        curriculum_config: CurriculumConfig,
        metrics_config: Optional[MetricsConfig] = None,
        record_indices: bool = False,
    ):
        scores = np.asarray(scores, dtype=np.float64)
        if scores.size != dataset.n:
            raise ScoreAlignmentError(f"{scores.size} difficulty scores for {dataset.n} samples")
        self.config = config
        self.dataset = dataset
        self.scores = scores
        self.curriculum_config = curriculum_config
        self.metrics_config = metrics_config or MetricsConfig()
        self.strategy: BaseStrategy = build_strategy(curriculum_config, scores, rank_by_difficulty(scores))
        self.logger = logging.getLogger(f"{__name__}.{self.__class__.__name__}")

        init_seq, noise_seq, sampler_seq, eval_seq = np.random.SeedSequence(config.seed).spawn(4)
        generator, discriminator = build_networks(config, dataset.dim, np.random.default_rng(init_seq))
        adam = dict(beta1=config.beta1, beta2=config.beta2, epsilon=config.epsilon)
        self.state = TrainerState(
            generator=generator,
            g_opt=AdamState(lr=config.g_lr, **adam),
            discriminator=discriminator,
            d_opt=AdamState(lr=config.d_lr, **adam),
            noise_rng=np.random.default_rng(noise_seq),
            sampler_rng=np.random.default_rng(sampler_seq),
            eval_noise=np.random.default_rng(eval_seq).standard_normal((config.eval_samples, config.noise_dim)),
            index_history=[] if record_indices else None,
        )

    def _noise(self) -> NDArray[np.float64]:
        return self.state.noise_rng.standard_normal((self.config.batch_size, self.config.noise_dim))

    def _discriminator_update(self, plan):
        state, cfg = self.state, self.config
        indices = plan.draw(cfg.batch_size, state.sampler_rng)
        if state.index_history is not None:
            state.index_history.append(indices)
        real = self.dataset.samples[indices]
        weights = plan.weights[indices]

        fake, _ = forward(state.generator, self._noise())
        state.discriminator.refresh_spectral_norm()
        outputs, cache = forward(state.discriminator, np.vstack([real, fake]))
        outputs = outputs[:, 0]
        loss = discriminator_loss(
            outputs[: len(real)], outputs[len(real):], weights, cfg.loss_kind, self.curriculum_config.weighting_mode
        )
        grads = backward(state.discriminator, cache, np.concatenate([loss.grad_real, loss.grad_fake])[:, None])
        optimize(state.discriminator, state.d_opt, grads.parameters)
        return loss, weights

    def _generator_update(self):
        state, cfg = self.state, self.config
        fake, g_cache = forward(state.generator, self._noise())
        outputs, d_cache = forward(state.discriminator, fake)
        loss = generator_loss(outputs[:, 0], cfg.loss_kind)
        d_grads = backward(state.discriminator, d_cache, loss.grad[:, None])
        g_grads = backward(state.generator, g_cache, d_grads.inputs)
        optimize(state.generator, state.g_opt, g_grads.parameters)
        return loss

    def train_step(self) -> LossReport:
        """One iteration: d_steps_per_g_step discriminator updates, then one generator update.

        Every discriminator sub-update uses the plan of the same iteration t.

        Raises:
            ConfigError: the run is already complete
            DegenerateDistributionError: the sampling curriculum has no mass
            DivergedTrainingError: non-finite discriminator outputs
        """
        state = self.state
        if state.t >= self.config.total_iterations:
            raise ConfigError(f"run already completed {state.t} of {self.config.total_iterations} iterations")

        plan = self.strategy.plan(state.t)
        for _ in range(self.config.d_steps_per_g_step):
            d_loss, weights = self._discriminator_update(plan)
        g_loss = self._generator_update()

        report = LossReport(
            iteration=state.t + 1,
            d_loss_real=d_loss.real_term,
            d_loss_fake=d_loss.fake_term,
            g_loss=g_loss.value,
            mean_weight=float(np.mean(weights)),
            pool_size=int(plan.eligible.size),
        )
        state.t += 1
        state.last_report = report
        return report

    def generate(self, noise: Optional[NDArray[np.float64]] = None) -> NDArray[np.float64]:
        """Generator output on ``noise`` (the evaluation noise bank by default)."""
        noise = self.state.eval_noise if noise is None else noise
        samples, _ = forward(self.state.generator, noise)
        return samples

    def evaluate(self) -> MetricReport:
        return evaluate(
            self.dataset,
            self.generate(),
            n_projections=self.metrics_config.n_projections,
            threshold_multiple=self.metrics_config.threshold_multiple,
            seed=self.metrics_config.projection_seed,
        )

    def _log_row(self, report: LossReport, metrics: MetricReport):
        row = {
            "iteration": report.iteration,
            "d_loss_real": report.d_loss_real,
            "d_loss_fake": report.d_loss_fake,
            "g_loss": report.g_loss,
            "mean_weight": report.mean_weight,
            "sliced_wasserstein": metrics.sliced_wasserstein,
            "mode_coverage": metrics.mode_coverage,
            "hq_fraction": metrics.hq_fraction,
        }
        self.state.run_log.append(row)
        return row

    def train(self) -> TrainingResult:
        """Run the remaining iterations, evaluating every ``eval_every`` steps and at the end.

        On an error the rows logged so far stay available through
        ``self.run_log()``.
        """
        total, every = self.config.total_iterations, self.config.eval_every
        self.logger.info(
            f"Training {total} iterations, strategy={self.curriculum_config.strategy.value}, seed={self.config.seed}"
        )
        metrics = None
        while self.state.t < total:
            report = self.train_step()
            if report.iteration % every == 0:
                metrics = self.evaluate()
                self._log_row(report, metrics)
                self.logger.info(
                    f"t={report.iteration}: d_real={report.d_loss_real:.4f} d_fake={report.d_loss_fake:.4f} "
                    f"g={report.g_loss:.4f} swd={metrics.sliced_wasserstein:.4f} "
                    f"coverage={metrics.mode_coverage} pool={report.pool_size}"
                )

        # the final generator is always logged, also when total is not a multiple of eval_every
        if self.state.t > 0:
            logged = self.state.run_log[-1]["iteration"] if self.state.run_log else 0
            if logged != self.state.t:
                metrics = self.evaluate()
                self._log_row(self.state.last_report, metrics)
            elif metrics is None:
                metrics = self.evaluate()
        return TrainingResult(
            run_log=self.run_log(),
            generator=checkpoint_dict(self.state.generator),
            discriminator=checkpoint_dict(self.state.discriminator),
            final_metrics=metrics,
            iterations_completed=self.state.t,
        )

    def run_log(self) -> pd.DataFrame:
        return run_log_frame(self.state.run_log)


def train(
    config: GanConfig,
    dataset: Dataset,
    scores: NDArray[np.float64],
    curriculum_config: CurriculumConfig,
    metrics_config: Optional[MetricsConfig] = None,
) -> TrainingResult:
    """Build a trainer and run it to completion."""
    if curriculum_config.total_iterations != config.total_iterations:
        raise ConfigError(
            f"curriculum spans {curriculum_config.total_iterations} iterations but the trainer runs {config.total_iterations}"
        )
    return GanTrainer(config, dataset, scores, curriculum_config, metrics_config).train()

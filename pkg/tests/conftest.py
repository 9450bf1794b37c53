"""Shared fixtures: a small ring dataset, its scores, and fast trainer configs."""

import numpy as np
import pytest

from curriculum_gan.data_sources import make_ring_gmm
from curriculum_gan.difficulty import analytic_difficulties, normalize_scores
from curriculum_gan.models import CurriculumConfig, DifficultyProxy, GanConfig


@pytest.fixture
def ring_dataset():
    return make_ring_gmm(n_modes=8, radius=2.0, sigma=0.05, samples_per_mode=50, seed=3)


@pytest.fixture
def ring_scores(ring_dataset):
    return normalize_scores(analytic_difficulties(ring_dataset, DifficultyProxy.EUCLIDEAN))


@pytest.fixture
def fast_gan_config():
    """Small networks and a short run; metrics only at the end."""
    return GanConfig(
        total_iterations=100,
        batch_size=16,
        hidden_dim=16,
        eval_every=100,
        eval_samples=256,
        seed=0,
    )


@pytest.fixture
def baseline_curriculum(fast_gan_config):
    return CurriculumConfig(total_iterations=fast_gan_config.total_iterations)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)

"""Tests for easiness weights, sampling probabilities, pools and per-iteration plans."""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from curriculum_gan.curriculum import (
    active_pool,
    batch_weights,
    build_strategy,
    current_stage,
    draw_indices,
    easiness_weight,
    implied_sampling_distribution,
    plan_for_iteration,
    sample_probabilities,
)
from curriculum_gan.curriculum.weights import SampleProbabilities
from curriculum_gan.difficulty import normalize_scores, rank_by_difficulty
from curriculum_gan.models import CurriculumConfig, Strategy
from curriculum_gan.models.config import default_stage_cuts, gamma_for_horizon
from curriculum_gan.utils.errors import ConfigError, DegenerateDistributionError


def curriculum(strategy="none", **kwargs):
    return CurriculumConfig(strategy=strategy, **kwargs)


class TestEasinessWeight:
    @pytest.mark.parametrize(
        "s, t, k, gamma, expected",
        [
            (1.0, 0, 1.0, 5e-5, 0.0),
            (-1.0, 0, 1.0, 5e-5, 2.0),
            (0.0, 0, 3.0, 5e-5, 1.0),
            (0.0, 10**6, 3.0, 5e-5, 1.0),
        ],
    )
    def test_examples(self, s, t, k, gamma, expected):
        assert easiness_weight(s, t, k, gamma) == pytest.approx(expected, abs=1e-15)

    def test_one_decay_constant(self):
        assert easiness_weight(1.0, 20000, 1.0, 5e-5) == pytest.approx(1 - math.exp(-1), abs=1e-7)
        assert easiness_weight(1.0, 20000, 1.0, 5e-5) == pytest.approx(0.6321206, abs=1e-7)

    def test_formula_and_bounds(self, rng):
        for _ in range(1000):
            s = rng.uniform(-1, 1)
            k = rng.uniform(1e-3, 10)
            gamma = 10 ** rng.uniform(-7, -2)
            t = int(rng.integers(0, 10**6))
            w = easiness_weight(s, t, k, gamma)
            assert w == pytest.approx(1 - k * s * math.exp(-gamma * t), abs=1e-12)
            assert abs(w - 1) <= k * math.exp(-gamma * t) + 1e-12

    def test_converges_to_one(self):
        assert easiness_weight(-1.0, 10**9, 4.0, 5e-5) == pytest.approx(1.0, abs=1e-12)

    def test_batch_weights_vector(self):
        weights = batch_weights(np.array([-1.0, 0.0, 1.0]), 0, curriculum("weighting", k=2.0))
        np.testing.assert_allclose(weights.w, [3.0, 1.0, -1.0])
        assert weights.t == 0


class TestSampleProbabilities:
    def test_shift_for_large_k(self):
        p = sample_probabilities(np.array([1.0, -1.0]), 0, curriculum("sampling", k=4.0)).p
        np.testing.assert_allclose(p, [0.0, 1.0], atol=1e-15)

    def test_proportional_to_weights(self):
        # s = {0.5, 0, -0.5} gives w = {0.5, 1, 1.5} at t=0 with k=1
        p = sample_probabilities(np.array([0.5, 0.0, -0.5]), 0, curriculum("sampling", k=1.0)).p
        np.testing.assert_allclose(p, [1 / 6, 1 / 3, 1 / 2])

    def test_uniform_after_decay(self):
        p = sample_probabilities(np.array([0.5, 0.0, -0.5]), 10**8, curriculum("sampling", k=1.0)).p
        np.testing.assert_allclose(p, [1 / 3] * 3, atol=1e-12)

    def test_degenerate(self):
        with pytest.raises(DegenerateDistributionError) as excinfo:
            sample_probabilities(np.array([1.0, 1.0]), 0, curriculum("sampling", k=1.0))
        assert isinstance(excinfo.value, ConfigError) and excinfo.value.exit_code == 2

    def test_distribution_properties(self, rng):
        for _ in range(200):
            scores = normalize_scores(rng.normal(size=rng.integers(2, 64)))
            config = curriculum("sampling", k=float(rng.uniform(0.1, 8)), gamma=1e-3)
            p = sample_probabilities(scores, int(rng.integers(0, 5000)), config).p
            assert np.all(p >= 0)
            assert p.sum() == pytest.approx(1.0, abs=1e-12)

    def test_positive_rescaling_is_irrelevant(self, rng):
        scores = normalize_scores(rng.normal(size=20))
        config = curriculum("sampling", k=3.0, gamma=1e-3)
        shifted = batch_weights(scores, 100, config).w + 2.0
        p = sample_probabilities(scores, 100, config).p
        for c in (0.5, 7.0):
            np.testing.assert_allclose(c * shifted / (c * shifted).sum(), p, rtol=1e-12)

    @pytest.mark.parametrize("k", [0.5, 1.0, 2.0, 4.0])
    def test_near_uniform_after_ten_decay_constants(self, k, rng):
        gamma = 5e-5
        scores = normalize_scores(rng.normal(size=32))
        config = curriculum("sampling", k=k, gamma=gamma)
        deviations = [
            np.abs(sample_probabilities(scores, int(round(c / gamma)), config).p - 1 / 32).max() for c in (0, 1, 5, 10)
        ]
        assert deviations[-1] < 1e-4
        assert all(b <= a for a, b in zip(deviations, deviations[1:]))


class TestDrawIndices:
    def test_point_mass(self, rng):
        probs = SampleProbabilities(p=np.array([0.0, 1.0, 0.0]), t=0)
        assert np.all(draw_indices(probs, 500, rng) == 1)

    def test_uniform_counts(self, rng):
        n, draws = 10, 100000
        counts = np.bincount(draw_indices(SampleProbabilities(p=np.full(n, 1 / n), t=0), draws, rng), minlength=n)
        se = math.sqrt(draws * 0.1 * 0.9)
        assert np.all(np.abs(counts - draws / n) < 4.5 * se)

    @pytest.mark.parametrize("k", [1.0, 2.0, 4.0])
    def test_frequencies_follow_probabilities(self, k):
        gamma, draws = 5e-5, 10**6
        rng = np.random.default_rng(int(k))
        scores = normalize_scores(rng.normal(size=32))
        config = curriculum("sampling", k=k, gamma=gamma)
        for t in (0, int(1 / gamma), int(10 / gamma)):
            probs = sample_probabilities(scores, t, config)
            freq = np.bincount(draw_indices(probs, draws, rng), minlength=32) / draws
            se = np.sqrt(probs.p * (1 - probs.p) / draws)
            assert np.all(np.abs(freq - probs.p) <= 4.5 * se + 1e-12)
        late = sample_probabilities(scores, int(10 / gamma), config).p
        assert np.abs(late - 1 / 32).max() < 1e-3


class TestPools:
    def test_reference_schedule(self):
        config = curriculum("batches", m=3, stage_cuts=[15000, 25000], total_iterations=80000)
        ranking = np.arange(9)
        assert active_pool(0, config, ranking).size == 3
        assert active_pool(14999, config, ranking).size == 3
        assert active_pool(15000, config, ranking).size == 6
        assert active_pool(25000, config, ranking).size == 9
        assert active_pool(79999, config, ranking).stage == 3

    def test_sizes_round_up(self):
        config = curriculum("batches", m=3, stage_cuts=[10, 20], total_iterations=30)
        ranking = np.arange(10)
        assert [active_pool(t, config, ranking).size for t in (0, 10, 20)] == [4, 7, 10]

    def test_single_batch_is_everything(self):
        config = curriculum("batches", m=1, stage_cuts=[], total_iterations=100)
        assert active_pool(0, config, np.arange(7)).size == 7

    def test_cumulative(self, rng):
        ranking = rng.permutation(50)
        config = curriculum("batches", m=4, stage_cuts=[10, 20, 30], total_iterations=40)
        previous = set()
        for t in range(40):
            pool = set(active_pool(t, config, ranking).indices.tolist())
            assert previous <= pool
            previous = pool
        assert previous == set(range(50))

    def test_pool_is_easiest_prefix(self):
        scores = np.array([0.9, -1.0, 0.2, 1.0, -0.3, 0.0])
        config = curriculum("batches", m=2, stage_cuts=[5], total_iterations=10)
        pool = active_pool(0, config, rank_by_difficulty(scores))
        assert sorted(pool.indices.tolist()) == [1, 4, 5]

    def test_current_stage(self):
        config = curriculum("batches", m=3, stage_cuts=[5, 8], total_iterations=10)
        assert [current_stage(t, config) for t in (0, 4, 5, 7, 8, 9)] == [1, 1, 2, 2, 3, 3]


class TestCurriculumConfig:
    def test_default_cuts_scale_reference(self):
        assert default_stage_cuts(3, 80000) == [15000, 25000]
        assert default_stage_cuts(3, 2000) == [375, 625]
        assert default_stage_cuts(1, 2000) == []
        assert curriculum("batches", total_iterations=2000).resolved_stage_cuts() == [375, 625]

    def test_gamma_for_horizon(self):
        assert gamma_for_horizon(20000) == pytest.approx(5e-4)

    @pytest.mark.parametrize(
        "cuts",
        [[500], [500, 300], [300, 300], [300, 2000], [-1, 300]],
    )
    def test_invalid_cuts(self, cuts):
        with pytest.raises(ValidationError):
            curriculum("batches", m=3, stage_cuts=cuts, total_iterations=2000)

    def test_cuts_ignored_for_other_strategies(self):
        assert curriculum("weighting", stage_cuts=[1]).strategy == Strategy.WEIGHTING

    @pytest.mark.parametrize("field", ["k", "gamma"])
    def test_positive_parameters(self, field):
        with pytest.raises(ValidationError):
            curriculum("weighting", **{field: 0.0})


class TestPlans:
    @pytest.fixture
    def scores(self, rng):
        return normalize_scores(rng.normal(size=30))

    def test_none_is_uniform(self, scores):
        plan = plan_for_iteration(0, curriculum("none"), scores, rank_by_difficulty(scores))
        assert plan.probabilities is None and plan.eligible.size == 30
        assert np.all(plan.weights == 1.0)

    def test_weighting_carries_weights(self, scores):
        config = curriculum("weighting", k=2.0, gamma=1e-3)
        plan = plan_for_iteration(40, config, scores, rank_by_difficulty(scores))
        np.testing.assert_array_equal(plan.weights, batch_weights(scores, 40, config).w)
        assert plan.eligible.size == 30 and plan.probabilities is None

    def test_sampling_tends_to_baseline(self, scores):
        config = curriculum("sampling", k=4.0, gamma=1e-3)
        late = plan_for_iteration(10**6, config, scores, rank_by_difficulty(scores))
        baseline = plan_for_iteration(10**6, curriculum("none"), scores, rank_by_difficulty(scores))
        np.testing.assert_allclose(
            implied_sampling_distribution(late), implied_sampling_distribution(baseline), atol=1e-6
        )

    def test_batches_step_distribution(self, scores):
        ranking = rank_by_difficulty(scores)
        config = curriculum("batches", m=3, stage_cuts=[10, 20], total_iterations=30)
        plan = plan_for_iteration(0, config, scores, ranking)
        p = implied_sampling_distribution(plan)
        np.testing.assert_allclose(p[ranking[:10]], 0.1)
        assert np.all(p[ranking[10:]] == 0.0)
        # non-increasing along the ranking
        assert np.all(np.diff(p[ranking]) <= 0)

    def test_batch_draws_stay_in_pool(self, scores, rng):
        ranking = rank_by_difficulty(scores)
        config = curriculum("batches", m=3, stage_cuts=[10, 20], total_iterations=30)
        plan = build_strategy(config, scores, ranking).plan(15)
        drawn = plan.draw(1000, rng)
        assert set(drawn.tolist()) <= set(ranking[:20].tolist())

    def test_sampling_draws_use_probabilities(self, rng):
        scores = np.array([1.0, -1.0])
        plan = plan_for_iteration(0, curriculum("sampling", k=4.0), scores, rank_by_difficulty(scores))
        assert np.all(plan.draw(200, rng) == 1)

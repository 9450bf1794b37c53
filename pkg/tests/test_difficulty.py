"""Tests for difficulty-score normalization, ranking and the analytic proxy."""

import math

import numpy as np
import pytest

from curriculum_gan.data_sources import make_ring_gmm
from curriculum_gan.data_sources.synthetic import MixtureMetadata
from curriculum_gan.difficulty import analytic_difficulties, analytic_difficulty, normalize_scores, rank_by_difficulty
from curriculum_gan.models import DifficultyProxy
from curriculum_gan.utils.errors import InvalidScoreError, UnsupportedSourceError


class TestNormalizeScores:
    def test_affine_map(self):
        np.testing.assert_array_equal(normalize_scores([2, 4, 6]), [-1.0, 0.0, 1.0])

    def test_endpoints(self):
        np.testing.assert_array_equal(normalize_scores([0, 10]), [-1.0, 1.0])

    @pytest.mark.parametrize("c", [0.0, -3.5, 7.0])
    def test_constant_input_maps_to_zero(self, c):
        np.testing.assert_array_equal(normalize_scores([c, c, c]), [0.0, 0.0, 0.0])

    def test_range_not_anchored_at_zero(self):
        # min is not 0: dividing by max alone would leave the interval
        scores = normalize_scores([5.0, 7.5, 10.0])
        np.testing.assert_allclose(scores, [-1.0, 0.0, 1.0])

    @pytest.mark.parametrize("bad", [[1.0, float("nan")], [float("inf"), 0.0], []])
    def test_invalid_input(self, bad):
        with pytest.raises(InvalidScoreError):
            normalize_scores(bad)

    def test_range_beyond_float_max(self):
        with np.errstate(all="raise"):
            np.testing.assert_array_equal(normalize_scores([-1e308, 0.0, 1e308]), [-1.0, 0.0, 1.0])
            big = np.finfo(np.float64).max
            scores = normalize_scores([-big, -1.0, 0.0, 1.0, big])
        assert np.all(np.isfinite(scores))
        assert scores[0] == -1.0 and scores[-1] == 1.0
        assert np.all(np.diff(scores) >= 0)
        assert scores[2] == 0.0

    def test_properties_on_random_input(self, rng):
        for _ in range(50):
            raw = rng.normal(size=rng.integers(2, 200)) * rng.uniform(0.1, 100)
            s = normalize_scores(raw)
            assert s.min() == -1.0 and s.max() == 1.0
            assert np.all((s >= -1.0) & (s <= 1.0))
            np.testing.assert_allclose(normalize_scores(s), s, atol=1e-12, rtol=0)

            order = np.argsort(raw)
            assert np.all(np.diff(s[order]) >= -1e-12)

            a, b = rng.uniform(0.01, 50), rng.uniform(-100, 100)
            np.testing.assert_allclose(normalize_scores(a * raw + b), s, atol=1e-9, rtol=0)


class TestRankByDifficulty:
    def test_sort_by_value(self):
        assert rank_by_difficulty(np.array([0.5, -1.0, 0.0])).tolist() == [1, 2, 0]

    def test_ties_by_index(self):
        assert rank_by_difficulty(np.zeros(3)).tolist() == [0, 1, 2]

    def test_already_sorted(self):
        assert rank_by_difficulty(np.array([-1.0, 1.0])).tolist() == [0, 1]


class TestAnalyticDifficulty:
    @pytest.fixture
    def metadata(self):
        return MixtureMetadata(
            mode_index=np.array([0, 1]),
            means=np.array([[0.0, 0.0], [2.0, 1.0]]),
            sigmas=np.array([0.5, 2.0]),
        )

    def test_zero_at_mode_mean(self, metadata):
        assert analytic_difficulty(np.array([2.0, 1.0]), metadata, index=1) == 0.0

    def test_one_sigma_is_one(self, metadata):
        assert analytic_difficulty(np.array([0.0, 0.5]), metadata, index=0) == pytest.approx(1.0)
        assert analytic_difficulty(np.array([4.0, 1.0]), metadata, index=1) == pytest.approx(1.0)

    def test_euclidean_proxy_ignores_sigma(self, metadata):
        value = analytic_difficulty(np.array([4.0, 1.0]), metadata, index=1, proxy=DifficultyProxy.EUCLIDEAN)
        assert value == pytest.approx(2.0)

    def test_requires_metadata(self):
        with pytest.raises(UnsupportedSourceError):
            analytic_difficulty(np.zeros(2), None, index=0)

    def test_vectorized_matches_scalar(self, ring_dataset):
        values = analytic_difficulties(ring_dataset)
        for i in (0, 17, 399):
            assert values[i] == pytest.approx(analytic_difficulty(ring_dataset.samples[i], ring_dataset.metadata, i))

    def test_ring_mean_matches_chi_distribution(self):
        dataset = make_ring_gmm(n_modes=8, radius=2.0, sigma=0.05, samples_per_mode=250, seed=7)
        expected = math.sqrt(2.0) * math.gamma(1.5) / math.gamma(1.0)
        assert analytic_difficulties(dataset).mean() == pytest.approx(expected, rel=0.05)

"""Tests for synthetic mixtures, CSV ingestion, score files and dataset flags."""

import numpy as np
import pytest

from curriculum_gan.data_sources import (
    Dataset,
    build_dataset,
    dump_csv_dataset,
    load_csv_dataset,
    load_score_file,
    make_graded_mixture,
    make_ring_gmm,
    parse_dataset_spec,
    parse_score_source,
    resolve_raw_scores,
    write_score_file,
)
from curriculum_gan.data_sources.scores import ScoreKind
from curriculum_gan.data_sources.specs import DatasetKind, resolve_proxy
from curriculum_gan.difficulty import analytic_difficulties
from curriculum_gan.models import DataConfig, DifficultyProxy
from curriculum_gan.utils.errors import (
    ConfigError,
    DatasetParseError,
    DatasetTooSmallError,
    InvalidScoreError,
    ScoreAlignmentError,
)


class TestRingMixture:
    def test_single_mode_at_origin(self):
        dataset = make_ring_gmm(n_modes=1, radius=0.0, sigma=1.0, samples_per_mode=10000, seed=0)
        bound = 4.0 / np.sqrt(dataset.n)
        assert np.all(np.abs(dataset.samples.mean(axis=0)) < bound)

    def test_mode_positions(self):
        dataset = make_ring_gmm(n_modes=4, radius=2.0, sigma=0.01, samples_per_mode=10, seed=0)
        np.testing.assert_allclose(dataset.metadata.means[0], [2.0, 0.0], atol=1e-12)
        np.testing.assert_allclose(dataset.metadata.means[1], [0.0, 2.0], atol=1e-12)
        np.testing.assert_allclose(dataset.metadata.means[2], [-2.0, 0.0], atol=1e-12)

    def test_per_mode_covariance(self):
        sigma = 0.3
        dataset = make_ring_gmm(n_modes=2, radius=2.0, sigma=sigma, samples_per_mode=10000, seed=5)
        for mode in range(2):
            cov = np.cov(dataset.samples[dataset.metadata.mode_index == mode].T)
            np.testing.assert_allclose(np.diag(cov), [sigma**2, sigma**2], rtol=0.1)
            assert abs(cov[0, 1]) < 0.1 * sigma**2

    def test_grouped_by_mode(self, ring_dataset):
        assert ring_dataset.n == 400
        assert ring_dataset.metadata.mode_index[:50].tolist() == [0] * 50
        assert np.all(np.diff(ring_dataset.metadata.mode_index) >= 0)

    def test_seed_reproducible(self):
        a = make_ring_gmm(8, 2.0, 0.05, 20, seed=9)
        b = make_ring_gmm(8, 2.0, 0.05, 20, seed=9)
        c = make_ring_gmm(8, 2.0, 0.05, 20, seed=10)
        assert np.array_equal(a.samples, b.samples)
        assert not np.array_equal(a.samples, c.samples)

    def test_samples_are_read_only(self, ring_dataset):
        with pytest.raises(ValueError):
            ring_dataset.samples[0, 0] = 1.0


class TestGradedMixture:
    def test_equal_sigmas_match_ring(self):
        graded = make_graded_mixture(8, 0.05, 0.05, radius=2.0, samples_per_mode=30, seed=4)
        ring = make_ring_gmm(8, 2.0, 0.05, 30, seed=4)
        assert np.array_equal(graded.samples, ring.samples)

    def test_sigmas_span_range(self):
        dataset = make_graded_mixture(4, 0.1, 0.8, samples_per_mode=5)
        np.testing.assert_allclose(dataset.metadata.sigmas, [0.1, 0.2, 0.4, 0.8])

    def test_proxies_on_two_modes(self):
        dataset = make_graded_mixture(2, 0.1, 1.0, samples_per_mode=1000, seed=2)
        modes = dataset.metadata.mode_index

        mahalanobis = analytic_difficulties(dataset, DifficultyProxy.MAHALANOBIS)
        assert mahalanobis[modes == 0].mean() == pytest.approx(mahalanobis[modes == 1].mean(), rel=0.1)

        euclidean = analytic_difficulties(dataset, DifficultyProxy.EUCLIDEAN)
        ratio = euclidean[modes == 1].mean() / euclidean[modes == 0].mean()
        assert ratio == pytest.approx(10.0, rel=0.1)

    def test_tight_mode_stays_near_mean(self):
        dataset = make_graded_mixture(2, 0.1, 1.0, samples_per_mode=1000, seed=2)
        tight = dataset.samples[dataset.metadata.mode_index == 0]
        assert np.all(np.linalg.norm(tight - dataset.metadata.means[0], axis=1) < 0.5)

    def test_rejects_inverted_range(self):
        with pytest.raises(ValueError):
            make_graded_mixture(3, 1.0, 0.1)


class TestDatasetValidation:
    def test_needs_two_samples(self):
        with pytest.raises(DatasetTooSmallError):
            Dataset(samples=np.zeros((1, 2)))

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            Dataset(samples=np.array([[0.0, np.nan], [1.0, 1.0]]))


class TestCsvDataset:
    def test_load_simple(self, tmp_path):
        path = tmp_path / "data.csv"
        path.write_text("0,0\n1,1\n")
        dataset = load_csv_dataset(path)
        np.testing.assert_array_equal(dataset.samples, [[0.0, 0.0], [1.0, 1.0]])
        assert dataset.metadata is None

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text("")
        with pytest.raises(DatasetTooSmallError):
            load_csv_dataset(path)

    def test_single_row(self, tmp_path):
        path = tmp_path / "one.csv"
        path.write_text("1,2\n")
        with pytest.raises(DatasetTooSmallError):
            load_csv_dataset(path)

    def test_short_row_reports_line(self, tmp_path):
        path = tmp_path / "ragged.csv"
        path.write_text("0,0\n1,1\n2\n")
        with pytest.raises(DatasetParseError) as exc:
            load_csv_dataset(path)
        assert exc.value.line == 3

    def test_long_row_is_parse_error(self, tmp_path):
        path = tmp_path / "ragged.csv"
        path.write_text("0,0\n1,1\n2,2,2\n")
        with pytest.raises(DatasetParseError):
            load_csv_dataset(path)

    def test_non_numeric_reports_line(self, tmp_path):
        path = tmp_path / "text.csv"
        path.write_text("0,0\n1,abc\n2,2\n")
        with pytest.raises(DatasetParseError) as exc:
            load_csv_dataset(path)
        assert exc.value.line == 2
        assert "abc" in str(exc.value)

    def test_dump_then_load_is_exact(self, tmp_path, ring_dataset):
        path = dump_csv_dataset(ring_dataset, tmp_path / "ring.csv")
        assert np.array_equal(load_csv_dataset(path).samples, ring_dataset.samples)
        assert path.read_bytes().count(b"\r") == 0


class TestScoreSources:
    def test_parse_variants(self):
        assert parse_score_source("analytic").kind == ScoreKind.ANALYTIC
        constant = parse_score_source("constant:2.5")
        assert constant.kind == ScoreKind.CONSTANT and constant.value == 2.5
        assert parse_score_source("constant").value == 0.0
        assert parse_score_source("scores.txt").kind == ScoreKind.FILE

    def test_score_file_alignment(self, tmp_path):
        path = tmp_path / "scores.txt"
        path.write_text("1.0\n2.0\n3.0\n")
        np.testing.assert_array_equal(load_score_file(path, n=3), [1.0, 2.0, 3.0])
        with pytest.raises(ScoreAlignmentError):
            load_score_file(path, n=4)

    def test_score_file_bad_line(self, tmp_path):
        path = tmp_path / "scores.txt"
        path.write_text("1.0\nhigh\n")
        with pytest.raises(InvalidScoreError):
            load_score_file(path)

    def test_written_scores_reload_exactly(self, tmp_path, rng):
        values = rng.normal(size=25)
        path = write_score_file(values, tmp_path / "raw.txt")
        assert np.array_equal(load_score_file(path, n=25), values)

    def test_resolve_constant(self, ring_dataset):
        raw = resolve_raw_scores(parse_score_source("constant:1.5"), ring_dataset)
        assert raw.shape == (ring_dataset.n,) and np.all(raw == 1.5)


class TestDatasetSpecs:
    def test_parse_ring(self):
        spec = parse_dataset_spec("ring:8,2,0.05")
        assert spec.kind == DatasetKind.RING and spec.params == [8.0, 2.0, 0.05]

    def test_parse_csv(self):
        spec = parse_dataset_spec("csv:data/points.csv")
        assert spec.kind == DatasetKind.CSV and spec.path.name == "points.csv"

    @pytest.mark.parametrize("text", ["bogus:1,2", "ring:8,2", "graded:3,2,0.1", "ring:a,b,c", "csv:"])
    def test_invalid(self, text):
        with pytest.raises(ConfigError):
            parse_dataset_spec(text)

    def test_build_ring_with_count(self):
        dataset = build_dataset(DataConfig(dataset="ring:4,1,0.1,25"))
        assert dataset.n == 100 and dataset.metadata.n_modes == 4

    def test_build_uses_data_seed(self):
        a = build_dataset(DataConfig(dataset="ring:4,1,0.1,5", data_seed=1))
        b = build_dataset(DataConfig(dataset="ring:4,1,0.1,5", data_seed=2))
        assert not np.array_equal(a.samples, b.samples)

    def test_default_proxy(self):
        assert resolve_proxy(DataConfig(dataset="ring:8,2,0.05")) == DifficultyProxy.MAHALANOBIS
        assert resolve_proxy(DataConfig(dataset="graded:8,2,0.01,0.2")) == DifficultyProxy.EUCLIDEAN
        assert resolve_proxy(DataConfig(dataset="graded:8,2,0.01,0.2", proxy="mahalanobis")) == DifficultyProxy.MAHALANOBIS

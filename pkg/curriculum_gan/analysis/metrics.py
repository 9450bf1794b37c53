"""Desk-scale generative-quality metrics: sliced Wasserstein, mode coverage, high-quality fraction."""

import logging
from typing import Optional, Union

import numpy as np
from numpy.typing import NDArray

from curriculum_gan.data_sources.synthetic import Dataset
from curriculum_gan.models.records import MetricReport
from curriculum_gan.utils.errors import DimensionMismatchError, MissingMetadataError

logger = logging.getLogger(__name__)

FloatArray = NDArray[np.float64]

MIN_EVAL_SAMPLES = 256


def _as_matrix(samples: Union[Dataset, FloatArray]) -> FloatArray:
    if isinstance(samples, Dataset):
        return samples.samples
    return np.atleast_2d(np.asarray(samples, dtype=np.float64))


def random_directions(n_projections: int, dim: int, rng: np.random.Generator) -> FloatArray:
    """Unit vectors, one per row."""
    directions = rng.standard_normal((n_projections, dim))
    return directions / np.linalg.norm(directions, axis=1, keepdims=True)


def sliced_wasserstein(
    real: Union[Dataset, FloatArray],
    fake: FloatArray,
    n_projections: int = 128,
    rng: Optional[np.random.Generator] = None,
    directions: Optional[FloatArray] = None,
) -> float:
    """Mean 1-D Wasserstein-1 distance between projections on random unit directions.

    The larger sample set is subsampled (without replacement) to the size of
    the smaller one, so each projected distance is the mean absolute
    difference of sorted samples.

    Args:
        real: reference samples
        fake: generated samples
        n_projections: number of random directions (ignored when ``directions`` is given)
        rng: source of directions and subsampling
        directions: fixed projection directions, one per row

    Raises:
        DimensionMismatchError: real and fake dimensionality differ
    """
    real = _as_matrix(real)
    fake = _as_matrix(fake)
    if real.shape[1] != fake.shape[1]:
        raise DimensionMismatchError(f"real has {real.shape[1]} dims, fake has {fake.shape[1]}")
    rng = rng if rng is not None else np.random.default_rng(0)

    if directions is None:
        if n_projections < 1:
            raise ValueError("n_projections must be >= 1")
        directions = random_directions(n_projections, real.shape[1], rng)
    else:
        directions = np.atleast_2d(np.asarray(directions, dtype=np.float64))

    size = min(len(real), len(fake))
    if len(real) > size:
        real = real[rng.choice(len(real), size=size, replace=False)]
    elif len(fake) > size:
        fake = fake[rng.choice(len(fake), size=size, replace=False)]

    projected_real = np.sort(real @ directions.T, axis=0)
    projected_fake = np.sort(fake @ directions.T, axis=0)
    per_direction = np.mean(np.abs(projected_real - projected_fake), axis=0)
    return float(np.sum(per_direction) / per_direction.size)


def _within_threshold(fake: FloatArray, mode_means: FloatArray, sigma, threshold_multiple: float) -> NDArray[np.bool_]:
    """(n_fake, n_modes) mask of samples within threshold_multiple * sigma of each mode mean."""
    mode_means = np.atleast_2d(np.asarray(mode_means, dtype=np.float64))
    radii = threshold_multiple * np.broadcast_to(np.asarray(sigma, dtype=np.float64), (mode_means.shape[0],))
    distances = np.linalg.norm(fake[:, None, :] - mode_means[None, :, :], axis=2)
    return distances <= radii[None, :]


def mode_coverage(fake: FloatArray, mode_means: FloatArray, sigma, threshold_multiple: float = 3.0) -> float:
    """Fraction of modes with at least one fake sample within threshold_multiple * sigma of the mean."""
    if mode_means is None:
        raise MissingMetadataError("mode coverage needs mixture mode means")
    within = _within_threshold(_as_matrix(fake), mode_means, sigma, threshold_multiple)
    return float(np.mean(within.any(axis=0)))


def hq_fraction(fake: FloatArray, mode_means: FloatArray, sigma, threshold_multiple: float = 3.0) -> float:
    """Fraction of fake samples within threshold_multiple * sigma of some mode mean."""
    if mode_means is None:
        raise MissingMetadataError("high-quality fraction needs mixture mode means")
    within = _within_threshold(_as_matrix(fake), mode_means, sigma, threshold_multiple)
    return float(np.mean(within.any(axis=1)))


def evaluate(
    dataset: Dataset,
    fake: FloatArray,
    n_projections: int = 128,
    threshold_multiple: float = 3.0,
    seed: int = 0,
) -> MetricReport:
    """All metrics for one batch of generated samples.

    The projection rng is reseeded on every call, so successive evaluations
    (and runs with different strategies) use the same directions.
    """
    fake = _as_matrix(fake)
    if len(fake) < MIN_EVAL_SAMPLES:
        raise ValueError(f"need at least {MIN_EVAL_SAMPLES} generated samples, got {len(fake)}")
    swd = sliced_wasserstein(dataset, fake, n_projections, rng=np.random.default_rng(seed))
    metadata = dataset.metadata
    if metadata is None:
        return MetricReport(sliced_wasserstein=swd)
    return MetricReport(
        sliced_wasserstein=swd,
        mode_coverage=mode_coverage(fake, metadata.means, metadata.sigmas, threshold_multiple),
        hq_fraction=hq_fraction(fake, metadata.means, metadata.sigmas, threshold_multiple),
    )

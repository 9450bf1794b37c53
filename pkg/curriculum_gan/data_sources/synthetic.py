"""Synthetic Gaussian-mixture datasets with known generating structure."""

import logging
from dataclasses import dataclass
from typing import List, Optional

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, Field, field_validator

from curriculum_gan.utils.errors import DatasetTooSmallError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class MixtureMetadata:
    """Per-sample generating mode plus the per-mode means and isotropic sigmas."""

    mode_index: NDArray[np.int64]
    means: NDArray[np.float64]
    sigmas: NDArray[np.float64]

    @property
    def n_modes(self) -> int:
        return int(self.means.shape[0])


@dataclass(frozen=True, eq=False)
class Dataset:
    """An immutable n x d sample matrix, with mixture metadata when synthetic."""

    samples: NDArray[np.float64]
    metadata: Optional[MixtureMetadata] = None

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=np.float64)
        if samples.ndim != 2 or samples.shape[0] < 2:
            raise DatasetTooSmallError(f"dataset needs at least 2 samples, got shape {samples.shape}")
        if not np.all(np.isfinite(samples)):
            raise ValueError("dataset contains non-finite values")
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    @property
    def n(self) -> int:
        return int(self.samples.shape[0])

    @property
    def dim(self) -> int:
        return int(self.samples.shape[1])


class GmmSpec(BaseModel):
    """Mode means, isotropic sigmas and per-mode counts of a Gaussian mixture."""

    means: List[List[float]]
    sigmas: List[float]
    counts: List[int]
    seed: int = 0

    @field_validator("sigmas")
    @classmethod
    def _positive_sigmas(cls, v: List[float]) -> List[float]:
        if any(s <= 0 for s in v):
            raise ValueError("every sigma must be > 0")
        return v

    @field_validator("counts")
    @classmethod
    def _positive_counts(cls, v: List[int]) -> List[int]:
        if any(c < 1 for c in v):
            raise ValueError("every mode needs at least one sample")
        return v


def sample_mixture(spec: GmmSpec) -> Dataset:
    """Draw a mixture dataset. Samples are grouped by mode, mode 0 first."""
    means = np.asarray(spec.means, dtype=np.float64)
    sigmas = np.asarray(spec.sigmas, dtype=np.float64)
    counts = np.asarray(spec.counts, dtype=np.int64)
    if not (len(means) == len(sigmas) == len(counts)):
        raise ValueError("means, sigmas and counts must have one entry per mode")

    rng = np.random.default_rng(spec.seed)
    mode_index = np.repeat(np.arange(len(means), dtype=np.int64), counts)
    noise = rng.standard_normal((mode_index.size, means.shape[1]))
    samples = means[mode_index] + sigmas[mode_index, None] * noise

    metadata = MixtureMetadata(mode_index=mode_index, means=means, sigmas=sigmas)
    return Dataset(samples=samples, metadata=metadata)


def ring_means(n_modes: int, radius: float) -> NDArray[np.float64]:
    angles = 2.0 * np.pi * np.arange(n_modes) / n_modes
    return np.stack([radius * np.cos(angles), radius * np.sin(angles)], axis=1)


def make_ring_gmm(n_modes: int, radius: float, sigma: float, samples_per_mode: int, seed: int = 0) -> Dataset:
    """Modes equally spaced on a circle (mode j at angle 2*pi*j/n_modes), shared sigma."""
    if n_modes < 1 or radius < 0:
        raise ValueError(f"need n_modes >= 1 and radius >= 0, got {n_modes}, {radius}")
    spec = GmmSpec(
        means=ring_means(n_modes, radius).tolist(),
        sigmas=[sigma] * n_modes,
        counts=[samples_per_mode] * n_modes,
        seed=seed,
    )
    logger.debug(f"Ring GMM: {n_modes} modes, radius {radius}, sigma {sigma}, {samples_per_mode} per mode")
    return sample_mixture(spec)


def make_graded_mixture(
    n_modes: int,
    sigma_min: float,
    sigma_max: float,
    radius: float = 2.0,
    samples_per_mode: int = 1000,
    seed: int = 0,
) -> Dataset:
    """Ring mixture whose sigma grows geometrically from sigma_min (mode 0) to sigma_max."""
    if not 0 < sigma_min <= sigma_max:
        raise ValueError(f"need 0 < sigma_min <= sigma_max, got {sigma_min}, {sigma_max}")
    if sigma_min == sigma_max or n_modes == 1:
        sigmas = np.full(n_modes, sigma_min)
    else:
        sigmas = np.geomspace(sigma_min, sigma_max, n_modes)
    spec = GmmSpec(
        means=ring_means(n_modes, radius).tolist(),
        sigmas=sigmas.tolist(),
        counts=[samples_per_mode] * n_modes,
        seed=seed,
    )
    return sample_mixture(spec)

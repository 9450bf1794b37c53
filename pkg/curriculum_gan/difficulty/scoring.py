"""Normalization and ranking of per-sample difficulty scores.

Raw scores come from a pluggable source (a score file, an analytic proxy
on synthetic data, or a constant). They are mapped affinely onto [-1, 1]
with the easiest sample at -1 and the hardest at +1.
"""

import logging
from typing import TYPE_CHECKING, Optional, Sequence, Union

import numpy as np
from numpy.typing import NDArray

from curriculum_gan.models.config import DifficultyProxy
from curriculum_gan.utils.errors import InvalidScoreError, UnsupportedSourceError

if TYPE_CHECKING:
    from curriculum_gan.data_sources.synthetic import Dataset, MixtureMetadata

logger = logging.getLogger(__name__)

ScoreArray = NDArray[np.float64]


def normalize_scores(raw: Union[Sequence[float], ScoreArray]) -> ScoreArray:
    """Map raw scores onto [-1, 1]: min goes to -1, max to +1.

    The denominator is the range (max - min), so the output interval holds
    for any input. Constant input maps to all zeros.

    Raises:
        InvalidScoreError: empty input or any non-finite value
    """
    raw = np.asarray(raw, dtype=np.float64).ravel()
    if raw.size == 0:
        raise InvalidScoreError("no raw scores given")
    if not np.all(np.isfinite(raw)):
        bad = int(np.flatnonzero(~np.isfinite(raw))[0])
        raise InvalidScoreError(f"non-finite raw score at index {bad}: {raw[bad]}")

    lo, hi = raw.min(), raw.max()
    if hi == lo:
        return np.zeros_like(raw)
    with np.errstate(over="ignore"):
        span = hi - lo
    if np.isfinite(span):
        scores = 2.0 * ((raw - lo) / span) - 1.0
    else:
        # range exceeds the float64 maximum; halving keeps every difference finite
        scores = 2.0 * ((raw / 2 - lo / 2) / (hi / 2 - lo / 2)) - 1.0
    return np.clip(scores, -1.0, 1.0)


def rank_by_difficulty(scores: ScoreArray) -> NDArray[np.int64]:
    """Indices sorted easiest first; ties keep ascending index order."""
    return np.argsort(np.asarray(scores, dtype=np.float64), kind="stable").astype(np.int64)


def analytic_difficulty(
    sample: ScoreArray,
    metadata: Optional["MixtureMetadata"],
    index: int,
    proxy: DifficultyProxy = DifficultyProxy.MAHALANOBIS,
) -> float:
    """Distance of one sample from the mean of the mode that generated it.

    Args:
        sample: feature vector
        metadata: mixture metadata of the dataset the sample came from
        index: position of the sample in that dataset
        proxy: ``mahalanobis`` divides by the mode's isotropic sigma,
            ``euclidean`` does not

    Raises:
        UnsupportedSourceError: the sample carries no generating-mode metadata
    """
    if metadata is None:
        raise UnsupportedSourceError("analytic difficulty needs a synthetic dataset with mode metadata")
    mode = int(metadata.mode_index[index])
    distance = float(np.linalg.norm(np.asarray(sample, dtype=np.float64) - metadata.means[mode]))
    if DifficultyProxy(proxy) == DifficultyProxy.MAHALANOBIS:
        return distance / float(metadata.sigmas[mode])
    return distance


def analytic_difficulties(dataset: "Dataset", proxy: DifficultyProxy = DifficultyProxy.MAHALANOBIS) -> ScoreArray:
    """Vectorized ``analytic_difficulty`` over a whole dataset."""
    metadata = dataset.metadata
    if metadata is None:
        raise UnsupportedSourceError("analytic difficulty needs a synthetic dataset with mode metadata")
    offsets = dataset.samples - metadata.means[metadata.mode_index]
    distances = np.linalg.norm(offsets, axis=1)
    if DifficultyProxy(proxy) == DifficultyProxy.MAHALANOBIS:
        distances = distances / metadata.sigmas[metadata.mode_index]
    logger.debug(f"Analytic {DifficultyProxy(proxy).value} difficulty: mean {distances.mean():.4f}")
    return distances

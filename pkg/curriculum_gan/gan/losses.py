"""Discriminator and generator objectives (hinge and cross-entropy).

The discriminator minimizes E[l(D(x))] + E[l(-D(G(z)))]; the generator
minimizes -E[D(G(z))] (hinge) or the non-saturating -E[log sigmoid(D(G(z)))].
Curriculum weights only ever touch the real-sample term.
"""

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from curriculum_gan.models.config import LossKind, WeightingMode
from curriculum_gan.utils.errors import DimensionMismatchError, DivergedTrainingError

FloatArray = NDArray[np.float64]


@dataclass(frozen=True, eq=False)
class DiscriminatorLoss:
    real_term: float
    fake_term: float
    grad_real: FloatArray
    grad_fake: FloatArray

    @property
    def total(self) -> float:
        return self.real_term + self.fake_term


@dataclass(frozen=True, eq=False)
class GeneratorLoss:
    value: float
    grad: FloatArray


def _softplus(x: FloatArray) -> FloatArray:
    return np.logaddexp(0.0, x)


def _sigmoid(x: FloatArray) -> FloatArray:
    return np.exp(-np.logaddexp(0.0, -x))


def _check_finite(name: str, values: FloatArray):
    if not np.all(np.isfinite(values)):
        raise DivergedTrainingError(f"non-finite {name} discriminator outputs: training diverged")


def _real_side(d: FloatArray, kind: LossKind):
    """Per-sample l(D(x)) and its derivative."""
    if kind == LossKind.HINGE:
        return np.maximum(0.0, 1.0 - d), np.where(d < 1.0, -1.0, 0.0)
    return _softplus(-d), -_sigmoid(-d)


def _fake_side(d: FloatArray, kind: LossKind):
    """Per-sample l(-D(G(z))) and its derivative."""
    if kind == LossKind.HINGE:
        return np.maximum(0.0, 1.0 + d), np.where(d > -1.0, 1.0, 0.0)
    return _softplus(d), _sigmoid(d)


def discriminator_loss(
    real_outputs: FloatArray,
    fake_outputs: FloatArray,
    weights: FloatArray,
    loss_kind: LossKind = LossKind.HINGE,
    weighting_mode: WeightingMode = WeightingMode.MULTIPLICATIVE,
) -> DiscriminatorLoss:
    """Discriminator loss with per-sample weights on the real term.

    ``multiplicative`` scales each real term by its weight. ``additive``
    leaves the real term unweighted and adds mean(weights), which shifts
    the loss without changing any gradient.

    Raises:
        DivergedTrainingError: any output is non-finite
    """
    d_real = np.asarray(real_outputs, dtype=np.float64).ravel()
    d_fake = np.asarray(fake_outputs, dtype=np.float64).ravel()
    weights = np.asarray(weights, dtype=np.float64).ravel()
    if weights.size != d_real.size:
        raise DimensionMismatchError(f"{weights.size} weights for {d_real.size} real samples")
    _check_finite("real", d_real)
    _check_finite("fake", d_fake)
    kind = LossKind(loss_kind)

    if d_real.size:
        per_sample, slope = _real_side(d_real, kind)
        if WeightingMode(weighting_mode) == WeightingMode.MULTIPLICATIVE:
            real_term = float(np.mean(weights * per_sample))
            grad_real = weights * slope / d_real.size
        else:
            real_term = float(np.mean(per_sample)) + float(np.mean(weights))
            grad_real = slope / d_real.size
    else:
        real_term, grad_real = 0.0, np.zeros(0)

    if d_fake.size:
        per_sample, slope = _fake_side(d_fake, kind)
        fake_term = float(np.mean(per_sample))
        grad_fake = slope / d_fake.size
    else:
        fake_term, grad_fake = 0.0, np.zeros(0)

    return DiscriminatorLoss(real_term=real_term, fake_term=fake_term, grad_real=grad_real, grad_fake=grad_fake)


def generator_loss(fake_outputs: FloatArray, loss_kind: LossKind = LossKind.HINGE) -> GeneratorLoss:
    """Hinge: -mean(D(G(z))). Cross-entropy: non-saturating -mean(log sigmoid(D(G(z))))."""
    d_fake = np.asarray(fake_outputs, dtype=np.float64).ravel()
    if d_fake.size == 0:
        raise DimensionMismatchError("generator loss needs at least one fake sample")
    _check_finite("fake", d_fake)
    if LossKind(loss_kind) == LossKind.HINGE:
        return GeneratorLoss(value=float(-np.mean(d_fake)), grad=np.full(d_fake.size, -1.0 / d_fake.size))
    return GeneratorLoss(value=float(np.mean(_softplus(-d_fake))), grad=-_sigmoid(-d_fake) / d_fake.size)

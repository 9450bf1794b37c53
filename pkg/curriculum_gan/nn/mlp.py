"""Dense multilayer perceptron with exact reverse-mode gradients."""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np
from numpy.typing import NDArray

from curriculum_gan.models.config import Activation
from curriculum_gan.nn.spectral import SpectralNormState, power_iterate, sigma_estimate, sigma_gradient
from curriculum_gan.utils.errors import DimensionMismatchError, StaleCacheError

logger = logging.getLogger(__name__)

Matrix = NDArray[np.float64]

LEAKY_SLOPE = 0.1


def _activate(z: Matrix, activation: Activation) -> Matrix:
    if activation == Activation.RELU:
        return np.maximum(z, 0.0)
    if activation == Activation.LEAKY_RELU:
        return np.where(z > 0, z, LEAKY_SLOPE * z)
    if activation == Activation.TANH:
        return np.tanh(z)
    return z


def _activation_grad(z: Matrix, a: Matrix, activation: Activation) -> Matrix:
    if activation == Activation.RELU:
        return (z > 0).astype(np.float64)
    if activation == Activation.LEAKY_RELU:
        return np.where(z > 0, 1.0, LEAKY_SLOPE)
    if activation == Activation.TANH:
        return 1.0 - a * a
    return np.ones_like(z)


@dataclass(eq=False)
class DenseLayer:
    """x @ weight + bias, then the activation. weight has shape (fan_in, fan_out)."""

    weight: Matrix
    bias: NDArray[np.float64]
    activation: Activation
    spectral_norm: Optional[SpectralNormState] = None

    @property
    def fan_in(self) -> int:
        return int(self.weight.shape[0])

    @property
    def fan_out(self) -> int:
        return int(self.weight.shape[1])

    def effective_weight(self) -> Matrix:
        if self.spectral_norm is None:
            return self.weight
        return self.weight / sigma_estimate(self.spectral_norm, self.weight)


@dataclass(eq=False)
class ForwardCache:
    """Per-layer inputs, pre-activations and activations of one forward pass."""

    inputs: List[Matrix]
    pre_activations: List[Matrix]
    outputs: List[Matrix]
    weights: List[Matrix]
    version: int


@dataclass(eq=False)
class Gradients:
    """Parameter gradients (ordered like ``Mlp.parameters()``) and the input gradient."""

    weights: List[Matrix]
    biases: List[NDArray[np.float64]]
    inputs: Matrix

    @property
    def parameters(self) -> List[NDArray[np.float64]]:
        return [g for pair in zip(self.weights, self.biases) for g in pair]


@dataclass(eq=False)
class Mlp:
    """Stack of dense layers. ``version`` increments whenever parameters or sigma estimates change."""

    layers: List[DenseLayer]
    version: int = field(default=0)

    def __post_init__(self):
        for prev, nxt in zip(self.layers, self.layers[1:]):
            if prev.fan_out != nxt.fan_in:
                raise DimensionMismatchError(f"layer dims do not chain: {prev.fan_out} -> {nxt.fan_in}")

    @classmethod
    def build(
        cls,
        dims: Sequence[int],
        hidden_activation: Activation,
        output_activation: Activation = Activation.IDENTITY,
        rng: Optional[np.random.Generator] = None,
        spectral_norm: bool = False,
    ) -> "Mlp":
        """Glorot-uniform weights, zero biases."""
        rng = rng if rng is not None else np.random.default_rng(0)
        layers = []
        for i, (fan_in, fan_out) in enumerate(zip(dims, dims[1:])):
            limit = np.sqrt(6.0 / (fan_in + fan_out))
            weight = rng.uniform(-limit, limit, size=(fan_in, fan_out))
            activation = output_activation if i == len(dims) - 2 else hidden_activation
            sn_state = SpectralNormState.initial(weight, rng) if spectral_norm else None
            layers.append(DenseLayer(weight=weight, bias=np.zeros(fan_out), activation=activation, spectral_norm=sn_state))
        return cls(layers=layers)

    @property
    def input_dim(self) -> int:
        return self.layers[0].fan_in

    @property
    def output_dim(self) -> int:
        return self.layers[-1].fan_out

    def parameters(self) -> List[NDArray[np.float64]]:
        return [p for layer in self.layers for p in (layer.weight, layer.bias)]

    def refresh_spectral_norm(self):
        """One round of power iteration on every spectrally normalized layer."""
        touched = False
        for layer in self.layers:
            if layer.spectral_norm is not None:
                power_iterate(layer.spectral_norm, layer.weight)
                touched = True
        if touched:
            self.version += 1


def forward(net: Mlp, batch: Matrix):
    """Run ``batch`` (rows are samples) through ``net``.

    Returns:
        (outputs, cache) for ``backward``

    Raises:
        DimensionMismatchError: batch columns differ from the input dimension
    """
    batch = np.asarray(batch, dtype=np.float64)
    if batch.ndim != 2 or batch.shape[1] != net.input_dim:
        raise DimensionMismatchError(f"expected a batch with {net.input_dim} columns, got shape {batch.shape}")

    cache = ForwardCache(inputs=[], pre_activations=[], outputs=[], weights=[], version=net.version)
    x = batch
    for layer in net.layers:
        weight = layer.effective_weight()
        z = x @ weight + layer.bias
        a = _activate(z, layer.activation)
        cache.inputs.append(x)
        cache.pre_activations.append(z)
        cache.outputs.append(a)
        cache.weights.append(weight)
        x = a
    return x, cache


def backward(net: Mlp, cache: ForwardCache, output_grad: Matrix) -> Gradients:
    """Reverse-mode gradients of a scalar loss, given d loss / d outputs.

    Spectrally normalized layers differentiate through W / (u^T W v) with
    the singular-vector estimates held fixed.

    Raises:
        StaleCacheError: parameters changed since the forward pass
    """
    if cache.version != net.version:
        raise StaleCacheError(f"cache from version {cache.version}, network is at {net.version}")

    grad = np.asarray(output_grad, dtype=np.float64)
    weight_grads: List[Matrix] = [None] * len(net.layers)
    bias_grads: List[NDArray[np.float64]] = [None] * len(net.layers)
    for i in reversed(range(len(net.layers))):
        layer = net.layers[i]
        dz = grad * _activation_grad(cache.pre_activations[i], cache.outputs[i], layer.activation)
        grad_effective = cache.inputs[i].T @ dz
        if layer.spectral_norm is not None:
            weight_grads[i] = sigma_gradient(grad_effective, layer.weight, layer.spectral_norm)
        else:
            weight_grads[i] = grad_effective
        bias_grads[i] = dz.sum(axis=0)
        grad = dz @ cache.weights[i].T
    return Gradients(weights=weight_grads, biases=bias_grads, inputs=grad)

"""Power-iteration spectral normalization."""

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

_EPS = 1e-12


def _unit(x: NDArray[np.float64]) -> NDArray[np.float64]:
    return x / max(float(np.linalg.norm(x)), _EPS)


@dataclass(eq=False)
class SpectralNormState:
    """Left/right singular-vector estimates of one weight matrix.

    For a weight of shape (fan_in, fan_out), ``u`` has length fan_in and
    ``v`` length fan_out; sigma is estimated as u^T W v.
    """

    u: NDArray[np.float64]
    v: NDArray[np.float64]
    n_power_iterations: int = 1

    @classmethod
    def initial(cls, weight: NDArray[np.float64], rng: np.random.Generator, n_power_iterations: int = 1):
        u = _unit(rng.standard_normal(weight.shape[0]))
        v = _unit(weight.T @ u)
        return cls(u=u, v=v, n_power_iterations=n_power_iterations)


def power_iterate(state: SpectralNormState, weight: NDArray[np.float64], n_iterations: int = None) -> float:
    """Refine the singular-vector estimates in place; return the new sigma estimate."""
    for _ in range(state.n_power_iterations if n_iterations is None else n_iterations):
        state.v = _unit(weight.T @ state.u)
        state.u = _unit(weight @ state.v)
    return sigma_estimate(state, weight)


def sigma_estimate(state: SpectralNormState, weight: NDArray[np.float64]) -> float:
    """u^T W v with the current estimates (non-negative after a power iteration)."""
    return max(float(state.u @ weight @ state.v), _EPS)


def spectral_normalize(state: SpectralNormState, weight: NDArray[np.float64], n_iterations: int = None) -> NDArray[np.float64]:
    """Run the power iteration(s), then return weight / sigma."""
    sigma = power_iterate(state, weight, n_iterations)
    return weight / sigma


def sigma_gradient(
    grad_normalized: NDArray[np.float64], weight: NDArray[np.float64], state: SpectralNormState
) -> NDArray[np.float64]:
    """Gradient w.r.t. W given the gradient w.r.t. W / sigma(W), with u and v held fixed."""
    sigma = sigma_estimate(state, weight)
    coupling = float(np.sum(grad_normalized * weight)) / (sigma * sigma)
    return grad_normalized / sigma - coupling * np.outer(state.u, state.v)

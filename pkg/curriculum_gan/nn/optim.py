"""Adam with bias correction."""

from dataclasses import dataclass, field
from typing import List

import numpy as np
from numpy.typing import NDArray

from curriculum_gan.utils.errors import DimensionMismatchError


@dataclass(eq=False)
class AdamState:
    """Moment estimates shaped like the parameters, plus the step counter."""

    lr: float = 2e-4
    beta1: float = 0.5
    beta2: float = 0.999
    epsilon: float = 1e-8
    m: List[NDArray[np.float64]] = field(default_factory=list)
    v: List[NDArray[np.float64]] = field(default_factory=list)
    step: int = 0


def adam_step(state: AdamState, params: List[NDArray[np.float64]], grads: List[NDArray[np.float64]]):
    """Update ``params`` in place and return them."""
    if len(params) != len(grads):
        raise DimensionMismatchError(f"{len(params)} parameters but {len(grads)} gradients")
    for p, g in zip(params, grads):
        if p.shape != g.shape:
            raise DimensionMismatchError(f"parameter shape {p.shape} vs gradient shape {g.shape}")
    if not state.m:
        state.m = [np.zeros_like(p) for p in params]
        state.v = [np.zeros_like(p) for p in params]

    state.step += 1
    bc1 = 1.0 - state.beta1 ** state.step
    bc2 = 1.0 - state.beta2 ** state.step
    step_size = state.lr / bc1

    for p, g, m, v in zip(params, grads, state.m, state.v):
        m *= state.beta1
        m += (1.0 - state.beta1) * g
        v *= state.beta2
        v += (1.0 - state.beta2) * (g * g)
        p -= step_size * m / (np.sqrt(v / bc2) + state.epsilon)
    return params


def optimize(net, state: AdamState, grads: List[NDArray[np.float64]]):
    """Adam step on every parameter of ``net``; invalidates its forward caches."""
    adam_step(state, net.parameters(), grads)
    net.version += 1

"""Minimal dense neural-network core: MLP, Adam, spectral normalization, checkpoints."""

from .checkpoint import checkpoint_dict, checkpoint_from_dict, checkpoint_json, load_checkpoint, save_checkpoint
from .mlp import DenseLayer, ForwardCache, Gradients, Mlp, backward, forward
from .optim import AdamState, adam_step, optimize
from .spectral import SpectralNormState, power_iterate, sigma_estimate, spectral_normalize

__all__ = [
    "AdamState",
    "DenseLayer",
    "ForwardCache",
    "Gradients",
    "Mlp",
    "SpectralNormState",
    "adam_step",
    "backward",
    "checkpoint_dict",
    "checkpoint_from_dict",
    "checkpoint_json",
    "forward",
    "load_checkpoint",
    "optimize",
    "power_iterate",
    "save_checkpoint",
    "sigma_estimate",
    "spectral_normalize",
]

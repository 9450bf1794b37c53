"""JSON checkpoints: layer dims, activation names, base64 little-endian float64 arrays."""

import base64
import json
from pathlib import Path
from typing import Any, Dict, Union

import numpy as np

from curriculum_gan.models.config import Activation
from curriculum_gan.nn.mlp import DenseLayer, Mlp
from curriculum_gan.nn.spectral import SpectralNormState
from curriculum_gan.utils.errors import ArtifactIOError

FORMAT_VERSION = 1


def _encode(array: np.ndarray) -> str:
    return base64.b64encode(np.ascontiguousarray(array, dtype="<f8").tobytes()).decode("ascii")


def _decode(text: str, shape) -> np.ndarray:
    return np.frombuffer(base64.b64decode(text), dtype="<f8").astype(np.float64).reshape(shape)


def checkpoint_dict(net: Mlp) -> Dict[str, Any]:
    layers = []
    for layer in net.layers:
        entry = {
            "fan_in": layer.fan_in,
            "fan_out": layer.fan_out,
            "activation": layer.activation.value,
            "weight": _encode(layer.weight),
            "bias": _encode(layer.bias),
            "spectral_norm": layer.spectral_norm is not None,
        }
        if layer.spectral_norm is not None:
            entry["sn_u"] = _encode(layer.spectral_norm.u)
            entry["sn_v"] = _encode(layer.spectral_norm.v)
        layers.append(entry)
    return {"format_version": FORMAT_VERSION, "layers": layers}


def checkpoint_from_dict(payload: Dict[str, Any]) -> Mlp:
    layers = []
    for entry in payload["layers"]:
        fan_in, fan_out = entry["fan_in"], entry["fan_out"]
        sn_state = None
        if entry.get("spectral_norm"):
            sn_state = SpectralNormState(u=_decode(entry["sn_u"], (fan_in,)), v=_decode(entry["sn_v"], (fan_out,)))
        layers.append(
            DenseLayer(
                weight=_decode(entry["weight"], (fan_in, fan_out)),
                bias=_decode(entry["bias"], (fan_out,)),
                activation=Activation(entry["activation"]),
                spectral_norm=sn_state,
            )
        )
    return Mlp(layers=layers)


def checkpoint_json(net: Mlp) -> str:
    return json.dumps(checkpoint_dict(net), indent=2, sort_keys=True) + "\n"


def save_checkpoint(net: Mlp, path: Union[str, Path]) -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(checkpoint_json(net), encoding="utf-8")
    except OSError as e:
        raise ArtifactIOError(f"cannot write checkpoint {path}: {e}")
    return path


def load_checkpoint(path: Union[str, Path]) -> Mlp:
    path = Path(path)
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise ArtifactIOError(f"cannot read checkpoint {path}: {e}")
    return checkpoint_from_dict(payload)

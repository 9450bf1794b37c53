"""Parsing of ``--dataset`` strings: ring:<modes>,<radius>,<sigma> | graded:... | csv:<path>."""

import logging
from enum import Enum
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel

from curriculum_gan.data_sources.csv_dataset import load_csv_dataset
from curriculum_gan.data_sources.synthetic import Dataset, make_graded_mixture, make_ring_gmm
from curriculum_gan.models.config import DataConfig, DifficultyProxy
from curriculum_gan.utils.errors import ConfigError

logger = logging.getLogger(__name__)


class DatasetKind(str, Enum):
    RING = "ring"
    GRADED = "graded"
    CSV = "csv"


class DatasetSpec(BaseModel):
    kind: DatasetKind
    params: List[float] = []
    path: Optional[Path] = None

    @property
    def default_proxy(self) -> DifficultyProxy:
        # graded sigmas only show up in un-normalized distances
        if self.kind == DatasetKind.GRADED:
            return DifficultyProxy.EUCLIDEAN
        return DifficultyProxy.MAHALANOBIS


def parse_dataset_spec(text: str) -> DatasetSpec:
    """Parse a dataset flag.

    ``ring:<modes>,<radius>,<sigma>[,<samples_per_mode>]``,
    ``graded:<modes>,<radius>,<sigma_min>,<sigma_max>[,<samples_per_mode>]``
    or ``csv:<path>``.
    """
    kind, _, rest = text.strip().partition(":")
    try:
        kind = DatasetKind(kind)
    except ValueError:
        raise ConfigError(f"unknown dataset kind {kind!r} in {text!r} (expected ring, graded or csv)")

    if kind == DatasetKind.CSV:
        if not rest:
            raise ConfigError("csv dataset needs a path: csv:<path>")
        return DatasetSpec(kind=kind, path=Path(rest))

    try:
        params = [float(p) for p in rest.split(",") if p.strip()]
    except ValueError:
        raise ConfigError(f"non-numeric dataset parameter in {text!r}")
    expected = (3, 4) if kind == DatasetKind.RING else (4, 5)
    if len(params) not in expected:
        raise ConfigError(f"{kind.value} dataset takes {expected[0]} or {expected[1]} parameters, got {text!r}")
    return DatasetSpec(kind=kind, params=params)


def build_dataset(config: DataConfig) -> Dataset:
    """Materialize the dataset named in ``config.dataset``."""
    spec = parse_dataset_spec(config.dataset)
    if spec.kind == DatasetKind.CSV:
        return load_csv_dataset(spec.path)

    params = list(spec.params)
    if spec.kind == DatasetKind.RING:
        samples_per_mode = int(params[3]) if len(params) == 4 else config.samples_per_mode
        try:
            return make_ring_gmm(int(params[0]), params[1], params[2], samples_per_mode, seed=config.data_seed)
        except ValueError as e:
            raise ConfigError(f"invalid ring dataset {config.dataset!r}: {e}")

    samples_per_mode = int(params[4]) if len(params) == 5 else config.samples_per_mode
    try:
        return make_graded_mixture(
            int(params[0]),
            sigma_min=params[2],
            sigma_max=params[3],
            radius=params[1],
            samples_per_mode=samples_per_mode,
            seed=config.data_seed,
        )
    except ValueError as e:
        raise ConfigError(f"invalid graded dataset {config.dataset!r}: {e}")


def resolve_proxy(config: DataConfig) -> DifficultyProxy:
    if config.proxy is not None:
        return config.proxy
    return parse_dataset_spec(config.dataset).default_proxy

"""Pluggable raw difficulty-score sources: score files, analytic proxy, constant."""

import logging
from enum import Enum
from pathlib import Path
from typing import Optional, Union

import numpy as np
import pandas as pd
from numpy.typing import NDArray
from pydantic import BaseModel

from curriculum_gan.data_sources.synthetic import Dataset
from curriculum_gan.difficulty.scoring import analytic_difficulties
from curriculum_gan.models.config import DifficultyProxy
from curriculum_gan.utils.errors import ArtifactIOError, InvalidScoreError, ScoreAlignmentError

logger = logging.getLogger(__name__)


class ScoreKind(str, Enum):
    FILE = "file"
    ANALYTIC = "analytic"
    CONSTANT = "constant"


class ScoreSource(BaseModel):
    """Where raw difficulty scores come from."""

    kind: ScoreKind
    path: Optional[Path] = None
    value: float = 0.0
    proxy: DifficultyProxy = DifficultyProxy.MAHALANOBIS


def parse_score_source(text: str, proxy: Optional[DifficultyProxy] = None) -> ScoreSource:
    """Parse the ``--scores`` flag: ``analytic``, ``constant[:<value>]`` or a file path."""
    text = text.strip()
    proxy = proxy or DifficultyProxy.MAHALANOBIS
    if text == "analytic":
        return ScoreSource(kind=ScoreKind.ANALYTIC, proxy=proxy)
    if text == "constant" or text.startswith("constant:"):
        value = float(text.split(":", 1)[1]) if ":" in text else 0.0
        return ScoreSource(kind=ScoreKind.CONSTANT, value=value)
    return ScoreSource(kind=ScoreKind.FILE, path=Path(text))


def load_score_file(path: Union[str, Path], n: Optional[int] = None) -> NDArray[np.float64]:
    """Read one decimal raw score per line.

    Raises:
        ScoreAlignmentError: line count differs from ``n``
        InvalidScoreError: unparsable line
    """
    path = Path(path)
    try:
        column = pd.read_csv(path, header=None, names=["score"], dtype=str, skip_blank_lines=True)["score"]
    except pd.errors.EmptyDataError:
        raise InvalidScoreError(f"score file {path} is empty")
    except OSError as e:
        raise ArtifactIOError(f"cannot read score file {path}: {e}")

    values = pd.to_numeric(column, errors="coerce").to_numpy(dtype=np.float64)
    if np.isnan(values).any():
        line = int(np.flatnonzero(np.isnan(values))[0]) + 1
        raise InvalidScoreError(f"{path} line {line}: not a number: {column.iat[line - 1]!r}")
    if n is not None and values.size != n:
        raise ScoreAlignmentError(f"{path} has {values.size} scores but the dataset has {n} samples")
    return values


def write_score_file(scores: NDArray[np.float64], path: Union[str, Path]) -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        pd.Series(np.asarray(scores, dtype=np.float64)).to_csv(
            path, header=False, index=False, float_format="%.17g", lineterminator="\n"
        )
    except OSError as e:
        raise ArtifactIOError(f"cannot write {path}: {e}")
    return path


def resolve_raw_scores(source: ScoreSource, dataset: Dataset) -> NDArray[np.float64]:
    """One raw score per dataset sample, index-aligned."""
    if source.kind == ScoreKind.FILE:
        raw = load_score_file(source.path, n=dataset.n)
        logger.info(f"Loaded {raw.size} raw scores from {source.path}")
    elif source.kind == ScoreKind.ANALYTIC:
        raw = analytic_difficulties(dataset, source.proxy)
    else:
        raw = np.full(dataset.n, source.value, dtype=np.float64)
    return raw

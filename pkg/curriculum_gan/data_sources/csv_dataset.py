"""CSV ingestion and dumping of datasets (comma-separated, no header, LF endings)."""

import logging
from pathlib import Path
from typing import Union

import numpy as np
import pandas as pd

from curriculum_gan.data_sources.synthetic import Dataset
from curriculum_gan.utils.errors import ArtifactIOError, DatasetParseError, DatasetTooSmallError

logger = logging.getLogger(__name__)

# 17 significant digits round-trip every float64 exactly
FLOAT_FORMAT = "%.17g"


def load_csv_dataset(path: Union[str, Path]) -> Dataset:
    """Load an n x d numeric CSV without header. The result carries no metadata.

    Raises:
        DatasetParseError: ragged rows or non-numeric cells (with the 1-based line number)
        DatasetTooSmallError: empty file or a single row
    """
    path = Path(path)
    try:
        frame = pd.read_csv(path, header=None, dtype=str, keep_default_na=False, skip_blank_lines=False)
    except pd.errors.EmptyDataError:
        raise DatasetTooSmallError(f"{path} is empty")
    except pd.errors.ParserError as e:
        raise DatasetParseError(f"ragged rows in {path}: {e}")
    except OSError as e:
        raise ArtifactIOError(f"cannot read {path}: {e}")

    numeric = frame.apply(pd.to_numeric, errors="coerce").astype(np.float64)
    bad = ~np.isfinite(numeric.to_numpy())
    if bad.any():
        row, col = (int(i) for i in np.argwhere(bad)[0])
        cell = frame.iat[row, col]
        if pd.isna(cell) or cell == "":
            raise DatasetParseError(f"missing value in column {col + 1} (ragged row)", line=row + 1)
        raise DatasetParseError(f"non-numeric cell {cell!r} in column {col + 1}", line=row + 1)

    # reparse the text cells with round-trip precision
    samples = np.array([[float(c) for c in row] for row in frame.itertuples(index=False)], dtype=np.float64)
    logger.info(f"Loaded {samples.shape[0]} x {samples.shape[1]} dataset from {path}")
    return Dataset(samples=samples)


def dump_csv_dataset(dataset: Dataset, path: Union[str, Path]) -> Path:
    """Write samples so that ``load_csv_dataset`` returns them bit for bit."""
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        pd.DataFrame(dataset.samples).to_csv(
            path, header=False, index=False, float_format=FLOAT_FORMAT, lineterminator="\n"
        )
    except OSError as e:
        raise ArtifactIOError(f"cannot write {path}: {e}")
    return path

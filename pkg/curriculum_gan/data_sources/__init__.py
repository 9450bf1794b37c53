"""Datasets and difficulty-score sources."""

from .csv_dataset import dump_csv_dataset, load_csv_dataset
from .scores import ScoreKind, ScoreSource, load_score_file, parse_score_source, resolve_raw_scores, write_score_file
from .synthetic import Dataset, GmmSpec, MixtureMetadata, make_graded_mixture, make_ring_gmm, sample_mixture
from .specs import build_dataset, parse_dataset_spec

__all__ = [
    "Dataset",
    "GmmSpec",
    "MixtureMetadata",
    "ScoreKind",
    "ScoreSource",
    "build_dataset",
    "dump_csv_dataset",
    "load_csv_dataset",
    "load_score_file",
    "make_graded_mixture",
    "make_ring_gmm",
    "parse_dataset_spec",
    "parse_score_source",
    "resolve_raw_scores",
    "sample_mixture",
    "write_score_file",
]

"""Error types raised across the package, each mapped to a CLI exit code."""


class CurriculumGanError(Exception):
    """Base error. ``exit_code`` is what the CLI returns for it."""

    exit_code = 1


class ConfigError(CurriculumGanError):
    exit_code = 2


class InvalidScoreError(ConfigError):
    """Raw difficulty scores are empty or non-finite."""


class UnsupportedSourceError(ConfigError):
    """A score source cannot be used with the given dataset."""


class MissingMetadataError(ConfigError):
    """An operation needs synthetic-mixture metadata the dataset does not carry."""


class DatasetParseError(ConfigError):
    def __init__(self, message: str, line: int = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DatasetTooSmallError(ConfigError):
    pass


class ScoreAlignmentError(ConfigError):
    """Score file length differs from the dataset size."""


class DimensionMismatchError(ConfigError):
    pass


class StaleCacheError(CurriculumGanError):
    """Backward pass requested with a cache from before the last parameter change."""


class DegenerateDistributionError(ConfigError):
    """The sampling curriculum puts zero mass on every sample (k and scores leave nothing to draw)."""


class DivergedTrainingError(CurriculumGanError):
    exit_code = 3


class ArtifactIOError(CurriculumGanError):
    exit_code = 4

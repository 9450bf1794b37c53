"""Logging utilities."""

import logging
import sys
from pathlib import Path
from typing import Optional

from curriculum_gan.utils.config import load_config


def setup_logging(config_path: Optional[Path] = None, level: Optional[str] = None):
    """Setup logging configuration.

    Args:
        config_path: YAML file with a ``logging`` section (level, file)
        level: Overrides the configured level when given
    """
    config = load_config(config_path)
    log_config = config.get("logging", {}) or {}
    level = (level or log_config.get("level", "INFO")).upper()
    log_file = log_config.get("file")

    # Create logs directory if needed
    if log_file:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)

    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))

    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=handlers,
        force=True,
    )
    # matplotlib is chatty at DEBUG
    logging.getLogger("matplotlib").setLevel(logging.WARNING)

"""Configuration file lookup and loading."""

import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

logger = logging.getLogger(__name__)

CONFIG_DIR = Path(__file__).parent.parent.parent / "config"

load_dotenv()


def find_config_path(config_path: Optional[Path] = None) -> Path:
    """Resolve the config file: explicit path, then CUGAN_CONFIG, then config.yaml, then the example."""
    if config_path is not None:
        return Path(config_path)

    env_path = os.environ.get("CUGAN_CONFIG", "").strip()
    if env_path:
        return Path(env_path)

    config_path = CONFIG_DIR / "config.yaml"
    if not config_path.exists():
        config_path = CONFIG_DIR / "config.example.yaml"
    return config_path


def load_config(config_path: Optional[Path] = None) -> Dict[str, Any]:
    """Load the YAML configuration, falling back to an empty dict (built-in defaults)."""
    config_path = find_config_path(config_path)

    try:
        if config_path.exists():
            with open(config_path, "r", encoding="utf-8") as f:
                return yaml.safe_load(f) or {}
        logger.warning(f"No config file found at {config_path}, using defaults")
    except Exception as e:
        logger.warning(f"Could not load config from {config_path}: {e}, using defaults")
    return {}


def thread_cap(default: int) -> int:
    """Number of parallel seed workers, capped by CUGAN_THREADS when set."""
    raw = os.environ.get("CUGAN_THREADS", "").strip()
    if not raw:
        return max(1, default)
    try:
        cap = int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer CUGAN_THREADS={raw!r}")
        return max(1, default)
    return max(1, min(default, cap))

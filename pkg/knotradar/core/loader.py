# coding=utf-8
"""
Configuration loading

Reads config/config.yaml and applies environment overrides.
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from knotradar.utils.errors import ConfigurationError

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = "config/config.yaml"


def _get_env_bool(key: str) -> Optional[bool]:
    """Boolean from the environment, None when unset"""
    value = os.environ.get(key, "").strip().lower()
    if not value:
        return None
    return value in ("true", "1", "yes")


def _get_env_int(key: str, default: int = 0) -> int:
    value = os.environ.get(key, "").strip()
    if not value:
        return default
    try:
        return int(value)
    except ValueError:
        logger.warning("config.env invalid_int key=%s value=%s", key, value)
        return default


def _get_env_str(key: str, default: str = "") -> str:
    return os.environ.get(key, "").strip() or default


def _load_app_config(config_data: Dict) -> Dict:
    app_config = config_data.get("app", {}) or {}
    return {
        "LOG_LEVEL": _get_env_str("KNOTRADAR_LOG_LEVEL") or app_config.get("log_level", "WARNING"),
        "FORMAT": _get_env_str("KNOTRADAR_FORMAT") or app_config.get("format", "text"),
    }


def _load_cache_config(config_data: Dict) -> Dict:
    cache_config = config_data.get("cache", {}) or {}
    enabled_env = _get_env_bool("KNOTRADAR_CACHE_ENABLED")
    return {
        "ENABLED": enabled_env if enabled_env is not None else cache_config.get("enabled", True),
        "DIR": _get_env_str("KNOTRADAR_CACHE_DIR") or cache_config.get("dir", ".knotradar-cache"),
    }


def _load_heegaard_config(config_data: Dict) -> Dict:
    heegaard = config_data.get("heegaard", {}) or {}
    return {
        # added to the provable search depth; 0 keeps the default
        "EXTRA_PERIODS": heegaard.get("extra_periods", 0),
    }


def _load_fox_config(config_data: Dict) -> Dict:
    fox = config_data.get("fox", {}) or {}
    return {
        "DET_METHOD": _get_env_str("KNOTRADAR_DET_METHOD") or fox.get("det_method", "bird"),
    }


def _load_batch_config(config_data: Dict) -> Dict:
    batch = config_data.get("batch", {}) or {}
    return {
        "JOBS": _get_env_int("KNOTRADAR_JOBS") or batch.get("jobs", 1),
        "RECORD_DIR": batch.get("record_dir", ".knotradar"),
        "SUMMARY_FILE": batch.get("summary_file", "summary.txt"),
    }


def load_config(config_path: Optional[str] = None) -> Dict[str, Any]:
    """
    Load the configuration

    Args:
        config_path: YAML file; defaults to env CONFIG_PATH, then config/config.yaml

    Returns:
        dict with APP/CACHE/HEEGAARD/FOX/BATCH sections

    Raises:
        FileNotFoundError: an explicitly named file does not exist
        ConfigurationError: the file is not a YAML mapping
    """
    explicit = config_path is not None or bool(os.environ.get("CONFIG_PATH"))
    if config_path is None:
        config_path = os.environ.get("CONFIG_PATH") or DEFAULT_CONFIG_PATH

    config_data: Dict = {}
    if Path(config_path).exists():
        with open(config_path, "r", encoding="utf-8") as f:
            loaded = yaml.safe_load(f)
        if loaded is not None and not isinstance(loaded, dict):
            raise ConfigurationError(f"{config_path} must contain a mapping")
        config_data = loaded or {}
        logger.debug("config.load path=%s", config_path)
    elif explicit:
        raise FileNotFoundError(f"config file {config_path} does not exist")
    else:
        logger.debug("config.load defaults path=%s missing", config_path)

    return {
        "APP": _load_app_config(config_data),
        "CACHE": _load_cache_config(config_data),
        "HEEGAARD": _load_heegaard_config(config_data),
        "FOX": _load_fox_config(config_data),
        "BATCH": _load_batch_config(config_data),
    }

"""Configuration loading utilities."""

import os
from dataclasses import fields
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml

from qrotor.core.types import FitConfig

DATA_DIR_ENV = "QROTOR_DATA_DIR"


def load_config(path: Union[str, Path]) -> FitConfig:
    """Load fit settings from a YAML file.

    Args:
        path: Path to the YAML configuration file.

    Returns:
        FitConfig instance.

    Raises:
        FileNotFoundError: If the config file doesn't exist.
        ValueError: If a field is unknown or out of range.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Config file not found: {path}")

    with open(path, 'r') as f:
        data = yaml.safe_load(f)

    return parse_config(data or {})


def parse_config(data: Dict[str, Any]) -> FitConfig:
    """Parse a configuration dictionary into FitConfig.

    Settings may sit at the top level or under a ``fit`` key. Missing
    settings keep their defaults.

    Args:
        data: Dictionary with configuration values.

    Returns:
        FitConfig instance.

    Raises:
        ValueError: If a field is unknown or out of range.
    """
    if not isinstance(data, dict):
        raise ValueError(f"Config must be a mapping, got {type(data).__name__}")
    section = data.get('fit', data)

    known = {f.name: f.type for f in fields(FitConfig)}
    unknown = sorted(set(section) - set(known))
    if unknown:
        raise ValueError(f"Unknown config fields: {unknown}")

    values = {}
    for name, value in section.items():
        values[name] = int(value) if name in ('grid_points', 'max_iterations') else float(value)
    return FitConfig(**values)


def save_config(config: FitConfig, path: Union[str, Path]) -> None:
    """Save fit settings to a YAML file.

    Args:
        config: FitConfig instance to save.
        path: Path for the output YAML file.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    with open(path, 'w') as f:
        yaml.dump({'fit': config.as_dict()}, f, default_flow_style=False, sort_keys=False)


def data_dir(override: Optional[Union[str, Path]] = None) -> Path:
    """Directory holding bundled data files.

    Resolution order: explicit override, the QROTOR_DATA_DIR environment
    variable, then the package's own data directory.
    """
    if override is not None:
        return Path(override)
    env = os.environ.get(DATA_DIR_ENV)
    if env:
        return Path(env)
    return Path(__file__).resolve().parent.parent / "data"

"""Core types, errors and configuration."""

from qrotor.core.types import DeformationParameter, FitConfig, LevelDataset, ModelKind, Regime, SpinLabel
from qrotor.core.base import BaseModel
from qrotor.core.config import load_config
from qrotor.core.errors import (
    DataError,
    DomainError,
    QRotorError,
    SeriesRangeError,
    UnsupportedRegimeError,
)

__all__ = [
    "DeformationParameter",
    "FitConfig",
    "LevelDataset",
    "ModelKind",
    "Regime",
    "SpinLabel",
    "BaseModel",
    "load_config",
    "DataError",
    "DomainError",
    "QRotorError",
    "SeriesRangeError",
    "UnsupportedRegimeError",
]

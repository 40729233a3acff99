"""qrotor - q-deformed su_q(2) rotational spectra and their fits."""

__version__ = "0.1.0"

from qrotor.core.types import (
    DeformationParameter,
    DeformedParams,
    FitConfig,
    FitResult,
    HolmbergLipasParams,
    LevelDataset,
    ModelKind,
    Regime,
    RotorParams,
    SpinLabel,
)
from qrotor.core.base import BaseModel
from qrotor.spectra import energy, get_model, spectrum_table
from qrotor.fitting import fit, fit_all, quality_sigma

__all__ = [
    "DeformationParameter",
    "DeformedParams",
    "FitConfig",
    "FitResult",
    "HolmbergLipasParams",
    "LevelDataset",
    "ModelKind",
    "Regime",
    "RotorParams",
    "SpinLabel",
    "BaseModel",
    "energy",
    "get_model",
    "spectrum_table",
    "fit",
    "fit_all",
    "quality_sigma",
]

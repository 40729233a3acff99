"""Rotational spectrum models."""

from qrotor.spectra.registry import ModelRegistry, get_model
from qrotor.spectra.models import (
    HolmbergLipasModel,
    ItoModel,
    RotorExpansionModel,
    SinusModel,
    Suq2Model,
    TanhModel,
    energy,
    spectrum_table,
)

__all__ = [
    "ModelRegistry",
    "get_model",
    "Suq2Model",
    "SinusModel",
    "ItoModel",
    "TanhModel",
    "RotorExpansionModel",
    "HolmbergLipasModel",
    "energy",
    "spectrum_table",
]

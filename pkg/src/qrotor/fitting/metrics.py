"""Quality measures for comparing fitted and observed levels."""

from typing import Dict, List, Sequence, Tuple

import numpy as np

from qrotor.core.errors import DomainError
from qrotor.core.types import LevelDataset


def _as_array(data: LevelDataset, model_energies: Sequence[float]) -> np.ndarray:
    model = np.asarray(model_energies, dtype=float)
    if model.shape != (len(data),):
        raise ValueError(
            f"Got {model.size} model energies for {len(data)} levels"
        )
    return model


def residuals(data: LevelDataset, model_energies: Sequence[float]) -> List[Tuple[int, float]]:
    """Residuals E_exp - E_th paired with their ell.

    Args:
        data: Observed levels.
        model_energies: Model energies in the same order as ``data``.

    Returns:
        List of (ell, residual) tuples.
    """
    model = _as_array(data, model_energies)
    return [(int(ell), float(r)) for ell, r in zip(data.ells, data.energies - model)]


def quality_sigma(data: LevelDataset, model_energies: Sequence[float]) -> float:
    """Fit quality sqrt((2/l_max) * sum (E_exp - E_th)^2).

    The sum runs over the levels present; l_max is the largest l among
    them. For levels at every even l up to l_max this is the RMS residual.

    Args:
        data: Observed levels.
        model_energies: Model energies in the same order as ``data``.

    Returns:
        sigma in cm^-1.

    Raises:
        DomainError: If the dataset is empty or l_max is 0.
    """
    if len(data) == 0:
        raise DomainError("Quality measure is undefined for an empty dataset")
    if data.ell_max == 0:
        raise DomainError("Quality measure needs l_max > 0")
    model = _as_array(data, model_energies)
    return float(np.sqrt(2.0 / data.ell_max * np.sum((data.energies - model) ** 2)))


def evaluate_fit(data: LevelDataset, model_energies: Sequence[float]) -> Dict[str, float]:
    """Summary statistics of a model against observed levels.

    Returns:
        Dictionary with sigma, rms and max_abs_residual in cm^-1.
    """
    model = _as_array(data, model_energies)
    diff = data.energies - model
    return {
        "sigma": quality_sigma(data, model),
        "rms": float(np.sqrt(np.mean(diff ** 2))),
        "max_abs_residual": float(np.max(np.abs(diff))),
    }

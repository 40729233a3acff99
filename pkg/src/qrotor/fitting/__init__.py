"""Data reduction, quality measure and least-squares fits."""

from qrotor.fitting.data import (
    PUBLISHED_SIGMA,
    load_branches,
    load_bundled_levels,
    load_levels,
    reduce_branches,
    save_branches,
    save_levels,
    synthesize_branches,
)
from qrotor.fitting.metrics import evaluate_fit, quality_sigma, residuals
from qrotor.fitting.optimize import fit, fit_all

__all__ = [
    "PUBLISHED_SIGMA",
    "load_branches",
    "load_bundled_levels",
    "load_levels",
    "reduce_branches",
    "save_branches",
    "save_levels",
    "synthesize_branches",
    "evaluate_fit",
    "quality_sigma",
    "residuals",
    "fit",
    "fit_all",
]

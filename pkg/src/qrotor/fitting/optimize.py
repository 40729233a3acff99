"""Least-squares fits of the rotational models to level datasets.

Every model is linear in its amplitude (A or a) once the nonlinear
parameter (tau or b) is fixed, so the amplitude is solved exactly for each
trial value and only a one-dimensional search remains. A log-spaced grid
picks the basin and a bounded Brent search in log space, started from the
best grid point only, converges it; a narrow second pass polishes the
result. Model III is linear in both parameters and is solved directly.
"""

import logging
import math
from typing import Iterable, List, Optional, Tuple, Union

import numpy as np
from scipy.optimize import minimize_scalar

from qrotor.core.base import BaseModel
from qrotor.core.errors import DataError, DomainError
from qrotor.core.types import FitConfig, FitResult, LevelDataset, ModelKind, ModelParams
from qrotor.fitting.metrics import quality_sigma, residuals
from qrotor.spectra.registry import get_model

logger = logging.getLogger(__name__)

MIN_LEVELS = 3


def _profile(model: BaseModel, nonlinear: float, ells: np.ndarray, energies: np.ndarray) -> Tuple[float, float]:
    """Sum of squared residuals and best amplitude at fixed ``nonlinear``."""
    try:
        g = model.shape(nonlinear, ells)
    except DomainError:
        return math.inf, math.nan
    gg = float(g @ g)
    if not np.all(np.isfinite(g)) or gg <= 0:
        return math.inf, math.nan
    amplitude = float(g @ energies) / gg
    r = energies - amplitude * g
    return float(r @ r), amplitude


def _fit_linear(model: BaseModel, ells: np.ndarray, energies: np.ndarray) -> Tuple[ModelParams, int, bool, str]:
    design = model.design_matrix(ells)
    coef, _, rank, _ = np.linalg.lstsq(design, energies, rcond=None)
    if rank < design.shape[1]:
        raise DataError("Levels do not determine both parameters of the linear model")
    params = model.make_params(float(coef[0]), float(coef[1]) / float(coef[0]))
    return params, 1, True, "linear least squares"


def _fit_profile(
    model: BaseModel, ells: np.ndarray, energies: np.ndarray, config: FitConfig
) -> Tuple[ModelParams, int, bool, str]:
    """Grid scan then bounded refinement around the single best grid point.

    Only one start is refined: the amplitude is solved exactly at every
    trial value, so there is nothing to seed from the lowest level, and the
    default log grid brackets a unique basin for every model on the
    bundled data. Returns params, evaluation count, convergence flag and
    the solver messages joined.
    """
    grid = np.geomspace(config.grid_low, config.grid_high, config.grid_points)
    scores = np.array([_profile(model, value, ells, energies)[0] for value in grid])
    if not np.any(np.isfinite(scores)):
        raise DataError(f"Model {model.kind.label} cannot be evaluated anywhere on the starting grid")
    best = int(np.argmin(scores))
    logger.debug("Model %s: grid minimum at %.6g", model.kind.label, grid[best])

    center = float(grid[best])
    lo = math.log(grid[max(best - 1, 0)] / center)
    hi = math.log(grid[min(best + 1, len(grid) - 1)] / center)
    options = {"xatol": config.xtol, "maxiter": config.max_iterations}

    evaluations = len(grid)
    converged = True
    messages = []
    for _ in range(2):
        objective = lambda u, c=center: _profile(model, c * math.exp(u), ells, energies)[0]
        res = minimize_scalar(objective, bounds=(lo, hi), method="bounded", options=options)
        evaluations += int(res.nfev)
        converged = converged and bool(res.success)
        messages.append(str(res.message))
        center *= math.exp(res.x)
        logger.debug("Model %s: refined to %.12g", model.kind.label, center)
        lo = max(-config.polish_width, math.log(config.grid_low / center))
        hi = min(config.polish_width, math.log(config.grid_high / center))

    _, amplitude = _profile(model, center, ells, energies)
    return model.make_params(amplitude, center), evaluations, converged, "; ".join(messages)


def fit(kind: Union[ModelKind, str], data: LevelDataset, config: Optional[FitConfig] = None) -> FitResult:
    """Least-squares fit of one model.

    Args:
        kind: Model to fit.
        data: Observed levels, at least three.
        config: Search settings; defaults to FitConfig().

    Returns:
        FitResult with parameters, sigma, residuals and diagnostics.
        ``converged`` is False when a refinement pass hit its iteration cap.

    Raises:
        DataError: If there are fewer than three levels or the model cannot
            be evaluated on the data.
    """
    config = config or FitConfig()
    if len(data) < MIN_LEVELS:
        raise DataError(f"Fitting needs at least {MIN_LEVELS} levels, got {len(data)}")

    model = get_model(kind)
    ells = data.ells.astype(float)
    energies = data.energies

    if model.design_matrix(ells) is not None:
        params, iterations, converged, message = _fit_linear(model, ells, energies)
    else:
        params, iterations, converged, message = _fit_profile(model, ells, energies, config)

    predicted = model.energies(params, ells)
    result = FitResult(
        kind=model.kind,
        params=params,
        sigma=quality_sigma(data, predicted),
        residuals=residuals(data, predicted),
        iterations=iterations,
        converged=converged,
        message=message,
    )
    if not converged:
        logger.warning("Model %s did not converge: %s", model.kind.label, message)
    logger.info("Model %s: %s sigma=%.4f", model.kind.label, params.as_dict(), result.sigma)
    return result


def fit_all(
    data: LevelDataset,
    kinds: Optional[Iterable[Union[ModelKind, str]]] = None,
    config: Optional[FitConfig] = None,
) -> List[FitResult]:
    """Fit several models (all six by default) in ModelKind order."""
    kinds = list(ModelKind) if kinds is None else [ModelKind(k) for k in kinds]
    return [fit(kind, data, config) for kind in kinds]

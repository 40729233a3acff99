"""Text, CSV and JSON renderings of fits and spectra."""

import json
from pathlib import Path
from typing import Any, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from qrotor.core.types import (
    DeformedParams,
    FitResult,
    HolmbergLipasParams,
    LevelDataset,
    ModelKind,
    ModelParams,
    RotorParams,
)
from qrotor.spectra.registry import get_model


def scaled_parameters(params: ModelParams) -> List[Tuple[str, str]]:
    """Human-readable (name, value) pairs using the conventional scalings."""
    if isinstance(params, DeformedParams):
        return [("A", f"{params.A:.3f}"), ("10^2 tau", f"{100 * params.tau:.3f}")]
    if isinstance(params, RotorParams):
        return [("A", f"{params.A:.3f}"), ("10^2 B", f"{100 * params.B:.3f}")]
    if isinstance(params, HolmbergLipasParams):
        return [("a", f"{params.a:.0f}"), ("10^3 b", f"{1000 * params.b:.3f}")]
    raise TypeError(f"Unknown parameter type: {type(params).__name__}")


def format_parameter_table(results: Sequence[FitResult]) -> str:
    """One row per fitted model: label, scaled parameters and sigma."""
    lines = [f"{'Model':<6} {'Parameter 1':>20} {'Parameter 2':>20} {'sigma':>8}"]
    lines.append("-" * len(lines[0]))
    for result in results:
        (n1, v1), (n2, v2) = scaled_parameters(result.params)
        flag = "" if result.converged else "  (not converged)"
        lines.append(
            f"{result.kind.label:<6} {n1 + ' = ' + v1:>20} {n2 + ' = ' + v2:>20} {result.sigma:>8.3f}{flag}"
        )
    return "\n".join(lines)


def predicted_energies(data: LevelDataset, result: FitResult) -> np.ndarray:
    return get_model(result.kind).energies(result.params, data.ells)


def residual_frame(data: LevelDataset, result: FitResult) -> pd.DataFrame:
    """Columns ell, E_exp, E_th, residual for plotting."""
    predicted = predicted_energies(data, result)
    return pd.DataFrame({
        "ell": data.ells,
        "E_exp": data.energies,
        "E_th": predicted,
        "residual": data.energies - predicted,
    })


def prediction_frame(data: LevelDataset, results: Sequence[FitResult]) -> pd.DataFrame:
    """Observed levels next to each model's predictions, unrounded."""
    frame = pd.DataFrame({"ell": data.ells, "exp.": data.energies})
    for result in results:
        frame[result.kind.label] = predicted_energies(data, result)
    return frame


def format_value(value: float) -> str:
    """One decimal at or above 1000 cm^-1, two below."""
    return f"{value:.1f}" if abs(value) >= 1000 else f"{value:.2f}"


def rounded_prediction_frame(frame: pd.DataFrame) -> pd.DataFrame:
    rounded = frame.copy()
    for column in rounded.columns:
        if column != "ell":
            rounded[column] = [format_value(v) for v in frame[column]]
    return rounded


def format_prediction_table(frame: pd.DataFrame) -> str:
    """Fixed-width text table of a prediction frame."""
    rounded = rounded_prediction_frame(frame)
    columns = list(rounded.columns)
    widths = [max(4, len(c)) if c == "ell" else 9 for c in columns]
    lines = [" ".join(f"{c:>{w}}" for c, w in zip(columns, widths))]
    for _, row in rounded.iterrows():
        lines.append(" ".join(f"{str(row[c]):>{w}}" for c, w in zip(columns, widths)))
    return "\n".join(lines)


def spectrum_frame(table: Sequence[Tuple[int, float]]) -> pd.DataFrame:
    return pd.DataFrame(list(table), columns=["ell", "energy_cm1"])


def spectrum_document(kind: ModelKind, params: ModelParams, table: Sequence[Tuple[int, float]]) -> dict:
    return {
        "model": kind.value,
        "label": kind.label,
        "description": get_model(kind).__doc__.split("\n")[0],
        "params": params.as_dict(),
        "levels": [[ell, e] for ell, e in table],
    }


def write_json(obj: Any, path: Optional[Union[str, Path]] = None) -> str:
    """Serialise ``obj`` as indented JSON, writing it to ``path`` if given."""
    text = json.dumps(obj, indent=2) + "\n"
    if path is not None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    return text


def write_csv(frame: pd.DataFrame, path: Optional[Union[str, Path]] = None) -> str:
    """Render ``frame`` as CSV without the index, writing it to ``path`` if given."""
    text = frame.to_csv(index=False, lineterminator="\n")
    if path is not None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    return text

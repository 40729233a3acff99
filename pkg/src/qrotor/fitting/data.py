"""Level datasets: branch-line reduction, synthetic lines and CSV I/O."""

import logging
from pathlib import Path
from typing import Dict, Iterable, List, Mapping, Optional, Union

import pandas as pd

from qrotor.core.config import data_dir
from qrotor.core.errors import DataError
from qrotor.core.types import Band, Branch, BranchLine, LevelDataset, ModelKind

logger = logging.getLogger(__name__)

LEVEL_COLUMNS = ["ell", "energy_cm1"]
BRANCH_COLUMNS = ["branch", "ell", "wavenumber_cm1"]
BUNDLED_LEVELS = "hf_v0.csv"

# Published quality sigma (cm^-1) of each model on the bundled HF levels.
PUBLISHED_SIGMA = {
    ModelKind.I: 0.072,
    ModelKind.IPRIME: 0.072,
    ModelKind.II: 0.048,
    ModelKind.IIPRIME: 0.051,
    ModelKind.III: 0.163,
    ModelKind.IV: 0.313,
}


def _index_lines(lines: Iterable[BranchLine]) -> Dict[Branch, Dict[int, float]]:
    table: Dict[Branch, Dict[int, float]] = {Branch.R: {}, Branch.P: {}}
    for line in lines:
        column = table[line.branch]
        if line.ell in column:
            raise DataError(f"Duplicate {line.branch.value}({line.ell}) line")
        column[line.ell] = line.wavenumber
    return table


def reduce_branches(lines: Iterable[BranchLine], band: Union[Band, str]) -> LevelDataset:
    """Chain combination differences into level energies with E(0) = 0.

    For the lower band (v0), R(l) - P(l+2) = E(l+2) - E(l) gives the even
    levels 2, 4, ...; for the upper band (v1), R(l) - P(l) = E(l+1) - E(l-1)
    over odd l gives the same even levels of the upper state. The chain
    stops at the first missing pair; lines beyond that point mean a gap.

    Args:
        lines: R and P branch lines.
        band: Which band to reconstruct.

    Returns:
        LevelDataset, empty when no pair is available.

    Raises:
        DataError: If a line needed to connect later lines is missing, a
            line is duplicated, or a spacing is not positive.
    """
    band = Band(band)
    table = _index_lines(lines)
    r, p = table[Branch.R], table[Branch.P]
    parity = 0 if band is Band.V0 else 1
    step = 2 if band is Band.V0 else 0

    levels = []
    energy = 0.0
    ell = parity
    while ell in r and ell + step in p:
        spacing = r[ell] - p[ell + step]
        if spacing <= 0:
            raise DataError(
                f"Non-positive spacing {spacing:g} cm^-1 from R({ell}) - P({ell + step})"
            )
        energy += spacing
        levels.append((ell + 1 if band is Band.V1 else ell + 2, energy))
        ell += 2

    beyond_r = [k for k in r if k % 2 == parity and k > ell]
    beyond_p = [k for k in p if k % 2 == parity and k >= ell + step and k > ell]
    if beyond_r or beyond_p:
        missing = f"R({ell})" if ell not in r else f"P({ell + step})"
        raise DataError(
            f"Missing {missing} line: lines up to l={max(beyond_r + beyond_p)} cannot be chained"
        )

    if not levels and (r or p):
        logger.warning("No combination differences available for band %s", band.value)
    logger.info("Reduced %d branch lines to %d levels of band %s",
                len(r) + len(p), len(levels), band.label)
    return LevelDataset(band=band.label, levels=levels)


def synthesize_branches(
    lower: Mapping[int, float],
    upper: Mapping[int, float],
    band_origin: float,
) -> List[BranchLine]:
    """Generate R and P lines from lower- and upper-band level energies.

    R(l) = nu0 + E'(l+1) - E(l) and P(l) = nu0 + E'(l-1) - E(l), emitted
    for every l of ``lower`` whose partner level exists in ``upper``.

    Args:
        lower: Lower-band energies by l.
        upper: Upper-band energies by l, relative to ``band_origin``.
        band_origin: Vibrational band origin nu0 in cm^-1.

    Returns:
        Lines sorted by branch (R first) and l.
    """
    lines = []
    for ell in sorted(lower):
        if ell + 1 in upper:
            lines.append(BranchLine(Branch.R, ell, band_origin + upper[ell + 1] - lower[ell]))
    for ell in sorted(lower):
        if ell >= 1 and ell - 1 in upper:
            lines.append(BranchLine(Branch.P, ell, band_origin + upper[ell - 1] - lower[ell]))
    return lines


def _read_csv(path: Union[str, Path], columns: List[str]) -> pd.DataFrame:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Data file not found: {path}")
    try:
        frame = pd.read_csv(path, comment="#", skipinitialspace=True, float_precision="round_trip")
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as exc:
        raise DataError(f"Cannot parse {path}: {exc}") from exc
    missing = [c for c in columns if c not in frame.columns]
    if missing:
        raise DataError(f"{path} is missing columns {missing}; expected header {','.join(columns)}")
    if frame[columns].isnull().any().any():
        raise DataError(f"{path} has empty or malformed cells")
    return frame


def _integral_ells(frame: pd.DataFrame, path: Union[str, Path]) -> List[int]:
    try:
        values = pd.to_numeric(frame["ell"])
    except (ValueError, TypeError) as exc:
        raise DataError(f"{path}: ell column is not numeric") from exc
    if (values % 1 != 0).any():
        raise DataError(f"{path}: ell values must be integers")
    return values.astype(int).tolist()


def load_levels(path: Union[str, Path], band: str = "v=0") -> LevelDataset:
    """Load a level CSV with header ``ell,energy_cm1``.

    Raises:
        FileNotFoundError: If the file doesn't exist.
        DataError: If the file is malformed.
    """
    frame = _read_csv(path, LEVEL_COLUMNS)
    ells = _integral_ells(frame, path)
    try:
        energies = pd.to_numeric(frame["energy_cm1"]).astype(float).tolist()
    except (ValueError, TypeError) as exc:
        raise DataError(f"{path}: energy_cm1 column is not numeric") from exc
    return LevelDataset(band=band, levels=list(zip(ells, energies)))


def save_levels(data: LevelDataset, path: Union[str, Path]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    data.to_frame().to_csv(path, index=False)


def load_branches(path: Union[str, Path]) -> List[BranchLine]:
    """Load a branch CSV with header ``branch,ell,wavenumber_cm1``.

    Raises:
        FileNotFoundError: If the file doesn't exist.
        DataError: If the file is malformed or holds an invalid line.
    """
    frame = _read_csv(path, BRANCH_COLUMNS)
    ells = _integral_ells(frame, path)
    lines = []
    for branch, ell, wavenumber in zip(frame["branch"].astype(str).str.strip(), ells, frame["wavenumber_cm1"]):
        try:
            lines.append(BranchLine(Branch(branch.upper()), ell, float(wavenumber)))
        except ValueError as exc:
            raise DataError(f"{path}: invalid line {branch},{ell},{wavenumber}: {exc}") from exc
    return lines


def save_branches(lines: Iterable[BranchLine], path: Union[str, Path]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame = pd.DataFrame(
        [(line.branch.value, line.ell, line.wavenumber) for line in lines],
        columns=BRANCH_COLUMNS,
    )
    frame.to_csv(path, index=False)


def load_bundled_levels(name: str = BUNDLED_LEVELS, directory: Optional[Union[str, Path]] = None) -> LevelDataset:
    """Load a bundled level file, honouring QROTOR_DATA_DIR."""
    return load_levels(data_dir(directory) / name)

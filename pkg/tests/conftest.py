"""Shared test fixtures."""

import pytest

from qrotor.core.types import (
    DeformationParameter,
    DeformedParams,
    HolmbergLipasParams,
    LevelDataset,
    ModelKind,
    RotorParams,
)
from qrotor.fitting.data import load_bundled_levels

# Published parameter sets for the HF v=0 band
PUBLISHED_PARAMS = {
    ModelKind.I: DeformedParams(A=20.553, tau=0.01742),
    ModelKind.IPRIME: DeformedParams(A=20.554, tau=0.01742),
    ModelKind.II: DeformedParams(A=20.559, tau=0.00623),
    ModelKind.IIPRIME: DeformedParams(A=20.559, tau=0.00623),
    ModelKind.III: RotorParams(A=20.550, B=-0.00204),
    ModelKind.IV: HolmbergLipasParams(a=93982.0, b=0.438e-3),
}

HF_ELLS = [2, 4, 6, 8, 10, 12, 14, 16, 18]

# Published predictions per model at HF_ELLS
PUBLISHED_LEVELS = {
    "exp.": [123.33, 410.34, 859.69, 1469.2, 2235.9, 3156.1, 4225.3, 5438.4, 6789.6],
    ModelKind.I: [123.25, 410.25, 859.60, 1469.1, 2235.9, 3156.1, 4225.4, 5438.5, 6789.5],
    ModelKind.IPRIME: [123.25, 410.25, 859.60, 1469.1, 2235.9, 3156.1, 4225.4, 5438.5, 6789.5],
    ModelKind.II: [123.29, 410.35, 859.73, 1469.3, 2236.0, 3156.1, 4225.3, 5438.3, 6789.6],
    ModelKind.IIPRIME: [123.27, 410.32, 859.72, 1469.3, 2236.0, 3156.1, 4225.2, 5438.3, 6789.7],
    ModelKind.III: [123.23, 410.18, 859.49, 1469.0, 2235.8, 3156.1, 4225.5, 5438.6, 6789.4],
    ModelKind.IV: [123.34, 410.52, 860.04, 1469.6, 2236.2, 3156.1, 4224.9, 5438.0, 6790.0],
}


@pytest.fixture
def hf_data():
    """Bundled HF v=0 levels."""
    return load_bundled_levels()


@pytest.fixture
def small_dataset():
    """Three exact levels of a rigid rotor with A = 10."""
    return LevelDataset("v=0", [(2, 60.0), (4, 200.0), (6, 420.0)])


@pytest.fixture
def real_p():
    return DeformationParameter.real(0.2)


@pytest.fixture
def phase_p():
    return DeformationParameter.phase(0.2, ell_max=8)


@pytest.fixture
def classical_p():
    return DeformationParameter.classical()

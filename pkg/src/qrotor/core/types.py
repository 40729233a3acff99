"""Core data types for q-deformed rotor spectra."""

import math
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any, Dict, List, Tuple, Union

import numpy as np
import pandas as pd

from qrotor.core.errors import DataError, DomainError

DEFAULT_ELL_MAX = 64
ROOT_OF_UNITY_TOL = 1e-9


class Regime(str, Enum):
    """Deformation regime selecting hyperbolic, trigonometric or classical q-numbers."""

    CLASSICAL = "classical"
    REAL = "real"
    PHASE = "phase"


@dataclass(frozen=True)
class DeformationParameter:
    """Deformation parameter q = exp(tau) (real) or q = exp(i*tau) (phase).

    Attributes:
        regime: Which family of q-numbers is used.
        tau: Dimensionless deformation, 0 for the classical regime.
        ell_max: Largest spin the caller intends to use; bounds the
            root-of-unity guard in the phase regime.
    """

    regime: Regime
    tau: float = 0.0
    ell_max: float = DEFAULT_ELL_MAX

    def __post_init__(self):
        object.__setattr__(self, "regime", Regime(self.regime))
        object.__setattr__(self, "tau", float(self.tau))
        if not math.isfinite(self.tau):
            raise DomainError(f"tau must be finite, got {self.tau}")
        if self.ell_max < 0:
            raise DomainError(f"ell_max must be non-negative, got {self.ell_max}")

        if self.regime is Regime.CLASSICAL:
            if self.tau != 0.0:
                raise DomainError("Classical regime requires tau = 0")
        elif self.regime is Regime.REAL:
            if self.tau <= 0.0:
                raise DomainError(
                    f"Real regime requires tau > 0 (use the classical regime for tau = 0), got {self.tau}"
                )
        else:
            if not 0.0 < self.tau < math.pi:
                raise DomainError(f"Phase regime requires 0 < tau < pi, got {self.tau}")
            self._check_root_of_unity()

    def _check_root_of_unity(self) -> None:
        n_max = int(math.floor(4 * self.ell_max + 4))
        for n in range(1, n_max + 1):
            r = math.fmod(n * self.tau, 2 * math.pi)
            if min(r, 2 * math.pi - r) < ROOT_OF_UNITY_TOL:
                raise DomainError(
                    f"q = exp(i*{self.tau}) is a root of unity of order {n} "
                    f"(guard covers orders up to {n_max})"
                )

    @classmethod
    def classical(cls, ell_max: float = DEFAULT_ELL_MAX) -> "DeformationParameter":
        return cls(Regime.CLASSICAL, 0.0, ell_max)

    @classmethod
    def real(cls, tau: float, ell_max: float = DEFAULT_ELL_MAX) -> "DeformationParameter":
        return cls(Regime.REAL, tau, ell_max)

    @classmethod
    def phase(cls, tau: float, ell_max: float = DEFAULT_ELL_MAX) -> "DeformationParameter":
        return cls(Regime.PHASE, tau, ell_max)

    @property
    def is_classical(self) -> bool:
        return self.regime is Regime.CLASSICAL

    @property
    def q(self) -> Union[float, complex]:
        """The deformation parameter q itself."""
        if self.regime is Regime.PHASE:
            return complex(math.cos(self.tau), math.sin(self.tau))
        return math.exp(self.tau)

    @property
    def q_minus_qinv(self) -> Union[float, complex]:
        """q - 1/q: 2 sinh(tau), 2i sin(tau) or 0."""
        if self.regime is Regime.PHASE:
            return complex(0.0, 2 * math.sin(self.tau))
        return 2 * math.sinh(self.tau)


@dataclass(frozen=True)
class SpinLabel:
    """Irrep label stored as 2*ell so half-integer spins are exact."""

    two_ell: int

    def __post_init__(self):
        if int(self.two_ell) != self.two_ell or self.two_ell < 0:
            raise DomainError(f"two_ell must be a non-negative integer, got {self.two_ell}")
        object.__setattr__(self, "two_ell", int(self.two_ell))

    @classmethod
    def from_ell(cls, ell: float) -> "SpinLabel":
        """Build a label from ell, which must be an integer or half-integer."""
        two_ell = 2 * ell
        if abs(two_ell - round(two_ell)) > 1e-12:
            raise DomainError(f"ell must be a multiple of 1/2, got {ell}")
        return cls(int(round(two_ell)))

    @property
    def ell(self) -> float:
        return self.two_ell / 2

    @property
    def dim(self) -> int:
        return self.two_ell + 1

    @property
    def weights(self) -> np.ndarray:
        """Weights m = ell, ell-1, ..., -ell in basis order."""
        return self.ell - np.arange(self.dim, dtype=float)

    def __str__(self) -> str:
        if self.two_ell % 2:
            return f"{self.two_ell}/2"
        return str(self.two_ell // 2)


class ModelKind(str, Enum):
    """The six rotational models compared on the HF band."""

    I = "I"
    IPRIME = "Ip"
    II = "II"
    IIPRIME = "IIp"
    III = "III"
    IV = "IV"

    @property
    def label(self) -> str:
        """Display label with primes, e.g. "II'"."""
        return self.value.replace("p", "'")


@dataclass(frozen=True)
class DeformedParams:
    """Parameters of models I, I', II and II'.

    Attributes:
        A: Rotational constant in cm^-1.
        tau: Dimensionless deformation.
    """

    A: float
    tau: float

    def as_dict(self) -> Dict[str, float]:
        return asdict(self)


@dataclass(frozen=True)
class RotorParams:
    """Parameters of the two-term rotational expansion (model III).

    Higher terms (C, D) of the expansion are fixed at zero.

    Attributes:
        A: Rotational constant in cm^-1.
        B: Signed centrifugal term in cm^-1.
    """

    A: float
    B: float

    def as_dict(self) -> Dict[str, float]:
        return asdict(self)


@dataclass(frozen=True)
class HolmbergLipasParams:
    """Parameters of the Holmberg-Lipas expression (model IV).

    Attributes:
        a: Energy scale in cm^-1.
        b: Dimensionless stiffness.
    """

    a: float
    b: float

    def as_dict(self) -> Dict[str, float]:
        return asdict(self)


ModelParams = Union[DeformedParams, RotorParams, HolmbergLipasParams]


class Branch(str, Enum):
    R = "R"
    P = "P"


class Band(str, Enum):
    """Vibrational band reconstructed from branch lines."""

    V0 = "v0"
    V1 = "v1"

    @property
    def label(self) -> str:
        return f"v={self.value[1:]}"


@dataclass(frozen=True)
class BranchLine:
    """One rovibrational line, labelled by the lower-state rotational number."""

    branch: Branch
    ell: int
    wavenumber: float

    def __post_init__(self):
        object.__setattr__(self, "branch", Branch(self.branch))
        if int(self.ell) != self.ell:
            raise DataError(f"Branch line ell must be an integer, got {self.ell}")
        object.__setattr__(self, "ell", int(self.ell))
        min_ell = 0 if self.branch is Branch.R else 1
        if self.ell < min_ell:
            raise DataError(f"{self.branch.value} line requires ell >= {min_ell}, got {self.ell}")
        if not self.wavenumber > 0:
            raise DataError(f"Wavenumber must be positive, got {self.wavenumber}")


@dataclass
class LevelDataset:
    """Rotational levels of one vibrational band, referenced to E(0) = 0.

    Attributes:
        band: Band label, e.g. "v=0".
        levels: (ell, energy in cm^-1) pairs with both entries strictly increasing.
    """

    band: str
    levels: List[Tuple[int, float]] = field(default_factory=list)

    def __post_init__(self):
        self.levels = [(int(ell), float(energy)) for ell, energy in self.levels]
        for (ell_a, e_a), (ell_b, e_b) in zip(self.levels, self.levels[1:]):
            if ell_b <= ell_a:
                raise DataError(f"Level ell values must increase strictly: {ell_a} then {ell_b}")
            if e_b <= e_a:
                raise DataError(
                    f"Level energies must increase strictly: E({ell_a})={e_a} >= E({ell_b})={e_b}"
                )
        if any(ell < 0 for ell, _ in self.levels):
            raise DataError("Level ell values must be non-negative")
        if any(not math.isfinite(e) for _, e in self.levels):
            raise DataError("Level energies must be finite")

    def __len__(self) -> int:
        return len(self.levels)

    @property
    def ells(self) -> np.ndarray:
        return np.array([ell for ell, _ in self.levels], dtype=int)

    @property
    def energies(self) -> np.ndarray:
        return np.array([energy for _, energy in self.levels], dtype=float)

    @property
    def ell_max(self) -> int:
        if not self.levels:
            raise DataError("Empty dataset has no ell_max")
        return self.levels[-1][0]

    def scaled(self, factor: float) -> "LevelDataset":
        """Return a copy with every energy multiplied by ``factor``."""
        return LevelDataset(self.band, [(ell, factor * e) for ell, e in self.levels])

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"ell": self.ells, "energy_cm1": self.energies})

    @classmethod
    def from_frame(cls, frame: pd.DataFrame, band: str = "v=0") -> "LevelDataset":
        """Build a dataset from a frame with columns ``ell`` and ``energy_cm1``."""
        missing = {"ell", "energy_cm1"} - set(frame.columns)
        if missing:
            raise DataError(f"Level table is missing columns: {sorted(missing)}")
        return cls(band, list(zip(frame["ell"].tolist(), frame["energy_cm1"].tolist())))


@dataclass
class FitResult:
    """Outcome of fitting one model to a level dataset.

    Attributes:
        kind: Fitted model.
        params: Fitted parameters.
        sigma: Quality measure in cm^-1.
        residuals: (ell, E_exp - E_th) per level.
        iterations: Function evaluations spent by the optimizer.
        converged: False when the optimizer hit its iteration cap.
        message: Optimizer diagnostics.
    """

    kind: ModelKind
    params: ModelParams
    sigma: float
    residuals: List[Tuple[int, float]]
    iterations: int = 0
    converged: bool = True
    message: str = ""

    def __post_init__(self):
        if self.sigma < 0:
            raise ValueError(f"sigma must be non-negative, got {self.sigma}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "model": self.kind.value,
            "params": self.params.as_dict(),
            "sigma_cm1": self.sigma,
            "residuals": [[ell, r] for ell, r in self.residuals],
            "converged": self.converged,
            "iterations": self.iterations,
        }


@dataclass
class FitConfig:
    """Settings for fitting and verification.

    Attributes:
        grid_points: Number of log-spaced starting values for tau or b.
        grid_low: Lower end of the starting grid.
        grid_high: Upper end of the starting grid.
        xtol: Tolerance on log(tau) or log(b) in the local refinement.
        max_iterations: Iteration cap per refinement pass.
        polish_width: Half width in log space of the final polishing pass.
        identity_tolerance: Largest accepted residual for an identity.
        non_commutator_floor: Smallest accepted norm for a non-commutator.
    """

    grid_points: int = 81
    grid_low: float = 1e-4
    grid_high: float = 0.2
    xtol: float = 1e-10
    max_iterations: int = 500
    polish_width: float = 1e-6
    identity_tolerance: float = 1e-12
    non_commutator_floor: float = 1e-6

    def __post_init__(self):
        if self.grid_points < 3:
            raise ValueError(f"grid_points must be at least 3, got {self.grid_points}")
        if not 0 < self.grid_low < self.grid_high:
            raise ValueError(
                f"Need 0 < grid_low < grid_high, got {self.grid_low}, {self.grid_high}"
            )
        if self.xtol <= 0 or self.polish_width <= 0:
            raise ValueError("xtol and polish_width must be positive")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be positive, got {self.max_iterations}")

    def as_dict(self) -> Dict[str, Any]:
        return asdict(self)

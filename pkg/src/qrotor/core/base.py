"""Abstract base class for rotational spectrum models."""

from abc import ABC, abstractmethod
from typing import Optional, Tuple

import numpy as np

from qrotor.core.errors import DomainError
from qrotor.core.types import ModelKind, ModelParams


class BaseModel(ABC):
    """Two-parameter rotational model with energies linear in an amplitude.

    Every model has the form E(ell) = amplitude * shape(nonlinear, ell) with
    E(0) = 0. Fitting exploits this by solving for the amplitude exactly at
    each trial value of the nonlinear parameter.
    """

    kind: ModelKind = ModelKind.I
    description: str = ""

    @abstractmethod
    def shape(self, nonlinear: float, ells: np.ndarray) -> np.ndarray:
        """Energy per unit amplitude.

        Args:
            nonlinear: Value of the nonlinear parameter (tau, B/A or b).
            ells: Rotational quantum numbers.

        Returns:
            Array of the same length as ``ells``.
        """
        pass

    @abstractmethod
    def make_params(self, amplitude: float, nonlinear: float) -> ModelParams:
        """Build a parameter object from (amplitude, nonlinear)."""
        pass

    @abstractmethod
    def unpack(self, params: ModelParams) -> Tuple[float, float]:
        """Split a parameter object into (amplitude, nonlinear).

        Raises:
            DomainError: If ``params`` belongs to another model.
        """
        pass

    def check_params(self, params: ModelParams, ells: np.ndarray) -> None:
        """Validate parameters over the requested ells.

        Raises:
            DomainError: If the parameters are invalid for this model.
        """
        amplitude, nonlinear = self.unpack(params)
        if not amplitude > 0:
            raise DomainError(f"Model {self.kind.label} needs a positive amplitude, got {amplitude}")
        if not nonlinear > 0:
            raise DomainError(f"Model {self.kind.label} needs a positive deformation, got {nonlinear}")

    def energies(self, params: ModelParams, ells) -> np.ndarray:
        """Energies in cm^-1 for each ell."""
        ells = np.asarray(ells, dtype=float)
        self.check_params(params, ells)
        amplitude, nonlinear = self.unpack(params)
        return amplitude * self.shape(nonlinear, ells)

    def design_matrix(self, ells: np.ndarray) -> Optional[np.ndarray]:
        """Design matrix for models linear in both parameters, else None."""
        return None

"""Closed-form spectra of the six rotational models.

All energies are in cm^-1 and vanish at l = 0.
"""

from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from qrotor.algebra.qnum import q_number
from qrotor.core.base import BaseModel
from qrotor.core.errors import DomainError
from qrotor.core.types import (
    DeformationParameter,
    DeformedParams,
    HolmbergLipasParams,
    ModelKind,
    ModelParams,
    RotorParams,
)
from qrotor.series.expansions import sinus_formula, tanh_formula
from qrotor.spectra.registry import ModelRegistry, get_model


def _x(ells: np.ndarray) -> np.ndarray:
    return ells * (ells + 1)


class DeformedModel(BaseModel):
    """Models parametrised by a rotational constant A and a deformation tau."""

    def make_params(self, amplitude: float, nonlinear: float) -> ModelParams:
        return DeformedParams(A=amplitude, tau=nonlinear)

    def unpack(self, params: ModelParams) -> Tuple[float, float]:
        if not isinstance(params, DeformedParams):
            raise DomainError(f"Model {self.kind.label} expects (A, tau), got {params!r}")
        return params.A, params.tau


@ModelRegistry.register(ModelKind.I)
class Suq2Model(DeformedModel):
    """su_q(2) rotor with phase q: A [l][l+1] = A sin(l tau) sin((l+1) tau)/sin^2(tau)."""

    def shape(self, nonlinear: float, ells: np.ndarray) -> np.ndarray:
        ell_max = float(np.max(ells)) if len(ells) else 0.0
        p = DeformationParameter.phase(nonlinear, ell_max=ell_max)
        return q_number(ells, p) * q_number(ells + 1, p)


@ModelRegistry.register(ModelKind.IPRIME)
class SinusModel(DeformedModel):
    """Sinus formula A sin^2(tau sqrt(l(l+1)))/tau^2."""

    def shape(self, nonlinear: float, ells: np.ndarray) -> np.ndarray:
        return sinus_formula(1.0, nonlinear, ells)


@ModelRegistry.register(ModelKind.II)
class ItoModel(DeformedModel):
    """Tensor-operator rotor A (1 - cosh^2(tau)/cosh^2((2l+1) tau))/(4 sinh^2(tau))."""

    def shape(self, nonlinear: float, ells: np.ndarray) -> np.ndarray:
        tau = nonlinear
        big = np.cosh((2 * ells + 1) * tau)
        small = np.cosh(tau)
        # cosh((2l+1)tau) - cosh(tau) = 2 sinh(l tau) sinh((l+1) tau), avoids cancellation
        gap = 2 * np.sinh(ells * tau) * np.sinh((ells + 1) * tau)
        return gap * (big + small) / (4 * np.sinh(tau) ** 2 * big ** 2)


@ModelRegistry.register(ModelKind.IIPRIME)
class TanhModel(DeformedModel):
    """Hyperbolic tangent formula (A/(2 tau)^2) tanh^2(2 tau sqrt(l(l+1)))."""

    def shape(self, nonlinear: float, ells: np.ndarray) -> np.ndarray:
        return tanh_formula(1.0, nonlinear, ells)


@ModelRegistry.register(ModelKind.III)
class RotorExpansionModel(BaseModel):
    """Two-term rotational expansion A l(l+1) + B (l(l+1))^2."""

    def shape(self, nonlinear: float, ells: np.ndarray) -> np.ndarray:
        x = _x(ells)
        return x + nonlinear * x ** 2

    def make_params(self, amplitude: float, nonlinear: float) -> ModelParams:
        return RotorParams(A=amplitude, B=nonlinear * amplitude)

    def unpack(self, params: ModelParams) -> Tuple[float, float]:
        if not isinstance(params, RotorParams):
            raise DomainError(f"Model III expects (A, B), got {params!r}")
        return params.A, params.B / params.A

    def check_params(self, params: ModelParams, ells: np.ndarray) -> None:
        if not isinstance(params, RotorParams):
            raise DomainError(f"Model III expects (A, B), got {params!r}")
        if not params.A > 0:
            raise DomainError(f"Model III needs A > 0, got {params.A}")

    def design_matrix(self, ells: np.ndarray) -> Optional[np.ndarray]:
        x = _x(np.asarray(ells, dtype=float))
        return np.column_stack([x, x ** 2])


@ModelRegistry.register(ModelKind.IV)
class HolmbergLipasModel(BaseModel):
    """Holmberg-Lipas expression a (sqrt(1 + b l(l+1)) - 1)."""

    def shape(self, nonlinear: float, ells: np.ndarray) -> np.ndarray:
        bx = nonlinear * _x(ells)
        return bx / (np.sqrt(1 + bx) + 1)

    def make_params(self, amplitude: float, nonlinear: float) -> ModelParams:
        return HolmbergLipasParams(a=amplitude, b=nonlinear)

    def unpack(self, params: ModelParams) -> Tuple[float, float]:
        if not isinstance(params, HolmbergLipasParams):
            raise DomainError(f"Model IV expects (a, b), got {params!r}")
        return params.a, params.b

    def check_params(self, params: ModelParams, ells: np.ndarray) -> None:
        a, b = self.unpack(params)
        if not a > 0:
            raise DomainError(f"Model IV needs a > 0, got {a}")
        if len(ells) and np.any(1 + b * _x(ells) < 0):
            raise DomainError(f"Model IV needs 1 + b l(l+1) >= 0, fails for b={b}")


def _check_ell(ell: float) -> None:
    if int(ell) != ell or ell < 0:
        raise DomainError(f"ell must be a non-negative integer, got {ell}")


def energy(kind: Union[ModelKind, str], params: ModelParams, ell: int) -> float:
    """Energy of level ``ell`` in cm^-1.

    Raises:
        DomainError: If the parameters are invalid for the model.
    """
    _check_ell(ell)
    return float(get_model(kind).energies(params, [ell])[0])


def spectrum_table(
    kind: Union[ModelKind, str], params: ModelParams, ells: Sequence[int]
) -> List[Tuple[int, float]]:
    """(ell, energy) pairs for ascending ``ells``.

    Raises:
        DomainError: If ``ells`` is not ascending or the parameters are invalid.
    """
    for ell in ells:
        _check_ell(ell)
    ells = [int(ell) for ell in ells]
    if any(b < a for a, b in zip(ells, ells[1:])):
        raise DomainError(f"ells must be sorted ascending, got {ells}")
    if not ells:
        return []
    values = get_model(kind).energies(params, ells)
    return [(ell, float(e)) for ell, e in zip(ells, values)]

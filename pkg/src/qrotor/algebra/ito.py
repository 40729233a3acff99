"""Rank-1 irreducible tensor operator of su_q(2) and the Hamiltonian built from it.

The components J_{+1}, J_0, J_{-1} are built from the deformed generators.
Their scalar square defines the Z operator and the rotational Hamiltonian
H = A (1 - Z^-2)/(q - q^-1)^2. Only real q (and the classical limit) is
supported.
"""

import math
from dataclasses import dataclass, field
from typing import Dict, Tuple

import numpy as np

from qrotor.algebra.generators import (
    OperatorMatrix,
    casimir,
    casimir_q,
    commutator_residual,
    relative_residual,
    su2_generators,
    suq2_generators,
)
from qrotor.algebra.qnum import q_number, q_number_base_q2
from qrotor.core.errors import DomainError, UnsupportedRegimeError
from qrotor.core.types import DeformationParameter, Regime, SpinLabel

COMPONENTS = (1, 0, -1)

# Nonzero 1x1 -> 1 couplings (m1, m2, m) and their form:
# ("q", sign) means sign * q * s, ("qinv", sign) sign * q^-1 * s,
# ("one", sign) sign * s, and ("diff", 1) (q - q^-1) * s, with s = sqrt([2]/[4]).
_QCG_FORMS = {
    (1, 0, 1): ("q", 1),
    (0, 1, 1): ("qinv", -1),
    (0, -1, -1): ("q", 1),
    (-1, 0, -1): ("qinv", -1),
    (1, -1, 0): ("one", 1),
    (-1, 1, 0): ("one", -1),
    (0, 0, 0): ("diff", 1),
}


def _require_real(p: DeformationParameter) -> None:
    if p.regime is Regime.PHASE:
        raise UnsupportedRegimeError(
            "Tensor operator constructions are defined for real q only"
        )


def _q_power_l0(ell: SpinLabel, p: DeformationParameter, power: float) -> OperatorMatrix:
    """q^(power * L0), diagonal in the |ell, m> basis."""
    return np.diag(np.exp(power * p.tau * ell.weights)).astype(complex)


@dataclass(eq=False)
class ItoTriple:
    """Components J_{+1}, J_{-1}, J_0 of a rank-1 tensor operator on one irrep."""

    ell: SpinLabel
    j_plus: OperatorMatrix
    j_minus: OperatorMatrix
    j_zero: OperatorMatrix
    param: DeformationParameter

    def __post_init__(self):
        _require_real(self.param)
        for op in (self.j_plus, self.j_minus, self.j_zero):
            if op.shape != (self.ell.dim, self.ell.dim):
                raise ValueError(
                    f"Component shape {op.shape} doesn't match irrep dimension {self.ell.dim}"
                )

    def component(self, m: int) -> OperatorMatrix:
        return {1: self.j_plus, 0: self.j_zero, -1: self.j_minus}[m]


@dataclass
class QcgTable:
    """The 1x1 -> 1 q-Clebsch-Gordan coefficients.

    Keys are (j1, m1, j2, m2, j, m). ``inverse`` marks a table evaluated
    at 1/q instead of q.
    """

    param: DeformationParameter
    inverse: bool = False
    coefficients: Dict[Tuple[int, int, int, int, int, int], float] = field(default_factory=dict)

    def get(self, m1: int, m2: int, m: int) -> float:
        return self.coefficients.get((1, m1, 1, m2, 1, m), 0.0)


def qcg_1x1_to_1(m1: int, m2: int, m: int, p: DeformationParameter, inverse: bool = False) -> float:
    """q-Clebsch-Gordan coefficient <1 m1 1 m2 | 1 m>_q.

    Args:
        m1, m2, m: Projections in {-1, 0, 1}.
        p: Deformation parameter (real or classical).
        inverse: Evaluate at 1/q, i.e. with tau replaced by -tau.

    Returns:
        The coefficient, 0 when m != m1 + m2.

    Raises:
        UnsupportedRegimeError: For phase deformations.
        DomainError: If a projection lies outside {-1, 0, 1}.
    """
    _require_real(p)
    for value in (m1, m2, m):
        if value not in (-1, 0, 1):
            raise DomainError(f"Projection {value} is not valid for rank 1")
    if m != m1 + m2 or (m1, m2, m) not in _QCG_FORMS:
        return 0.0

    tau = -p.tau if inverse else p.tau
    s = math.sqrt(q_number(2.0, p) / q_number(4.0, p))
    form, sign = _QCG_FORMS[(m1, m2, m)]
    if form == "q":
        factor = math.exp(tau)
    elif form == "qinv":
        factor = math.exp(-tau)
    elif form == "diff":
        factor = 2 * math.sinh(tau)
    else:
        factor = 1.0
    return sign * factor * s


def build_qcg_table(p: DeformationParameter, inverse: bool = False) -> QcgTable:
    """Populate the seven nonzero 1x1 -> 1 coefficients."""
    table = QcgTable(param=p, inverse=inverse)
    for m1, m2, m in _QCG_FORMS:
        table.coefficients[(1, m1, 1, m2, 1, m)] = qcg_1x1_to_1(m1, m2, m, p, inverse)
    return table


def build_ito(ell: SpinLabel, p: DeformationParameter) -> ItoTriple:
    """Build J_{+1} = -q^-L0 L+/sqrt([2]), J_{-1} = q^-L0 L-/sqrt([2]),
    J_0 = (q L+L- - q^-1 L-L+)/[2].

    Raises:
        UnsupportedRegimeError: For phase deformations.
    """
    _require_real(p)
    lp, lm, _ = suq2_generators(ell, p)
    two = q_number(2.0, p)
    q_minus_l0 = _q_power_l0(ell, p, -1.0)
    q = math.exp(p.tau)

    return ItoTriple(
        ell=ell,
        j_plus=-(q_minus_l0 @ lp) / math.sqrt(two),
        j_minus=(q_minus_l0 @ lm) / math.sqrt(two),
        j_zero=(q * (lp @ lm) - (lm @ lp) / q) / two,
        param=p,
    )


def _z_from_triple(t: ItoTriple) -> OperatorMatrix:
    return _q_power_l0(t.ell, t.param, -2.0) + t.param.q_minus_qinv * t.j_zero


def z_operator(ell: SpinLabel, p: DeformationParameter) -> OperatorMatrix:
    """Z = q^-2L0 + (q - q^-1) J_0, a multiple of the identity on each irrep."""
    return _z_from_triple(build_ito(ell, p))


def _inverse_diagonal(op: OperatorMatrix, power: int = 1) -> OperatorMatrix:
    return np.diag(np.diag(op) ** (-power))


def normalized_triple(t: ItoTriple) -> ItoTriple:
    """The tensor operator J'_m = J_m Z^-1."""
    z_inv = _inverse_diagonal(_z_from_triple(t))
    return ItoTriple(
        ell=t.ell,
        j_plus=t.j_plus @ z_inv,
        j_minus=t.j_minus @ z_inv,
        j_zero=t.j_zero @ z_inv,
        param=t.param,
    )


def tensor_product_rank1(t: ItoTriple) -> Dict[int, OperatorMatrix]:
    """Rank-1 part of J x J, coupled with the 1/q coefficients.

    Returns:
        Mapping m -> [J x J]_{1,m} for m in (+1, 0, -1).
    """
    table = build_qcg_table(t.param, inverse=True)
    dim = t.ell.dim
    product = {}
    for m in COMPONENTS:
        total = np.zeros((dim, dim), dtype=complex)
        for m1 in COMPONENTS:
            m2 = m - m1
            if m2 not in COMPONENTS:
                continue
            coefficient = table.get(m1, m2, m)
            if coefficient:
                total = total + coefficient * (t.component(m1) @ t.component(m2))
        product[m] = total
    return product


def scalar_product(t: ItoTriple) -> OperatorMatrix:
    """Scalar square sum_m (-q)^-m J_m J_{-m}."""
    q = math.exp(t.param.tau)
    total = np.zeros((t.ell.dim, t.ell.dim), dtype=complex)
    for m in COMPONENTS:
        total = total + (-q) ** (-m) * (t.component(m) @ t.component(-m))
    return total


def ito_hamiltonian_matrix(ell: SpinLabel, p: DeformationParameter, A: float) -> OperatorMatrix:
    """Rotational Hamiltonian A (1 - Z^-2)/(q - q^-1)^2 on one irrep.

    Args:
        ell: Irrep label.
        p: Real deformation parameter.
        A: Rotational constant in cm^-1.

    Returns:
        Diagonal matrix of energies in cm^-1.

    Raises:
        UnsupportedRegimeError: For phase deformations.
        DomainError: In the classical regime or for A <= 0.
    """
    _require_real(p)
    if p.is_classical:
        raise DomainError(
            "Hamiltonian divides by (q - q^-1)^2 and is undefined at q = 1; use the two-term expansion"
        )
    if not A > 0:
        raise DomainError(f"A must be positive, got {A}")
    z = np.real(np.diag(z_operator(ell, p)))
    energies = A * (1.0 - z ** -2) / p.q_minus_qinv ** 2
    return np.diag(energies).astype(complex)


def ito_residuals(ell: SpinLabel, p: DeformationParameter) -> Dict[str, float]:
    """Residuals of the tensor-operator identities on one irrep.

    Covers the weight and ladder relations, Hermitian conjugation, the
    commutators among the J_m, the rank-1 and scalar products (also for
    J'_m), both forms of Z with its factorisation and eigenvalue, and the
    commutation of H with all generators and the J_m (real q only).

    Returns:
        Mapping from identity name to normalised max-abs residual.
    """
    t = build_ito(ell, p)
    lp, lm, l0 = suq2_generators(ell, p)
    small = dict(zip(("l+", "l-", "l0"), su2_generators(ell)))
    q = math.exp(p.tau)
    diff = p.q_minus_qinv
    dim = ell.dim
    eye = np.eye(dim, dtype=complex)
    q_minus_l0 = _q_power_l0(ell, p, -1.0)
    q_minus_2l0 = _q_power_l0(ell, p, -2.0)
    s = math.sqrt(q_number(2.0, p) / q_number(4.0, p))
    report = {}

    for m in COMPONENTS:
        j_m = t.component(m)
        report[f"[L0,J{m:+d}]-mJ"] = commutator_residual(l0, j_m, m * j_m)
        for name, ladder, step in (("L+", lp, 1), ("L-", lm, -1)):
            coefficient = math.sqrt(max(q_number(1.0 - step * m, p) * q_number(2.0 + step * m, p), 0.0))
            target = m + step
            expected = (
                coefficient * t.component(target) @ q_minus_l0
                if target in COMPONENTS else np.zeros_like(j_m)
            )
            report[f"[{name},J{m:+d}]_q^m"] = commutator_residual(ladder, j_m, expected, q ** m)

    report["J+1^H+J-1/q"] = relative_residual(t.j_plus.conj().T, -t.j_minus / q)
    report["J-1^H+qJ+1"] = relative_residual(t.j_minus.conj().T, -q * t.j_plus)
    report["J0^H-J0"] = relative_residual(t.j_zero.conj().T, t.j_zero)

    report["[J+1,J0]"] = commutator_residual(t.j_plus, t.j_zero, -q * q_minus_2l0 @ t.j_plus)
    report["[J-1,J0]"] = commutator_residual(t.j_minus, t.j_zero, q_minus_2l0 @ t.j_minus / q)
    report["[J+1,J-1]"] = commutator_residual(t.j_plus, t.j_minus, -q_minus_2l0 @ t.j_zero)

    z = _z_from_triple(t)
    c2q = casimir_q(ell, p)
    two = q_number(2.0, p)
    z_casimir = eye + diff ** 2 / two * c2q
    report["Z two forms"] = relative_residual(z, z_casimir)
    report["Z^2-1 factorization"] = relative_residual(
        (z - eye) @ (z + eye), diff ** 2 / two * c2q @ (2 * eye + diff ** 2 / two * c2q)
    )
    z_eigen = math.cosh((2 * ell.ell + 1) * p.tau) / math.cosh(p.tau)
    report["Z eigenvalue"] = relative_residual(z, z_eigen * eye)
    report["Z eigenvalue difference form"] = relative_residual(
        z, (q_number(2 * ell.ell + 2, p) - q_number(2 * ell.ell, p)) / two * eye
    )

    products = tensor_product_rank1(t)
    for m in COMPONENTS:
        report[f"[JxJ]_{m:+d}+sZJ"] = relative_residual(products[m], -s * z @ t.component(m))

    scalar = scalar_product(t)
    eigen = q_number_base_q2(ell.ell, p) * q_number_base_q2(ell.ell + 1, p)
    report["(J.J) eigenvalue"] = relative_residual(scalar, eigen * eye)
    if p.is_classical:
        report["(J.J)-C2"] = relative_residual(scalar, casimir(ell))
        return report

    report["(J.J) Casimir form"] = relative_residual(
        scalar, 2 / two * c2q + diff ** 2 / two ** 2 * c2q @ c2q
    )
    report["(J.J)-(Z^2-1)/(q-1/q)^2"] = relative_residual(scalar, (z @ z - eye) / diff ** 2)

    primed = normalized_triple(t)
    primed_products = tensor_product_rank1(primed)
    for m in COMPONENTS:
        report[f"[J'xJ']_{m:+d}+sJ'"] = relative_residual(
            primed_products[m], -s * primed.component(m)
        )
    report["(J'.J')-(1-Z^-2)/(q-1/q)^2"] = relative_residual(
        scalar_product(primed), (eye - _inverse_diagonal(z, 2)) / diff ** 2
    )

    hamiltonian = ito_hamiltonian_matrix(ell, p, 1.0)
    operators = {"L+": lp, "L-": lm, "L0": l0, **small}
    operators.update({f"J{m:+d}": t.component(m) for m in COMPONENTS})
    for name, op in operators.items():
        report[f"[H,{name}]"] = commutator_residual(hamiltonian, op)
    return report

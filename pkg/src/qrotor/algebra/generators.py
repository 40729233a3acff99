"""Matrix realisations of su(2) and su_q(2) on a shared |ell, m> basis.

Basis index i corresponds to the weight m = ell - i. Both algebras act on
the same basis, so their generators can be multiplied and compared
directly.
"""

from typing import Callable, Dict, Optional, Tuple

import numpy as np

from qrotor.algebra.qnum import q_number
from qrotor.core.errors import DomainError
from qrotor.core.types import DeformationParameter, SpinLabel

OperatorMatrix = np.ndarray
Generators = Tuple[OperatorMatrix, OperatorMatrix, OperatorMatrix]

# Pairs of operators that must not commute away from the classical point.
NON_COMMUTATOR_KEYS = ("[L+,l+]", "[L-,l-]")

_NEGATIVE_PRODUCT_TOL = 1e-12


def _ladders(ell: SpinLabel, number: Callable) -> Tuple[OperatorMatrix, OperatorMatrix]:
    j = ell.ell
    m = ell.weights
    raising = number(j - m[1:]) * number(j + m[1:] + 1)
    lowering = number(j + m[:-1]) * number(j - m[:-1] + 1)
    for products in (raising, lowering):
        scale = max(1.0, float(np.max(np.abs(products)))) if products.size else 1.0
        if np.any(products < -_NEGATIVE_PRODUCT_TOL * scale):
            raise DomainError(
                f"Ladder matrix elements of spin {ell} are not real for this deformation"
            )
    raising = np.sqrt(np.clip(raising, 0.0, None))
    lowering = np.sqrt(np.clip(lowering, 0.0, None))
    return (
        np.diag(raising, 1).astype(complex),
        np.diag(lowering, -1).astype(complex),
    )


def su2_generators(ell: SpinLabel) -> Generators:
    """Classical generators (l+, l-, l0) of su(2) in the spin-ell irrep."""
    lp, lm = _ladders(ell, lambda x: np.asarray(x, dtype=float))
    l0 = np.diag(ell.weights).astype(complex)
    return lp, lm, l0


def suq2_generators(ell: SpinLabel, p: DeformationParameter) -> Generators:
    """Deformed generators (L+, L-, L0) of su_q(2) in the spin-ell irrep.

    Args:
        ell: Irrep label.
        p: Deformation parameter; its ``ell_max`` must cover ``ell``.

    Returns:
        Tuple (L+, L-, L0) of complex matrices of size 2*ell+1.

    Raises:
        DomainError: If ``ell`` exceeds ``p.ell_max`` or a ladder product
            under the square root is negative (large phase deformations).
    """
    if ell.ell > p.ell_max:
        raise DomainError(
            f"Spin {ell} exceeds ell_max={p.ell_max} declared for this deformation"
        )
    lp, lm = _ladders(ell, lambda x: q_number(np.asarray(x, dtype=float), p))
    l0 = np.diag(ell.weights).astype(complex)
    return lp, lm, l0


def diagonal_function(op: OperatorMatrix, func: Callable[[np.ndarray], np.ndarray]) -> OperatorMatrix:
    """Apply ``func`` to the diagonal of a diagonal operator."""
    return np.diag(func(np.real(np.diag(op)))).astype(complex)


def casimir(ell: SpinLabel) -> OperatorMatrix:
    """Classical Casimir l-l+ + l0(l0+1)."""
    lp, lm, l0 = su2_generators(ell)
    return lm @ lp + l0 @ (l0 + np.eye(ell.dim))


def casimir_q_forms(ell: SpinLabel, p: DeformationParameter) -> Dict[str, OperatorMatrix]:
    """The three equivalent orderings of the su_q(2) Casimir."""
    lp, lm, l0 = suq2_generators(ell, p)
    two = q_number(2.0, p)
    bracket = lambda shift: diagonal_function(l0, lambda m: q_number(m + shift, p))
    return {
        "symmetric": 0.5 * (lp @ lm + lm @ lp + two * bracket(0.0) @ bracket(0.0)),
        "lowering_first": lm @ lp + bracket(0.0) @ bracket(1.0),
        "raising_first": lp @ lm + bracket(0.0) @ bracket(-1.0),
    }


def casimir_q(ell: SpinLabel, p: DeformationParameter) -> OperatorMatrix:
    """su_q(2) Casimir L-L+ + [L0][L0+1], equal to [ell][ell+1] times identity."""
    return casimir_q_forms(ell, p)["lowering_first"]


def max_norm(op: OperatorMatrix) -> float:
    """Largest absolute entry, 0 for an empty matrix."""
    if op.size == 0:
        return 0.0
    return float(np.max(np.abs(op)))


def relative_residual(lhs: OperatorMatrix, rhs: OperatorMatrix, *scales: OperatorMatrix) -> float:
    """max|lhs - rhs| normalised by max(1, |lhs|, |rhs|, |scale terms|)."""
    scale = max([1.0, max_norm(lhs), max_norm(rhs)] + [max_norm(s) for s in scales])
    return max_norm(lhs - rhs) / scale


def commutator(a: OperatorMatrix, b: OperatorMatrix, factor: complex = 1.0) -> OperatorMatrix:
    """Deformed commutator [a, b]_factor = ab - factor * ba."""
    return a @ b - factor * (b @ a)


def commutator_residual(
    a: OperatorMatrix,
    b: OperatorMatrix,
    expected: Optional[OperatorMatrix] = None,
    factor: complex = 1.0,
) -> float:
    """Normalised residual of [a, b]_factor against ``expected`` (zero by default)."""
    ab = a @ b
    ba = factor * (b @ a)
    if expected is None:
        expected = np.zeros_like(ab)
    return relative_residual(ab - ba, expected, ab, ba)


def commutator_residuals(ell: SpinLabel, p: DeformationParameter) -> Dict[str, float]:
    """Residuals of the su_q(2) relations and of rotational invariance.

    The report holds the algebra relations, commutators of the deformed
    Casimir with both sets of generators, and the norms of the
    non-commutators listed in NON_COMMUTATOR_KEYS.

    Args:
        ell: Irrep label.
        p: Deformation parameter.

    Returns:
        Mapping from identity name to normalised max-abs residual.
    """
    big_p, big_m, big_0 = suq2_generators(ell, p)
    small_p, small_m, small_0 = su2_generators(ell)
    c2q = casimir_q(ell, p)
    two_l0 = diagonal_function(big_0, lambda m: q_number(2 * m, p))

    report = {
        "[L0,L+]-L+": commutator_residual(big_0, big_p, big_p),
        "[L0,L-]+L-": commutator_residual(big_0, big_m, -big_m),
        "[L+,L-]-[2L0]": commutator_residual(big_p, big_m, two_l0),
    }
    for name, op in (("L+", big_p), ("L-", big_m), ("L0", big_0),
                     ("l+", small_p), ("l-", small_m), ("l0", small_0)):
        report[f"[C2q,{name}]"] = commutator_residual(c2q, op)
    report["[L+,l+]"] = commutator_residual(big_p, small_p)
    report["[L-,l-]"] = commutator_residual(big_m, small_m)
    return report


def dump_matrix(op: OperatorMatrix) -> str:
    """Row-major text dump, one row per line, entries as "re,im" pairs."""
    rows = []
    for row in np.atleast_2d(op):
        rows.append(" ".join(f"{z.real:.17g},{z.imag:.17g}" for z in row))
    return "\n".join(rows)

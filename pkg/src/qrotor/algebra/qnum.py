"""q-numbers and q-factorials.

For q = exp(tau) the q-number [x] = (q^x - q^-x)/(q - q^-1) is
sinh(tau x)/sinh(tau); for q = exp(i tau) it is sin(tau x)/sin(tau); in the
classical limit it is x itself.
"""

from typing import Union

import numpy as np

from qrotor.core.errors import DomainError
from qrotor.core.types import DeformationParameter, Regime

ArrayLike = Union[float, np.ndarray]


def _deformed(x: ArrayLike, tau: float, regime: Regime) -> ArrayLike:
    x_arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x_arr)):
        raise DomainError(f"q-number argument must be finite, got {x}")

    if regime is Regime.CLASSICAL:
        value = x_arr.copy()
    elif regime is Regime.REAL:
        value = np.sinh(tau * x_arr) / np.sinh(tau)
    else:
        value = np.sin(tau * x_arr) / np.sin(tau)

    if value.ndim == 0:
        return float(value)
    return value


def q_number(x: ArrayLike, p: DeformationParameter) -> ArrayLike:
    """Evaluate the q-number [x].

    Args:
        x: Scalar or array argument.
        p: Deformation parameter.

    Returns:
        A float for scalar input, otherwise an array of the same shape.

    Raises:
        DomainError: If ``x`` is not finite.
    """
    return _deformed(x, p.tau, p.regime)


def q_number_base_q2(x: ArrayLike, p: DeformationParameter) -> ArrayLike:
    """Evaluate [x] with q replaced by q^2, i.e. tau replaced by 2*tau."""
    return _deformed(x, 2 * p.tau, p.regime)


def q_factorial(n: int, p: DeformationParameter) -> float:
    """Evaluate [n]! = [n][n-1]...[1], with [0]! = 1.

    Raises:
        DomainError: If ``n`` is negative or not an integer.
    """
    if int(n) != n or n < 0:
        raise DomainError(f"q-factorial needs a non-negative integer, got {n}")
    if n == 0:
        return 1.0
    return float(np.prod(q_number(np.arange(1, int(n) + 1), p)))

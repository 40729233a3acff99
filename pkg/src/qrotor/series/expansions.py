"""Expansions of the deformed spectra in powers of x = l(l+1).

Each expansion is E/A = prefactor * sum_n coeffs[n] * x^(n+1). The su_q(2)
spectrum expands through spherical Bessel functions, the tensor-operator
spectrum through Bernoulli numbers (via the Taylor series of sech^2).
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple, Union

import numpy as np
import pandas as pd

from qrotor.core.errors import DomainError, SeriesRangeError
from qrotor.series.special import MAX_BERNOULLI_INDEX, bernoulli, spherical_bessel_j

logger = logging.getLogger(__name__)

MAX_TERMS = 64
MAX_TAU = 0.5
TRUNCATION_RTOL = 1e-15
# f_n and d_n need B_(2n+4), so B_64 allows n <= 30.
ITO_MAX_TERMS = (MAX_BERNOULLI_INDEX - 4) // 2 + 1

ArrayLike = Union[float, np.ndarray]


class ExpansionFamily(str, Enum):
    SUQ2_EXACT = "suq2_exact"
    SUQ2_APPROX = "suq2_approx"
    ITO_EXACT = "ito_exact"
    ITO_APPROX = "ito_approx"


@dataclass(frozen=True)
class ExpansionCoefficients:
    """Coefficients of an l(l+1) expansion.

    Attributes:
        family: Which spectrum and which variant the coefficients belong to.
        tau: Deformation the coefficients were evaluated at.
        coeffs: coeffs[n] multiplies x^(n+1), x = l(l+1).
        prefactor: Overall factor in front of the sum.
        ell_limit: Largest l for which the series converges, if finite.
    """

    family: ExpansionFamily
    tau: float
    coeffs: Tuple[float, ...]
    prefactor: float = 1.0
    ell_limit: Optional[float] = None

    def __post_init__(self):
        values = np.asarray(self.coeffs + (self.prefactor,), dtype=float)
        if not np.all(np.isfinite(values)):
            raise SeriesRangeError(f"{self.family.value} coefficients are not finite at tau={self.tau}")

    def __len__(self) -> int:
        return len(self.coeffs)

    def effective(self) -> List[float]:
        """Coefficients with the prefactor folded in."""
        return [self.prefactor * c for c in self.coeffs]

    def evaluate(self, ell: float, A: float = 1.0) -> float:
        """Sum the series at ``ell``, stopping once terms drop below 1e-15 of the sum.

        Raises:
            SeriesRangeError: If ``ell`` lies outside the convergence radius.
        """
        if self.ell_limit is not None and ell >= self.ell_limit:
            raise SeriesRangeError(
                f"{self.family.value} series diverges at l={ell} for tau={self.tau} "
                f"(requires l < {self.ell_limit:.3f})"
            )
        x = ell * (ell + 1)
        if x == 0:
            return 0.0

        total = 0.0
        power = x
        for c in self.coeffs:
            term = c * power
            total += term
            if abs(term) < TRUNCATION_RTOL * abs(total):
                break
            power *= x
        return A * self.prefactor * total

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"n": np.arange(len(self.coeffs)), "coefficient": self.effective()})


def _check_tau(tau: float) -> None:
    if not 0 < tau <= MAX_TAU:
        raise DomainError(f"Expansions are supported for 0 < tau <= {MAX_TAU}, got {tau}")


def _check_terms(n_terms: int) -> None:
    if not 1 <= n_terms <= MAX_TERMS:
        raise SeriesRangeError(f"n_terms must lie in [1, {MAX_TERMS}], got {n_terms}")


def suq2_exact_expansion(tau: float, n_terms: int) -> ExpansionCoefficients:
    """Exact expansion of sin(l tau) sin((l+1) tau)/sin^2(tau).

    coeffs[n] = (-1)^n (2 tau)^n j_n(tau)/(n+1)!, prefactor 1/j_0(tau)^2.

    Args:
        tau: Phase deformation in (0, 0.5].
        n_terms: Number of coefficients, at most 64.

    Returns:
        ExpansionCoefficients of family SUQ2_EXACT.
    """
    _check_tau(tau)
    _check_terms(n_terms)
    coeffs = tuple(
        (-1) ** n * (2 * tau) ** n * spherical_bessel_j(n, tau) / math.factorial(n + 1)
        for n in range(n_terms)
    )
    j0 = spherical_bessel_j(0, tau)
    return ExpansionCoefficients(ExpansionFamily.SUQ2_EXACT, tau, coeffs, 1.0 / j0 ** 2)


def suq2_approx_rationals(n_terms: int) -> List[Fraction]:
    """Exact rationals r_n with coeffs[n] = r_n tau^(2n) for the sinus formula."""
    _check_terms(n_terms)
    return [
        Fraction((-1) ** n * 2 ** (2 * n), (n + 1) * math.factorial(2 * n + 1))
        for n in range(n_terms)
    ]


def suq2_approx_expansion(tau: float, n_terms: int) -> ExpansionCoefficients:
    """Expansion of the sinus formula sin^2(tau sqrt(x))/tau^2."""
    _check_tau(tau)
    coeffs = tuple(float(r) * tau ** (2 * n) for n, r in enumerate(suq2_approx_rationals(n_terms)))
    return ExpansionCoefficients(ExpansionFamily.SUQ2_APPROX, tau, coeffs)


@lru_cache(maxsize=None)
def _sech2_rational(n: int, k: int) -> Fraction:
    j = n + k + 1
    power = 2 ** (2 * j)
    return (
        power * (power - 1) * bernoulli(2 * j)
        / (math.factorial(2 * j - 2) * (2 * j))
        * math.comb(n + k, n)
    )


def _sech2_inner(n: int, tau: float, max_terms: Optional[int] = None) -> float:
    """sum_k rho(n, k) tau^(2k), truncated adaptively or at B_64."""
    k_cap = MAX_BERNOULLI_INDEX // 2 - n
    if max_terms is not None:
        k_cap = min(k_cap, max_terms)
    if k_cap < 1:
        raise SeriesRangeError(f"Index n={n} needs Bernoulli numbers beyond B_{MAX_BERNOULLI_INDEX}")

    total = 0.0
    tau2 = tau * tau
    for k in range(k_cap):
        term = float(_sech2_rational(n, k)) * tau2 ** k
        total += term
        if k > 0 and abs(term) < 0.01 * TRUNCATION_RTOL * abs(total):
            return total
    if max_terms is None:
        logger.debug("Inner sum for n=%d capped at %d terms by B_%d", n, k_cap, MAX_BERNOULLI_INDEX)
    return total


def sech2_coefficients(tau: float, n_terms: int, inner_terms: Optional[int] = None) -> List[float]:
    """Coefficients c_n of the double-sum rearrangement; c_0 equals sech^2(tau).

    Args:
        tau: Real deformation.
        n_terms: Number of coefficients, at most 32.
        inner_terms: Optional cap on the inner sum length.
    """
    if not 1 <= n_terms <= MAX_BERNOULLI_INDEX // 2:
        raise SeriesRangeError(f"n_terms must lie in [1, {MAX_BERNOULLI_INDEX // 2}], got {n_terms}")
    return [(2 * tau) ** (2 * n) * _sech2_inner(n, tau, inner_terms) for n in range(n_terms)]


def ito_f(n: int, tau: float) -> float:
    """f_n(tau) of the tensor-operator expansion; f_0 = sinh(tau)/(tau cosh^3(tau))."""
    if not 0 <= n < ITO_MAX_TERMS:
        raise SeriesRangeError(f"f_n is available for 0 <= n < {ITO_MAX_TERMS}, got {n}")
    return (-1) ** (n + 1) * (2 * tau) ** n * math.factorial(n + 1) * _sech2_inner(n + 1, tau)


def ito_ell_limit(tau: float) -> float:
    """Spins below this bound satisfy (2l+1) 2 tau < pi/2."""
    return (math.pi / (4 * tau) - 1) / 2


def _ito_term_count(n_terms: int) -> int:
    """Clamp a request to the ITO_MAX_TERMS coefficients B_64 supports."""
    _check_terms(n_terms)
    if n_terms > ITO_MAX_TERMS:
        logger.warning(
            "Tensor-operator expansions stop at %d terms (B_%d); %d requested",
            ITO_MAX_TERMS, MAX_BERNOULLI_INDEX, n_terms,
        )
        return ITO_MAX_TERMS
    return n_terms


def ito_exact_expansion(tau: float, n_terms: int, ell_max: Optional[float] = None) -> ExpansionCoefficients:
    """Exact expansion of (1 - cosh^2(tau)/cosh^2((2l+1) tau))/(4 sinh^2(tau)).

    d_n = (-1)^n (2 tau)^n f_n(tau)/(n+1)!, prefactor tau^2 cosh^2(tau)/sinh^2(tau).
    Requests above ITO_MAX_TERMS are clamped to it with a warning.

    Args:
        tau: Real deformation in (0, 0.5].
        n_terms: Requested number of coefficients, at most 64.
        ell_max: Largest spin the caller will evaluate at, checked against
            the convergence radius.

    Returns:
        ExpansionCoefficients of family ITO_EXACT.

    Raises:
        SeriesRangeError: If ``ell_max`` lies outside the convergence radius.
    """
    _check_tau(tau)
    _check_terms(n_terms)
    limit = ito_ell_limit(tau)
    if ell_max is not None and ell_max >= limit:
        raise SeriesRangeError(
            f"(2l+1) 2tau < pi/2 fails for l={ell_max} at tau={tau} (requires l < {limit:.3f})"
        )
    count = _ito_term_count(n_terms)
    coeffs = tuple(
        (-1) ** n * (2 * tau) ** n * ito_f(n, tau) / math.factorial(n + 1)
        for n in range(count)
    )
    prefactor = (tau * math.cosh(tau) / math.sinh(tau)) ** 2
    return ExpansionCoefficients(ExpansionFamily.ITO_EXACT, tau, coeffs, prefactor, limit)


def ito_approx_rationals(n_terms: int) -> List[Fraction]:
    """Exact rationals r_n with coeffs[n] = r_n (2 tau)^(2n) for the tanh formula."""
    if not 1 <= n_terms <= ITO_MAX_TERMS:
        raise SeriesRangeError(f"n_terms must lie in [1, {ITO_MAX_TERMS}], got {n_terms}")
    rationals = []
    for n in range(n_terms):
        power = 2 ** (2 * n + 4)
        rationals.append(
            power * (1 - power) * bernoulli(2 * n + 4)
            / (math.factorial(2 * n + 2) * (2 * n + 4))
        )
    return rationals


def ito_approx_expansion(tau: float, n_terms: int) -> ExpansionCoefficients:
    """Expansion of the hyperbolic tangent formula tanh^2(2 tau sqrt(x))/(2 tau)^2.

    Like ito_exact_expansion, requests above ITO_MAX_TERMS are clamped.
    """
    _check_tau(tau)
    rationals = ito_approx_rationals(_ito_term_count(n_terms))
    coeffs = tuple(float(r) * (2 * tau) ** (2 * n) for n, r in enumerate(rationals))
    # tanh converges for |2 tau sqrt(x)| < pi/2
    limit = math.sqrt((math.pi / (4 * tau)) ** 2 + 0.25) - 0.5
    return ExpansionCoefficients(ExpansionFamily.ITO_APPROX, tau, coeffs, 1.0, limit)


def _x(ell: ArrayLike) -> np.ndarray:
    ell = np.asarray(ell, dtype=float)
    return ell * (ell + 1)


def _scalar(value: np.ndarray) -> ArrayLike:
    return float(value) if np.ndim(value) == 0 else value


def sinus_formula(A: float, tau: float, ell: ArrayLike) -> ArrayLike:
    """A sin^2(tau sqrt(l(l+1)))/tau^2."""
    if not tau > 0:
        raise DomainError(f"tau must be positive, got {tau}")
    return _scalar(A * np.sin(tau * np.sqrt(_x(ell))) ** 2 / tau ** 2)


def amalsky_parameters(A: float, tau: float) -> Tuple[float, float]:
    """Map (A, tau) to the (eps0, N) form eps0 sin^2((pi/N) sqrt(l(l+1)))."""
    if not tau > 0:
        raise DomainError(f"tau must be positive, got {tau}")
    return A / tau ** 2, math.pi / tau


def amalsky_energy(eps0: float, N: float, ell: ArrayLike) -> ArrayLike:
    return _scalar(eps0 * np.sin(math.pi / N * np.sqrt(_x(ell))) ** 2)


def tanh_formula(A: float, tau: float, ell: ArrayLike) -> ArrayLike:
    """(A/(2 tau)^2) tanh^2(2 tau sqrt(l(l+1)))."""
    if not tau > 0:
        raise DomainError(f"tau must be positive, got {tau}")
    return _scalar(A * np.tanh(2 * tau * np.sqrt(_x(ell))) ** 2 / (2 * tau) ** 2)

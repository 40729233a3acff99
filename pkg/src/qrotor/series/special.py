"""Special functions used by the l(l+1) expansions."""

import math
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from scipy.special import spherical_jn

from qrotor.core.errors import DomainError, SeriesRangeError

MAX_BERNOULLI_INDEX = 64

# Below this argument j_n is evaluated from its small-x series.
BESSEL_SERIES_THRESHOLD = 1e-4


@lru_cache(maxsize=1)
def _bernoulli_table() -> Tuple[Fraction, ...]:
    table = [Fraction(1)]
    for n in range(1, MAX_BERNOULLI_INDEX + 1):
        total = sum(math.comb(n + 1, k) * table[k] for k in range(n))
        table.append(-total / (n + 1))
    return tuple(table)


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n with the B_1 = -1/2 convention.

    Raises:
        DomainError: If ``n`` is negative.
        SeriesRangeError: If ``n`` exceeds MAX_BERNOULLI_INDEX.
    """
    if n < 0:
        raise DomainError(f"Bernoulli index must be non-negative, got {n}")
    if n > MAX_BERNOULLI_INDEX:
        raise SeriesRangeError(f"Bernoulli numbers are tabulated up to B_{MAX_BERNOULLI_INDEX}, got n={n}")
    return _bernoulli_table()[n]


def double_factorial(n: int) -> int:
    """n!! for n >= -1, with (-1)!! = 0!! = 1."""
    if n < -1:
        raise DomainError(f"Double factorial needs n >= -1, got {n}")
    return math.prod(range(n, 0, -2)) if n > 0 else 1


def spherical_bessel_j(n: int, x: float) -> float:
    """Spherical Bessel function j_n(x) for n >= -1 and x >= 0.

    j_{-1}(x) = cos(x)/x. For x below BESSEL_SERIES_THRESHOLD the small-x
    series x^n/(2n+1)!! (1 - x^2/(2(2n+3)) + ...) is used.

    Args:
        n: Order, at least -1.
        x: Non-negative argument.

    Returns:
        j_n(x).

    Raises:
        DomainError: For n < -1, x < 0, or the pole of j_{-1} at x = 0.
    """
    if n < -1:
        raise DomainError(f"Spherical Bessel order must be >= -1, got {n}")
    if x < 0:
        raise DomainError(f"Spherical Bessel argument must be non-negative, got {x}")

    if n == -1:
        if x == 0:
            raise DomainError("j_{-1}(x) = cos(x)/x has a pole at x = 0")
        return math.cos(x) / x

    if x < BESSEL_SERIES_THRESHOLD:
        if x == 0:
            return 1.0 if n == 0 else 0.0
        x2 = x * x
        leading = x ** n / double_factorial(2 * n + 1)
        return leading * (
            1 - x2 / (2 * (2 * n + 3)) + x2 * x2 / (8 * (2 * n + 3) * (2 * n + 5))
        )
    return float(spherical_jn(n, x))


def tanh_taylor_coefficients(n_terms: int) -> List[Fraction]:
    """Coefficients of x^(2n-1), n = 1..n_terms, in the Taylor series of tanh.

    They are 2^(2n) (2^(2n) - 1) B_(2n) / (2n)!.
    """
    if 2 * n_terms > MAX_BERNOULLI_INDEX:
        raise SeriesRangeError(f"tanh series is limited to {MAX_BERNOULLI_INDEX // 2} terms")
    coefficients = []
    for n in range(1, n_terms + 1):
        power = 2 ** (2 * n)
        coefficients.append(power * (power - 1) * bernoulli(2 * n) / math.factorial(2 * n))
    return coefficients


def tanh_taylor(x: float, n_terms: int) -> float:
    """Partial sum of the tanh Taylor series, convergent for |x| < pi/2."""
    return sum(float(c) * x ** (2 * n - 1) for n, c in enumerate(tanh_taylor_coefficients(n_terms), start=1))

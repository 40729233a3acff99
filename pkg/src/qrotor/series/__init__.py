"""Special functions and l(l+1) expansions."""

from qrotor.series.special import bernoulli, double_factorial, spherical_bessel_j, tanh_taylor
from qrotor.series.expansions import (
    ExpansionCoefficients,
    ExpansionFamily,
    amalsky_energy,
    amalsky_parameters,
    ito_approx_expansion,
    ito_approx_rationals,
    ito_exact_expansion,
    ito_f,
    sech2_coefficients,
    sinus_formula,
    suq2_approx_expansion,
    suq2_approx_rationals,
    suq2_exact_expansion,
    tanh_formula,
)

__all__ = [
    "bernoulli",
    "double_factorial",
    "spherical_bessel_j",
    "tanh_taylor",
    "ExpansionCoefficients",
    "ExpansionFamily",
    "suq2_exact_expansion",
    "suq2_approx_expansion",
    "suq2_approx_rationals",
    "ito_exact_expansion",
    "ito_approx_expansion",
    "ito_approx_rationals",
    "ito_f",
    "sech2_coefficients",
    "sinus_formula",
    "tanh_formula",
    "amalsky_parameters",
    "amalsky_energy",
]

"""Invariance suite over a range of spins and deformations."""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional

from qrotor.algebra.generators import NON_COMMUTATOR_KEYS, commutator_residuals
from qrotor.algebra.ito import ito_residuals
from qrotor.core.errors import DomainError
from qrotor.core.types import DeformationParameter, FitConfig, Regime, SpinLabel

logger = logging.getLogger(__name__)

MAX_VERIFY_ELL = 64


@dataclass
class VerificationReport:
    """Residuals per (regime, tau, spin) case together with the failures found."""

    residuals: Dict[str, Dict[str, float]] = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)
    skipped: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "failures": list(self.failures),
            "skipped": list(self.skipped),
            "residuals": self.residuals,
        }


def case_name(ell: SpinLabel, p: DeformationParameter) -> str:
    return f"{p.regime.value} tau={p.tau:g} l={ell}"


def check_residuals(
    residuals: Dict[str, float],
    ell: SpinLabel,
    p: DeformationParameter,
    config: Optional[FitConfig] = None,
) -> List[str]:
    """Names of the identities in ``residuals`` that violate their thresholds.

    Identities must stay below ``identity_tolerance``. Non-commutators must
    exceed ``non_commutator_floor`` away from the classical point for
    2*ell >= 3; for spin 1/2 and 1 the deformed and classical ladder
    operators commute exactly.
    """
    config = config or FitConfig()
    failures = []
    for name, value in residuals.items():
        if name in NON_COMMUTATOR_KEYS:
            mandated = not p.is_classical and ell.two_ell >= 3
            if mandated and not value > config.non_commutator_floor:
                failures.append(f"{name} = {value:.3e} should not vanish")
            elif p.is_classical and value > config.identity_tolerance:
                failures.append(f"{name} = {value:.3e} should vanish at q = 1")
        elif not value <= config.identity_tolerance:
            failures.append(f"{name} = {value:.3e}")
    return failures


def phase_ladder_is_real(ell: SpinLabel, tau: float) -> bool:
    """True when every phase q-number entering the ladder elements is positive."""
    return ell.two_ell * tau < math.pi


def verify_irrep(ell: SpinLabel, p: DeformationParameter) -> Dict[str, float]:
    """Combined algebra and tensor-operator residuals for one irrep."""
    residuals = commutator_residuals(ell, p)
    if p.regime is not Regime.PHASE:
        residuals.update(ito_residuals(ell, p))
    return residuals


def run_suite(
    ell_max: float,
    taus: Iterable[float],
    regime: Regime = Regime.REAL,
    config: Optional[FitConfig] = None,
) -> VerificationReport:
    """Check every identity for all spins 0, 1/2, ..., ell_max at each tau.

    Args:
        ell_max: Largest spin to check (at most 64).
        taus: Deformations to check.
        regime: Real or phase deformation.
        config: Thresholds; defaults to FitConfig().

    Returns:
        VerificationReport listing every residual and failure.

    Raises:
        DomainError: If ``ell_max`` is out of range or a deformation is
            invalid (including the phase root-of-unity guard).
    """
    if not 0 <= ell_max <= MAX_VERIFY_ELL:
        raise DomainError(f"ell_max must lie in [0, {MAX_VERIFY_ELL}], got {ell_max}")
    regime = Regime(regime)
    params = [DeformationParameter(regime, tau, ell_max) for tau in taus]
    spins = [SpinLabel(two_ell) for two_ell in range(int(round(2 * ell_max)) + 1)]

    report = VerificationReport()
    for p in params:
        for ell in spins:
            name = case_name(ell, p)
            if p.regime is Regime.PHASE and not phase_ladder_is_real(ell, p.tau):
                logger.warning("Skipping %s: ladder products are negative", name)
                report.skipped.append(name)
                continue
            residuals = verify_irrep(ell, p)
            report.residuals[name] = residuals
            report.failures.extend(f"{name}: {msg}" for msg in check_residuals(residuals, ell, p, config))
    logger.info(
        "Verified %d cases, %d failures, %d skipped",
        len(report.residuals), len(report.failures), len(report.skipped),
    )
    return report

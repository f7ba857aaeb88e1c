"""
Cooling power Q4 at the maximum-Omega operating point, as a function of tau.
"""

from __future__ import annotations

import logging
import math
from typing import Callable, Dict, Tuple

from otto_omega.cycle.thermo import heat_flows
from otto_omega.domain.models import CoolingPeak, CoolingRegime, DriveProtocol, Regime
from otto_omega.errors import DomainError, InfeasibleError
from otto_omega.fridge import closed_forms as cf
from otto_omega.oracle import ScalarProblem1D, maximize_1d

logger = logging.getLogger(__name__)

CLOSED_FORMS: Dict[CoolingRegime, Callable] = {
    CoolingRegime.AD_HIGH_T: cf.cooling_power_ad_high,
    CoolingRegime.AD_LOW_T: cf.cooling_power_ad_low,
    CoolingRegime.SUDDEN_SWITCH: cf.cooling_power_ss,
}


def tau_domain(regime: CoolingRegime) -> Tuple[float, float]:
    if CoolingRegime(regime) is CoolingRegime.SUDDEN_SWITCH:
        return 0.5, 1.0
    return 0.0, 1.0


def _check_tau(regime: CoolingRegime, tau: float) -> None:
    lo, hi = tau_domain(regime)
    if lo < tau < hi:
        return
    if regime is CoolingRegime.SUDDEN_SWITCH and 0.0 < tau <= 0.5:
        raise InfeasibleError(cf.SS_FRIDGE_RULE)
    raise DomainError(f"tau must lie in ({lo:g}, {hi:g}) for {regime}")


def cooling_power_at_mof(
    regime: CoolingRegime, tau: float, beta_hot: float = 1.0
) -> float:
    """Closed-form cooling power at maximum Omega."""
    regime = CoolingRegime(regime)
    _check_tau(regime, tau)
    if not beta_hot > 0.0:
        raise DomainError("beta_hot must be positive")
    return float(CLOSED_FORMS[regime](tau, beta_hot))


def cooling_power_from_controls(
    regime: CoolingRegime, tau: float, beta_hot: float = 1.0
) -> float:
    """
    Q4 from the heat kernel at the regime's maximum-Omega controls; the
    closed forms must reproduce it.
    """
    regime = CoolingRegime(regime)
    _check_tau(regime, tau)
    if not beta_hot > 0.0:
        raise DomainError("beta_hot must be positive")
    beta_cold = beta_hot / tau

    if regime is CoolingRegime.AD_LOW_T:
        zeta_c = tau / (1.0 - tau)
        omega_1, omega_2 = cf.cop_mof_low_t_controls(zeta_c, beta_hot)
        protocol, kernel = DriveProtocol.ADIABATIC, Regime.LOW_T
    elif regime is CoolingRegime.AD_HIGH_T:
        omega_2 = 1.0 / beta_hot
        omega_1 = cf.cop_mof_high_t_control(tau) * omega_2
        protocol, kernel = DriveProtocol.ADIABATIC, Regime.HIGH_T
    else:
        omega_2 = 1.0 / beta_hot
        omega_1 = math.sqrt(cf.cop_mof_ss_control_squared(tau)) * omega_2
        protocol, kernel = DriveProtocol.SUDDEN_SWITCH, Regime.HIGH_T

    _, q_cold = heat_flows(beta_cold, beta_hot, omega_1, omega_2, protocol, kernel)
    return float(q_cold)


def cp_mof_peak(regime: CoolingRegime, beta_hot: float = 1.0) -> CoolingPeak:
    """Interior maximum of the cooling power at maximum Omega over tau."""
    regime = CoolingRegime(regime)
    if not beta_hot > 0.0:
        raise DomainError("beta_hot must be positive")
    closed_form = CLOSED_FORMS[regime]
    problem = ScalarProblem1D(
        objective=lambda tau: closed_form(tau, beta_hot),
        domain=tau_domain(regime),
        name=f"cooling power at MOF ({regime})",
    )
    best = maximize_1d(problem)
    logger.info("%s: cooling power peaks at tau=%.12g", regime, best.x)
    return CoolingPeak(
        regime=regime,
        beta_hot=beta_hot,
        tau_star=best.x,
        q_cold_star=best.value,
        convergence=best.convergence(),
    )

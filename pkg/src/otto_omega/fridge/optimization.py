from __future__ import annotations

import logging
import math
from typing import Dict, Optional

from otto_omega.cycle.search import search
from otto_omega.domain.models import (
    BathPair,
    Device,
    DriveProtocol,
    Method,
    ObjectiveKind,
    OptResult,
    Regime,
)
from otto_omega.errors import InfeasibleError
from otto_omega.fridge import closed_forms as cf
from otto_omega.fridge.objectives import FridgeObjective

logger = logging.getLogger(__name__)


def _analytic(
    baths: BathPair,
    protocol: DriveProtocol,
    regime: Regime,
    controls: Dict[str, float],
    value: float,
    cop: float,
) -> OptResult:
    return OptResult(
        device=Device.FRIDGE,
        objective=ObjectiveKind.OMEGA,
        protocol=protocol,
        regime=regime,
        tau=baths.tau,
        beta_hot=baths.beta_hot,
        controls={k: float(v) for k, v in controls.items()},
        objective_value=float(value),
        figure_of_merit=float(cop),
        method=Method.ANALYTIC,
    )


def cop_mof_adiabatic_high_t(baths: BathPair) -> OptResult:
    """z* = tau / sqrt(2 - tau)."""
    tau = baths.tau
    z = cf.cop_mof_high_t_control(tau)
    return _analytic(
        baths,
        DriveProtocol.ADIABATIC,
        Regime.HIGH_T,
        {"z": z},
        cf.omega_high_t(z, tau, baths.beta_hot),
        cf.cop_mof_high(baths.zeta_carnot),
    )


def cop_mof_adiabatic_low_t(baths: BathPair) -> OptResult:
    zeta_c = baths.zeta_carnot
    omega_1, omega_2 = cf.cop_mof_low_t_controls(zeta_c, baths.beta_hot)
    return _analytic(
        baths,
        DriveProtocol.ADIABATIC,
        Regime.LOW_T,
        {"omega_1": omega_1, "omega_2": omega_2},
        cf.max_omega_fridge_low(zeta_c, baths.beta_hot),
        cf.cop_mof_low(zeta_c),
    )


def cop_mof_ss(baths: BathPair) -> OptResult:
    """
    Sudden-switch maximum Omega. The optimal z^2 solves dOmega/dz = 0 and is
    the quantity the published COP formula calls A.
    """
    tau = baths.tau
    if not tau > 0.5:
        raise InfeasibleError(cf.SS_FRIDGE_RULE)
    z = math.sqrt(cf.cop_mof_ss_control_squared(tau))
    cop = cf.cop_mof_ss(baths.zeta_carnot)
    direct = cf.fridge_ss_quantities(z, tau, baths.beta_hot).cop
    if not math.isclose(cop, direct, rel_tol=1e-10, abs_tol=1e-14):
        logger.warning(
            "sudden-switch COP formula %.17g differs from the cycle value %.17g "
            "at tau=%g",
            cop,
            direct,
            tau,
        )
    return _analytic(
        baths,
        DriveProtocol.SUDDEN_SWITCH,
        Regime.HIGH_T,
        {"z": z},
        cf.omega_fridge_ss(z, tau, baths.beta_hot),
        cop,
    )


def maximize_fridge(
    objective: FridgeObjective, *, tolerance: Optional[float] = None
) -> OptResult:
    """Numeric maximum Omega of a refrigerator; the COP is Q4 / W_in there."""
    outcome = search(objective, tolerance=tolerance)
    return OptResult(
        device=Device.FRIDGE,
        objective=ObjectiveKind.OMEGA,
        protocol=objective.protocol,
        regime=objective.regime,
        tau=objective.baths.tau,
        beta_hot=objective.baths.beta_hot,
        controls=outcome.controls,
        objective_value=outcome.value,
        figure_of_merit=outcome.figure_of_merit,
        method=Method.NUMERIC,
        convergence=outcome.convergence,
    )

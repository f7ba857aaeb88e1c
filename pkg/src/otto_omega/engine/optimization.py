from __future__ import annotations

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
from otto_omega.engine import closed_forms as cf
from otto_omega.engine.objectives import EngineObjective


def _analytic(
    baths: BathPair,
    objective: ObjectiveKind,
    protocol: DriveProtocol,
    regime: Regime,
    controls: Dict[str, float],
    value: float,
    efficiency: float,
) -> OptResult:
    return OptResult(
        device=Device.ENGINE,
        objective=objective,
        protocol=protocol,
        regime=regime,
        tau=baths.tau,
        beta_hot=baths.beta_hot,
        controls={k: float(v) for k, v in controls.items()},
        objective_value=float(value),
        figure_of_merit=float(efficiency),
        method=Method.ANALYTIC,
    )


def emof_adiabatic_high_t(baths: BathPair) -> OptResult:
    """Adiabatic engine at high temperature, z* = sqrt(tau (1 + tau) / 2)."""
    tau = baths.tau
    z = cf.emof_high_t_control(tau)
    return _analytic(
        baths,
        ObjectiveKind.OMEGA,
        DriveProtocol.ADIABATIC,
        Regime.HIGH_T,
        {"z": z},
        cf.omega_high_t(z, tau, baths.beta_hot),
        cf.eta_omega_high(baths.eta_carnot),
    )


def maximize_work_high_t(baths: BathPair) -> OptResult:
    """z* = sqrt(tau), where the efficiency is Curzon-Ahlborn."""
    tau = baths.tau
    z = math.sqrt(tau)
    return _analytic(
        baths,
        ObjectiveKind.WORK,
        DriveProtocol.ADIABATIC,
        Regime.HIGH_T,
        {"z": z},
        cf.work_high_t(z, tau, baths.beta_hot),
        cf.eta_curzon_ahlborn(baths.eta_carnot),
    )


def maximize_work_low_t(baths: BathPair) -> OptResult:
    eta_c = baths.eta_carnot
    omega_1, omega_2 = cf.max_work_low_t_controls(eta_c, baths.beta_hot)
    return _analytic(
        baths,
        ObjectiveKind.WORK,
        DriveProtocol.ADIABATIC,
        Regime.LOW_T,
        {"omega_1": omega_1, "omega_2": omega_2},
        cf.max_work_low(eta_c, baths.beta_hot),
        cf.eta_work_low(eta_c),
    )


def maximize_omega_low_t(baths: BathPair) -> OptResult:
    eta_c = baths.eta_carnot
    omega_1, omega_2 = cf.omega_low_t_controls(eta_c, baths.beta_hot)
    return _analytic(
        baths,
        ObjectiveKind.OMEGA,
        DriveProtocol.ADIABATIC,
        Regime.LOW_T,
        {"omega_1": omega_1, "omega_2": omega_2},
        cf.max_omega_low(eta_c, baths.beta_hot),
        cf.eta_omega_low(eta_c),
    )


def emof_ss(baths: BathPair) -> OptResult:
    """
    Sudden-switch maximum Omega. The efficiency is the published closed form;
    the control comes from dOmega/dz = 0.
    """
    tau = baths.tau
    z = cf.emof_ss_control(tau)
    return _analytic(
        baths,
        ObjectiveKind.OMEGA,
        DriveProtocol.SUDDEN_SWITCH,
        Regime.HIGH_T,
        {"z": z},
        cf.omega_ss(z, tau, baths.beta_hot),
        cf.eta_omega_ss(baths.eta_carnot),
    )


def maximize_work_ss(baths: BathPair) -> OptResult:
    tau = baths.tau
    z = cf.max_work_ss_control(tau)
    return _analytic(
        baths,
        ObjectiveKind.WORK,
        DriveProtocol.SUDDEN_SWITCH,
        Regime.HIGH_T,
        {"z": z},
        cf.work_ss(z, tau, baths.beta_hot),
        cf.eta_work_ss(baths.eta_carnot),
    )


def maximize_engine(
    objective: EngineObjective, *, tolerance: Optional[float] = None
) -> OptResult:
    """Numeric optimum of an engine objective; the figure of merit is W / Q2 there."""
    outcome = search(objective, tolerance=tolerance)
    return OptResult(
        device=Device.ENGINE,
        objective=objective.kind,
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

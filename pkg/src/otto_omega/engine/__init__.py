from __future__ import annotations

from otto_omega.engine.closed_forms import (
    ReferenceEfficiencies,
    eta_max_ss,
    eta_omega_high,
    eta_omega_low,
    eta_omega_ss,
    eta_ss,
    eta_work_low,
    eta_work_ss,
    omega_engine,
    reference_efficiencies,
    work_low_t,
    work_ss,
)
from otto_omega.engine.loop import loop_curve
from otto_omega.engine.objectives import EngineObjective
from otto_omega.engine.optimization import (
    emof_adiabatic_high_t,
    emof_ss,
    maximize_engine,
    maximize_omega_low_t,
    maximize_work_high_t,
    maximize_work_low_t,
    maximize_work_ss,
)

__all__ = [
    "EngineObjective",
    "ReferenceEfficiencies",
    "emof_adiabatic_high_t",
    "emof_ss",
    "eta_max_ss",
    "eta_omega_high",
    "eta_omega_low",
    "eta_omega_ss",
    "eta_ss",
    "eta_work_low",
    "eta_work_ss",
    "loop_curve",
    "maximize_engine",
    "maximize_omega_low_t",
    "maximize_work_high_t",
    "maximize_work_low_t",
    "maximize_work_ss",
    "omega_engine",
    "reference_efficiencies",
    "work_low_t",
    "work_ss",
]

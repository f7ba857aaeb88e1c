from __future__ import annotations

from otto_omega.fridge.closed_forms import (
    SuddenSwitchFridge,
    cop_adiabatic,
    cop_chi_high,
    cop_max_ss,
    cop_mof_high,
    cop_mof_low,
    fridge_ss_quantities,
    omega_fridge,
)
from otto_omega.fridge.cooling import (
    cooling_power_at_mof,
    cooling_power_from_controls,
    cp_mof_peak,
)
from otto_omega.fridge.objectives import FridgeObjective
from otto_omega.fridge.optimization import (
    cop_mof_adiabatic_high_t,
    cop_mof_adiabatic_low_t,
    cop_mof_ss,
    maximize_fridge,
)

__all__ = [
    "FridgeObjective",
    "SuddenSwitchFridge",
    "cooling_power_at_mof",
    "cooling_power_from_controls",
    "cop_adiabatic",
    "cop_chi_high",
    "cop_max_ss",
    "cop_mof_adiabatic_high_t",
    "cop_mof_adiabatic_low_t",
    "cop_mof_high",
    "cop_mof_low",
    "cop_mof_ss",
    "cp_mof_peak",
    "fridge_ss_quantities",
    "maximize_fridge",
    "omega_fridge",
]

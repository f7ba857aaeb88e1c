from __future__ import annotations

from otto_omega.cycle.core import (
    HEAT_TOLERANCE,
    ThermalFactors,
    adiabaticity,
    corner_energies,
    cycle_report,
    heats,
    regime_approx,
)
from otto_omega.cycle.thermo import coth_half, heat_flows, thermal_excess

__all__ = [
    "HEAT_TOLERANCE",
    "ThermalFactors",
    "adiabaticity",
    "corner_energies",
    "coth_half",
    "cycle_report",
    "heat_flows",
    "heats",
    "regime_approx",
    "thermal_excess",
]

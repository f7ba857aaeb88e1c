from __future__ import annotations

from otto_omega.sweeps.registry import (
    FIGURE_PRESETS,
    QUANTITIES,
    Quantity,
    default_range,
    lookup,
)
from otto_omega.sweeps.runner import SweepTable, run_sweep

__all__ = [
    "FIGURE_PRESETS",
    "QUANTITIES",
    "Quantity",
    "SweepTable",
    "default_range",
    "lookup",
    "run_sweep",
]

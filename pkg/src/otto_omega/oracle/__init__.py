from __future__ import annotations

from otto_omega.oracle.golden import golden_section, maximize_1d
from otto_omega.oracle.polish import second_derivative
from otto_omega.oracle.problems import (
    Maximum1D,
    Maximum2D,
    ScalarProblem1D,
    ScalarProblem2D,
)
from otto_omega.oracle.series import SeriesFit, fit_series
from otto_omega.oracle.simplex import maximize_2d

__all__ = [
    "Maximum1D",
    "Maximum2D",
    "ScalarProblem1D",
    "ScalarProblem2D",
    "SeriesFit",
    "fit_series",
    "golden_section",
    "maximize_1d",
    "maximize_2d",
    "second_derivative",
]

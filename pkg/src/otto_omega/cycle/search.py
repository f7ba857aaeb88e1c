from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Protocol, Tuple

import numpy as np
from numpy.typing import ArrayLike

from otto_omega.domain.models import Convergence, Regime
from otto_omega.oracle import ScalarProblem1D, ScalarProblem2D, maximize_1d, maximize_2d

logger = logging.getLogger(__name__)

# cap on b2 w2 for the two-parameter low-temperature searches
LOW_T_CAP = 50.0


class CycleObjective(Protocol):
    """
    Interface shared by the engine and refrigerator objectives.
    """

    regime: Regime
    omega_2: float

    @property
    def name(self) -> str: ...

    @property
    def beta_hot(self) -> float: ...

    def evaluate(self, omega_1: ArrayLike, omega_2: ArrayLike) -> np.ndarray: ...

    def feasible(self, omega_1: ArrayLike, omega_2: ArrayLike) -> np.ndarray: ...

    def figure_of_merit(self, omega_1: float, omega_2: float) -> float: ...

    def ratio_domain(self) -> Tuple[float, float]: ...


@dataclass(frozen=True)
class SearchOutcome:
    controls: Dict[str, float]
    value: float
    figure_of_merit: float
    convergence: Convergence


def search(
    objective: CycleObjective, *, tolerance: Optional[float] = None
) -> SearchOutcome:
    """
    Numeric maximum of a cycle objective.

    Every search runs in z = omega_1 / omega_2, where the positive-work (or
    positive-cooling) region is an interval. LOW_T adds omega_2 in
    (0, LOW_T_CAP / beta_hot] as a second control, searched with the downhill
    simplex; the other regimes hold omega_2 fixed and use golden section.
    """
    options = {} if tolerance is None else {"tolerance": tolerance}

    if objective.regime is Regime.LOW_T:
        problem_2d = ScalarProblem2D(
            objective=lambda z, w2: objective.evaluate(z * w2, w2),
            domain=(objective.ratio_domain(), (0.0, LOW_T_CAP / objective.beta_hot)),
            feasible=lambda z, w2: objective.feasible(z * w2, w2),
            name=objective.name,
            **options,
        )
        best_2d = maximize_2d(problem_2d)
        z, omega_2 = best_2d.x
        omega_1 = z * omega_2
        controls = {"omega_1": omega_1, "omega_2": omega_2}
        value = best_2d.value
        convergence = best_2d.convergence()
    else:
        omega_2 = objective.omega_2
        problem_1d = ScalarProblem1D(
            objective=lambda z: objective.evaluate(z * omega_2, omega_2),
            domain=objective.ratio_domain(),
            feasible=lambda z: objective.feasible(z * omega_2, omega_2),
            name=objective.name,
            **options,
        )
        best_1d = maximize_1d(problem_1d)
        omega_1 = best_1d.x * omega_2
        controls = {"z": best_1d.x}
        if objective.regime is Regime.EXACT:
            controls.update(omega_1=omega_1, omega_2=omega_2)
        value = best_1d.value
        convergence = best_1d.convergence()

    merit = objective.figure_of_merit(omega_1, omega_2)
    logger.info(
        "%s: numeric optimum %.12g, figure of merit %.12g", objective.name, value, merit
    )
    return SearchOutcome(
        controls=controls, value=value, figure_of_merit=merit, convergence=convergence
    )

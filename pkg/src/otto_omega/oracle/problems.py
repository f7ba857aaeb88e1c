from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np
from numpy.typing import ArrayLike

from otto_omega.domain.models import Convergence
from otto_omega.errors import DomainError

Objective1D = Callable[[np.ndarray], ArrayLike]
Objective2D = Callable[[np.ndarray, np.ndarray], ArrayLike]

# None is the infeasible flag; it ranks below every finite value
Score = Optional[float]

# grid candidates closer than this to the best value are ties
PLATEAU_TOLERANCE = 1e-12


def outranks(a: Score, b: Score) -> bool:
    """True when `a` is strictly better than `b`."""
    if a is None:
        return False
    if b is None:
        return True
    return a > b


def interior_grid(lo: float, hi: float, n: int) -> np.ndarray:
    """n points strictly inside (lo, hi), evenly spaced."""
    return lo + (hi - lo) * np.arange(1, n + 1) / (n + 1)


def _masked(values: ArrayLike, feasible: ArrayLike | None, shape) -> np.ma.MaskedArray:
    values = np.broadcast_to(np.asarray(values, dtype=float), shape)
    mask = ~np.isfinite(values)
    if feasible is not None:
        mask = mask | ~np.broadcast_to(np.asarray(feasible, dtype=bool), shape)
    return np.ma.masked_array(values, mask=mask)


@dataclass(frozen=True)
class ScalarProblem1D:
    """
    Maximise `objective` over the open interval `domain`.

    Both `objective` and the optional `feasible` predicate must broadcast over
    numpy arrays. Points that are infeasible or evaluate to a non-finite value
    carry the infeasible flag.
    """

    objective: Objective1D
    domain: Tuple[float, float]
    tolerance: float = 1e-12
    grid_points: int = 2048
    feasible: Optional[Callable[[np.ndarray], ArrayLike]] = None
    name: str = "objective"

    def __post_init__(self) -> None:
        lo, hi = self.domain
        if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
            raise DomainError(f"{self.name}: domain must satisfy lo < hi")
        if not self.tolerance > 0:
            raise DomainError(f"{self.name}: tolerance must be positive")
        if self.grid_points < 8:
            raise DomainError(f"{self.name}: grid_points must be at least 8")

    def scan(self, xs: np.ndarray) -> np.ma.MaskedArray:
        with np.errstate(all="ignore"):
            values = self.objective(xs)
            feasible = None if self.feasible is None else self.feasible(xs)
        return _masked(values, feasible, np.shape(xs))

    def score(self, x: float) -> Score:
        value = self.scan(np.asarray(x, dtype=float))
        return None if value.mask else float(value)


@dataclass(frozen=True)
class ScalarProblem2D:
    """Maximise `objective(x, y)` over `domain = ((x_lo, x_hi), (y_lo, y_hi))`."""

    objective: Objective2D
    domain: Tuple[Tuple[float, float], Tuple[float, float]]
    tolerance: float = 1e-10
    grid_points: int = 256
    max_iterations: int = 2000
    feasible: Optional[Callable[[np.ndarray, np.ndarray], ArrayLike]] = None
    name: str = "objective"

    def __post_init__(self) -> None:
        for lo, hi in self.domain:
            if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
                raise DomainError(f"{self.name}: rectangle must be nondegenerate")
        if not self.tolerance > 0:
            raise DomainError(f"{self.name}: tolerance must be positive")
        if self.grid_points < 8:
            raise DomainError(f"{self.name}: grid_points must be at least 8")

    def scan(self, xs: np.ndarray, ys: np.ndarray) -> np.ma.MaskedArray:
        with np.errstate(all="ignore"):
            values = self.objective(xs, ys)
            feasible = None if self.feasible is None else self.feasible(xs, ys)
        return _masked(values, feasible, np.broadcast(xs, ys).shape)

    def score(self, x: float, y: float) -> Score:
        value = self.scan(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
        return None if value.mask else float(value)


@dataclass(frozen=True)
class Maximum1D:
    x: float
    value: float
    iterations: int
    polish_steps: int
    evaluations: int
    bracket_width: float
    at_boundary: bool = False
    plateau: bool = False

    def convergence(self) -> Convergence:
        return Convergence(
            iterations=self.iterations,
            polish_steps=self.polish_steps,
            evaluations=self.evaluations,
            achieved_tolerance=self.bracket_width,
            at_boundary=self.at_boundary,
            plateau=self.plateau,
        )


@dataclass(frozen=True)
class Maximum2D:
    x: Tuple[float, float]
    value: float
    iterations: int
    polish_steps: int
    evaluations: int
    simplex_size: float
    converged: bool = True
    at_boundary: bool = False
    plateau: bool = False

    def convergence(self) -> Convergence:
        return Convergence(
            iterations=self.iterations,
            polish_steps=self.polish_steps,
            evaluations=self.evaluations,
            achieved_tolerance=self.simplex_size,
            at_boundary=self.at_boundary,
            plateau=self.plateau,
        )


def first_near_best(values: np.ma.MaskedArray) -> int:
    """Flat index of the first feasible value within PLATEAU_TOLERANCE of the best."""
    best = values.max()
    near = np.ma.filled(values >= best - PLATEAU_TOLERANCE, False)
    return int(np.flatnonzero(near)[0])


def is_plateau(values: np.ma.MaskedArray) -> bool:
    return bool(values.max() - values.min() < PLATEAU_TOLERANCE)

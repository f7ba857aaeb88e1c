from __future__ import annotations

import logging
import math

import numpy as np
from scipy import optimize

from otto_omega.errors import OracleFailure
from otto_omega.oracle.polish import newton_polish_2d
from otto_omega.oracle.problems import (
    Maximum2D,
    ScalarProblem2D,
    Score,
    first_near_best,
    interior_grid,
    is_plateau,
    outranks,
)

logger = logging.getLogger(__name__)


def maximize_2d(problem: ScalarProblem2D) -> Maximum2D:
    """
    Grid scan over the rectangle, downhill-simplex refinement started from the
    best grid cell, then a Newton polish.

    Ties on the grid go to the smallest x, then the smallest y.
    """
    (x_lo, x_hi), (y_lo, y_hi) = problem.domain
    n = problem.grid_points
    xs = interior_grid(x_lo, x_hi, n)
    ys = interior_grid(y_lo, y_hi, n)
    grid_x, grid_y = np.meshgrid(xs, ys, indexing="ij")
    values = problem.scan(grid_x, grid_y)
    if values.count() == 0:
        raise OracleFailure(
            "objective is infeasible on the whole grid",
            problem.name,
            {"domain": problem.domain},
        )

    i, j = np.unravel_index(first_near_best(values), values.shape)
    best_value = float(values[i, j])
    start = np.array([xs[i], ys[j]])
    at_boundary = i in (0, n - 1) or j in (0, n - 1)
    if at_boundary:
        logger.info("%s: grid maximum sits next to the domain edge", problem.name)

    if is_plateau(values):
        return Maximum2D(
            x=(float(start[0]), float(start[1])),
            value=best_value,
            iterations=0,
            polish_steps=0,
            evaluations=n * n,
            simplex_size=float(xs[1] - xs[0]),
            at_boundary=at_boundary,
            plateau=True,
        )

    evaluations = n * n

    def counted(x: float, y: float) -> Score:
        nonlocal evaluations
        evaluations += 1
        return problem.score(x, y)

    def negated(p: np.ndarray) -> float:
        # scipy needs a number; the infeasible flag maps to +inf only here
        s = counted(float(p[0]), float(p[1]))
        return math.inf if s is None else -s

    dx = xs[1] - xs[0]
    dy = ys[1] - ys[0]
    initial_simplex = np.array(
        [
            start,
            start + [dx if i < n - 1 else -dx, 0.0],
            start + [0.0, dy if j < n - 1 else -dy],
        ]
    )
    result = optimize.minimize(
        negated,
        start,
        method="Nelder-Mead",
        bounds=[(x_lo, x_hi), (y_lo, y_hi)],
        options={
            "xatol": problem.tolerance,
            "fatol": 1e-13 * max(abs(best_value), 1e-300),
            "maxiter": problem.max_iterations,
            "initial_simplex": initial_simplex,
        },
    )
    if not result.success:
        logger.warning("%s: simplex stopped early: %s", problem.name, result.message)

    simplex = result.final_simplex[0]
    simplex_size = float(np.max(np.abs(simplex[1:] - simplex[0])))
    point = np.asarray(result.x, dtype=float)
    fx = counted(point[0], point[1])
    logger.debug(
        "%s: simplex took %d iterations, size %.3g",
        problem.name,
        result.nit,
        simplex_size,
    )

    polish_steps = 0
    if fx is not None:
        point, fx, polish_steps = newton_polish_2d(
            counted, point, fx, problem.domain, tol=problem.tolerance
        )

    if not outranks(fx, best_value) and fx != best_value:
        point, fx = start, best_value

    return Maximum2D(
        x=(float(point[0]), float(point[1])),
        value=float(fx),
        iterations=int(result.nit),
        polish_steps=polish_steps,
        evaluations=evaluations,
        simplex_size=simplex_size,
        converged=bool(result.success),
        at_boundary=at_boundary,
    )

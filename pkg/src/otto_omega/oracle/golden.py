from __future__ import annotations

import logging
import math
from typing import Callable, Tuple

from otto_omega.errors import OracleFailure
from otto_omega.oracle.polish import newton_polish_1d
from otto_omega.oracle.problems import (
    Maximum1D,
    ScalarProblem1D,
    Score,
    first_near_best,
    interior_grid,
    is_plateau,
    outranks,
)

logger = logging.getLogger(__name__)

INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2


def golden_section(
    score: Callable[[float], Score], a: float, b: float, tol: float
) -> Tuple[float, Score, int, float]:
    """
    Golden-section search for a maximum of a unimodal function on [a, b].

    Returns (x, score(x), iterations, final bracket width). Ties keep the
    left sub-bracket, so plateaus resolve towards smaller x.
    """
    h = b - a
    if h <= tol:
        x = 0.5 * (a + b)
        return x, score(x), 0, h

    # steps needed to reach the tolerance
    n = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = score(c)
    yd = score(d)

    iterations = 0
    for _ in range(n - 1):
        if not outranks(yd, yc):
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = score(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = score(d)
        iterations += 1

    if outranks(yd, yc):
        return d, yd, iterations, h
    return c, yc, iterations, h


def maximize_1d(problem: ScalarProblem1D) -> Maximum1D:
    """
    Grid scan over the interior of the domain, golden-section refinement in the
    two cells around the best grid point, then a Newton polish.
    """
    lo, hi = problem.domain
    n = problem.grid_points
    xs = interior_grid(lo, hi, n)
    values = problem.scan(xs)
    if values.count() == 0:
        raise OracleFailure(
            "objective is infeasible on the whole grid",
            problem.name,
            {"domain": problem.domain},
        )

    best = first_near_best(values)
    best_value = float(values[best])
    at_boundary = best in (0, n - 1)
    if at_boundary:
        logger.warning("%s: grid maximum sits next to the domain edge", problem.name)

    if is_plateau(values):
        logger.debug("%s: plateau, reporting the smallest control", problem.name)
        return Maximum1D(
            x=float(xs[best]),
            value=best_value,
            iterations=0,
            polish_steps=0,
            evaluations=n,
            bracket_width=float(xs[1] - xs[0]),
            at_boundary=at_boundary,
            plateau=True,
        )

    evaluations = n

    def counted(x: float) -> Score:
        nonlocal evaluations
        evaluations += 1
        return problem.score(x)

    a = float(xs[best - 1]) if best > 0 else lo
    b = float(xs[best + 1]) if best < n - 1 else hi
    x, fx, iterations, width = golden_section(counted, a, b, problem.tolerance)
    logger.debug(
        "%s: golden section took %d steps, bracket %.3g",
        problem.name,
        iterations,
        width,
    )

    polish_steps = 0
    if fx is not None and not at_boundary:
        x, fx, polish_steps = newton_polish_1d(
            counted, x, fx, problem.domain, tol=problem.tolerance
        )

    # the refined point never loses to the grid
    if not outranks(fx, best_value) and fx != best_value:
        x, fx = float(xs[best]), best_value

    return Maximum1D(
        x=float(x),
        value=float(fx),
        iterations=iterations,
        polish_steps=polish_steps,
        evaluations=evaluations,
        bracket_width=width,
        at_boundary=at_boundary,
    )

"""
Finite-difference Newton steps that finish a comparison-based search.

Golden section and the simplex only compare objective values, which pins an
optimum down to roughly sqrt(machine epsilon) in the control. These steps fit
the local quadratic from objective values alone (five-point central gradient,
three-point curvature) and move to its vertex, which resolves the optimum
well below that floor.
"""

from __future__ import annotations

import logging
from typing import Callable, Sequence, Tuple

import numpy as np

from otto_omega.oracle.problems import Score

logger = logging.getLogger(__name__)

REL_STEP = 1e-4
MAX_STEPS = 6
# accept a step unless it loses more than this fraction of the objective
ACCEPT_SLACK = 1e-11


def _step_size(x: float, lo: float, hi: float) -> float:
    width = hi - lo
    return REL_STEP * min(max(abs(x), 1e-3 * width), width)


def _accepts(new: Score, old: float) -> bool:
    return new is not None and new >= old - ACCEPT_SLACK * abs(old)


def second_derivative(
    score: Callable[[float], Score], x: float, h: float
) -> float | None:
    """Central second difference, or None if any stencil point is infeasible."""
    values = [score(x - h), score(x), score(x + h)]
    if any(v is None for v in values):
        return None
    f_minus, f_zero, f_plus = values
    return (f_plus - 2.0 * f_zero + f_minus) / (h * h)


def newton_polish_1d(
    score: Callable[[float], Score],
    x: float,
    fx: float,
    domain: Tuple[float, float],
    *,
    tol: float,
) -> Tuple[float, float, int]:
    lo, hi = domain
    steps = 0
    for _ in range(MAX_STEPS):
        h = _step_size(x, lo, hi)
        if not (lo < x - 2 * h and x + 2 * h < hi):
            break
        stencil = [score(x + k * h) for k in (-2, -1, 1, 2)]
        if any(v is None for v in stencil):
            break
        f_m2, f_m1, f_p1, f_p2 = stencil

        gradient = (8.0 * (f_p1 - f_m1) - (f_p2 - f_m2)) / (12.0 * h)
        curvature = (f_p1 - 2.0 * fx + f_m1) / (h * h)
        if not curvature < 0.0:
            break
        step = -gradient / curvature
        if abs(step) > 4 * h:
            break

        candidate = score(x + step)
        if not _accepts(candidate, fx):
            break
        x, fx = x + step, candidate
        steps += 1
        if abs(step) <= tol:
            break

    logger.debug("1-D polish: %d steps, x=%.17g", steps, x)
    return x, fx, steps


def newton_polish_2d(
    score: Callable[[float, float], Score],
    x: Sequence[float],
    fx: float,
    domain: Tuple[Tuple[float, float], Tuple[float, float]],
    *,
    tol: float,
) -> Tuple[np.ndarray, float, int]:
    point = np.array(x, dtype=float)
    steps = 0

    def at(dx: float, dy: float) -> Score:
        return score(point[0] + dx, point[1] + dy)

    for _ in range(MAX_STEPS):
        h = np.array([_step_size(point[i], *domain[i]) for i in range(2)])
        inside = all(
            domain[i][0] < point[i] - 2 * h[i] and point[i] + 2 * h[i] < domain[i][1]
            for i in range(2)
        )
        if not inside:
            break

        hx, hy = h
        axis_x = [at(k * hx, 0.0) for k in (-2, -1, 1, 2)]
        axis_y = [at(0.0, k * hy) for k in (-2, -1, 1, 2)]
        signs = ((1, 1), (1, -1), (-1, 1), (-1, -1))
        corners = [at(sx * hx, sy * hy) for sx, sy in signs]
        if any(v is None for v in (*axis_x, *axis_y, *corners)):
            break

        gradient = np.array(
            [
                (8.0 * (axis_x[2] - axis_x[1]) - (axis_x[3] - axis_x[0])) / (12.0 * hx),
                (8.0 * (axis_y[2] - axis_y[1]) - (axis_y[3] - axis_y[0])) / (12.0 * hy),
            ]
        )
        f_pp, f_pm, f_mp, f_mm = corners
        hessian = np.array(
            [
                [(axis_x[2] - 2.0 * fx + axis_x[1]) / hx**2, 0.0],
                [0.0, (axis_y[2] - 2.0 * fx + axis_y[1]) / hy**2],
            ]
        )
        hessian[0, 1] = hessian[1, 0] = (f_pp - f_pm - f_mp + f_mm) / (4.0 * hx * hy)

        # negative definite or no step
        if not (hessian[0, 0] < 0.0 and np.linalg.det(hessian) > 0.0):
            break
        step = -np.linalg.solve(hessian, gradient)
        if np.any(np.abs(step) > 16 * h):
            break

        candidate = at(step[0], step[1])
        if not _accepts(candidate, fx):
            break
        point, fx = point + step, candidate
        steps += 1
        if np.all(np.abs(step) <= tol):
            break

    logger.debug("2-D polish: %d steps, x=(%.17g, %.17g)", steps, point[0], point[1])
    return point, fx, steps

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np

from otto_omega.errors import DomainError, require_finite

logger = logging.getLogger(__name__)

MAX_ORDER = 4
CONDITION_LIMIT = 1e8


@dataclass(frozen=True)
class SeriesFit:
    """
    Polynomial coefficients of f near zero, lowest order first.

    `coefficients[0]` is the limit f(0) supplied by the caller, not a fitted
    value. `residual` is the largest absolute misfit over the samples.
    """

    sample_points: Tuple[float, ...]
    coefficients: Tuple[float, ...]
    residual: float
    condition: float
    ill_conditioned: bool


def chebyshev_points(scale: float, count: int) -> np.ndarray:
    """Chebyshev nodes of the first kind mapped into (0, scale)."""
    k = np.arange(count)
    return scale * 0.5 * (1.0 - np.cos((2 * k + 1) * math.pi / (2 * count)))


def fit_series(
    f: Callable[[float], float],
    order: int,
    scale: float,
    *,
    limit: float = 0.0,
    samples: int = 32,
) -> SeriesFit:
    """
    Least-squares fit of f(x) - limit by c1 x + ... + c_order x^order on (0, scale].

    The fit runs in the scaled variable x/scale so the design matrix stays
    well conditioned; coefficients are rescaled afterwards.
    """
    if not 1 <= order <= MAX_ORDER:
        raise DomainError(f"series order must lie in [1, {MAX_ORDER}]")
    if not scale > 0:
        raise DomainError("series scale must be positive")
    if samples <= order:
        raise DomainError("need more samples than fitted coefficients")

    points = chebyshev_points(scale, samples)
    targets = np.array(
        [require_finite(float(f(x)), "series sample", x=float(x)) for x in points]
    )
    targets = targets - limit

    design = np.vander(points / scale, order + 1, increasing=True)[:, 1:]
    scaled, *_ = np.linalg.lstsq(design, targets, rcond=None)
    condition = float(np.linalg.cond(design))
    residual = float(np.max(np.abs(design @ scaled - targets)))

    ill_conditioned = condition > CONDITION_LIMIT
    if ill_conditioned:
        logger.warning("series fit is ill-conditioned (cond=%.3g)", condition)

    coefficients = (limit,) + tuple(
        float(c) / scale**power for power, c in enumerate(scaled, start=1)
    )
    return SeriesFit(
        sample_points=tuple(float(x) for x in points),
        coefficients=coefficients,
        residual=residual,
        condition=condition,
        ill_conditioned=ill_conditioned,
    )

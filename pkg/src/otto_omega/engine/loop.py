from __future__ import annotations

import logging
import math

import numpy as np

from otto_omega.domain.models import LoopCurve, LoopPoint
from otto_omega.engine import closed_forms as cf
from otto_omega.errors import DomainError
from otto_omega.oracle import ScalarProblem1D, maximize_1d

logger = logging.getLogger(__name__)


def _point(kind: str, z: float, tau: float, beta_hot: float) -> LoopPoint:
    return LoopPoint(
        kind=kind,
        z=float(z),
        efficiency=float(cf.eta_ss(z, tau)),
        work=float(cf.work_ss(z, tau, beta_hot)),
    )


def _argmax(objective, tau: float, name: str) -> float:
    problem = ScalarProblem1D(
        objective=objective, domain=(math.sqrt(tau), 1.0), name=name
    )
    return maximize_1d(problem).x


def loop_curve(tau: float, beta_hot: float = 1.0, n_points: int = 500) -> LoopCurve:
    """
    Parametric (efficiency, work) trace of the sudden-switch engine for z from
    sqrt(tau) to 1. Both ends sit at (0, 0), so the trace is a closed loop.

    The maximum-work, maximum-efficiency and maximum-Omega points are located
    by the numeric oracle, not read off the sample grid.
    """
    if not 0.0 < tau < 1.0:
        raise DomainError("tau must lie in (0, 1)")
    if n_points < 3:
        raise DomainError("a loop needs at least 3 points")
    if not beta_hot > 0.0:
        raise DomainError("beta_hot must be positive")

    zs = np.linspace(math.sqrt(tau), 1.0, n_points)
    efficiencies = np.asarray(cf.eta_ss(zs, tau))
    works = np.asarray(cf.work_ss(zs, tau, beta_hot))
    samples = [
        LoopPoint(z=float(z), efficiency=float(e), work=float(w))
        for z, e, w in zip(zs, efficiencies, works)
    ]

    z_work = _argmax(lambda z: cf.work_ss(z, tau, beta_hot), tau, "loop max work")
    z_eta = _argmax(lambda z: cf.eta_ss(z, tau), tau, "loop max efficiency")
    z_mof = _argmax(lambda z: cf.omega_ss(z, tau, beta_hot), tau, "loop max omega")
    logger.debug(
        "loop at tau=%g: z_eta=%.12g z_mof=%.12g z_work=%.12g",
        tau,
        z_eta,
        z_mof,
        z_work,
    )

    return LoopCurve(
        tau=tau,
        beta_hot=beta_hot,
        samples=samples,
        max_work=_point("max_work", z_work, tau, beta_hot),
        max_efficiency=_point("max_efficiency", z_eta, tau, beta_hot),
        mof=_point("mof", z_mof, tau, beta_hot),
    )

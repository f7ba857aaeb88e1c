"""
Closed-form refrigerator results. Functions broadcast over numpy arrays;
`zeta_c` is the Carnot COP tau / (1 - tau).
"""

from __future__ import annotations

from typing import NamedTuple, Tuple

import numpy as np
from numpy.typing import ArrayLike

from otto_omega.errors import DomainError, InfeasibleError

Real = float | np.ndarray

# z^2 may overshoot 2 tau - 1 by rounding when z is taken from the boundary
BOUNDARY_SLACK = 1e-12

SS_FRIDGE_RULE = "sudden-switch refrigerator needs tau > 1/2 (zeta_c > 1)"


def _unwrap(values: ArrayLike) -> Real:
    values = np.asarray(values, dtype=float)
    return float(values) if values.ndim == 0 else values


def _positive(name: str, values: ArrayLike) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    if not np.all(values > 0.0):
        raise DomainError(f"{name} must be positive")
    return values


def _open_unit(name: str, values: ArrayLike) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    if not np.all((values > 0.0) & (values < 1.0)):
        raise DomainError(f"{name} must lie in (0, 1)")
    return values


def tau_from_zeta(zeta_c: ArrayLike) -> Real:
    zeta = np.asarray(zeta_c, dtype=float)
    return _unwrap(zeta / (1.0 + zeta))


# ----- adiabatic drive -----


def cop_adiabatic(z: ArrayLike) -> Real:
    """z / (1 - z); diverges as z -> 1."""
    z = np.asarray(z, dtype=float)
    if not np.all((z > 0.0) & (z < 1.0)):
        raise DomainError("z must lie in (0, 1); the COP diverges at z = 1")
    return _unwrap(z / (1.0 - z))


def omega_fridge(q_cold: ArrayLike, work_in: ArrayLike, zeta_max: ArrayLike) -> Real:
    """Omega = 2 Q4 - zeta_max W_in."""
    return _unwrap(
        2.0 * np.asarray(q_cold) - np.asarray(zeta_max) * np.asarray(work_in)
    )


def omega_high_t(z: ArrayLike, tau: ArrayLike, beta_hot: ArrayLike = 1.0) -> Real:
    """(z - tau)[tau - z (2 - tau)] / (beta_hot z (1 - tau))."""
    z = _positive("z", z)
    tau = np.asarray(tau, dtype=float)
    return _unwrap(
        (z - tau) * (tau - z * (2.0 - tau)) / (np.asarray(beta_hot) * z * (1.0 - tau))
    )


def cop_mof_high_t_control(tau: ArrayLike) -> Real:
    """z* = tau / sqrt(2 - tau)."""
    tau = np.asarray(tau, dtype=float)
    return _unwrap(tau / np.sqrt(2.0 - tau))


def cop_mof_high(zeta_c: ArrayLike) -> Real:
    """
    zeta_c / (sqrt((1 + zeta_c)(2 + zeta_c)) - zeta_c), with the denominator
    rationalised to (3 zeta_c + 2) / (sqrt(...) + zeta_c).
    """
    zeta = np.asarray(zeta_c, dtype=float)
    if not np.all(zeta >= 0.0):
        raise DomainError("zeta_c must be non-negative")
    root = np.sqrt((1.0 + zeta) * (2.0 + zeta))
    return _unwrap(zeta * (root + zeta) / (3.0 * zeta + 2.0))


def cop_chi_high(zeta_c: ArrayLike) -> Real:
    """sqrt(1 + zeta_c) - 1, the COP at maximum chi-function."""
    zeta = np.asarray(zeta_c, dtype=float)
    if not np.all(zeta >= 0.0):
        raise DomainError("zeta_c must be non-negative")
    return _unwrap(zeta / (np.sqrt(1.0 + zeta) + 1.0))


def _low_t_exponents(zeta: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    # a = b1 w1*, b = b2 w2*; k = ln((1 + zeta)/(2 + zeta)) < 0
    k = -np.log1p(1.0 / (1.0 + zeta))
    a = 1.0 - (1.0 + zeta) * k
    return a, a - k


def cop_mof_low_t_controls(
    zeta_c: ArrayLike, beta_hot: ArrayLike = 1.0
) -> Tuple[Real, Real]:
    """w1* = [1 - (1 + zeta_c) k] / b1, w2* = [1 - (2 + zeta_c) k] / b2."""
    zeta = _positive("zeta_c", zeta_c)
    a, b = _low_t_exponents(zeta)
    tau = zeta / (1.0 + zeta)
    return _unwrap(a * tau / beta_hot), _unwrap(b / beta_hot)


def cop_mof_low(zeta_c: ArrayLike) -> Real:
    """zeta_c [1 - (1 + zeta_c) k] / [1 - 2 (1 + zeta_c) k]."""
    zeta = np.asarray(zeta_c, dtype=float)
    if not np.all(zeta >= 0.0):
        raise DomainError("zeta_c must be non-negative")
    k = -np.log1p(1.0 / (1.0 + zeta))
    spread = (1.0 + zeta) * k
    return _unwrap(zeta * (1.0 - spread) / (1.0 - 2.0 * spread))


def max_omega_fridge_low(zeta_c: ArrayLike, beta_hot: ArrayLike = 1.0) -> Real:
    """Omega* = exp(-b1 w1*) / (b1 (2 + zeta_c))."""
    zeta = _positive("zeta_c", zeta_c)
    a, _ = _low_t_exponents(zeta)
    beta_cold = np.asarray(beta_hot) * (1.0 + zeta) / zeta
    return _unwrap(np.exp(-a) / (beta_cold * (2.0 + zeta)))


def cooling_low_t(
    omega_1: ArrayLike, omega_2: ArrayLike, beta_cold: ArrayLike, beta_hot: ArrayLike
) -> Real:
    """Q4 = w1 (exp(-b1 w1) - exp(-b2 w2)); valid for b_i w_i >> 1."""
    omega_1 = np.asarray(omega_1, dtype=float)
    gap = np.exp(-np.asarray(beta_cold) * omega_1) - np.exp(
        -np.asarray(beta_hot) * np.asarray(omega_2, dtype=float)
    )
    return _unwrap(omega_1 * gap)


# ----- sudden switch, high temperature -----


class SuddenSwitchFridge(NamedTuple):
    q_cold: Real
    work_in: Real
    cop: Real


def fridge_ss_quantities(
    z: ArrayLike, tau: ArrayLike, beta_hot: ArrayLike = 1.0
) -> SuddenSwitchFridge:
    """
    (Q4, W_in, zeta_ss) of the sudden-switch refrigerator.

    Raises InfeasibleError for tau <= 1/2 and for any z with Q4 <= 0,
    i.e. z^2 >= 2 tau - 1. At the cooling boundary itself Q4 = zeta_ss = 0.
    """
    z = np.asarray(z, dtype=float)
    tau = np.asarray(tau, dtype=float)
    if not np.all(tau > 0.5):
        raise InfeasibleError(SS_FRIDGE_RULE)
    if not np.all((z > 0.0) & (z < 1.0)):
        raise DomainError("z must lie in (0, 1)")
    u = z**2
    if not np.all(u <= 2.0 * tau - 1.0 + BOUNDARY_SLACK):
        raise InfeasibleError("no cooling: z^2 must stay below 2 tau - 1")
    beta_hot = np.asarray(beta_hot, dtype=float)
    q_cold = (tau - 0.5 * (u + 1.0)) / beta_hot
    work_in = (u - 1.0) * (u - tau) / (2.0 * beta_hot * u)
    cop = u * (2.0 * tau - u - 1.0) / ((u - 1.0) * (u - tau))
    return SuddenSwitchFridge(_unwrap(q_cold), _unwrap(work_in), _unwrap(cop))


def cop_max_ss(zeta_c: ArrayLike) -> Real:
    """
    1 + 3 zeta_c - 2 sqrt(2 zeta_c (1 + zeta_c)), evaluated as
    (zeta_c - 1)^2 / (1 + 3 zeta_c + 2 sqrt(...)).

    Only zeta_c > 1 describes a working refrigerator. Below that the value is
    returned with a negative sign, so a non-positive result marks the
    infeasible side of the wall at zeta_c = 1.
    """
    zeta = _positive("zeta_c", zeta_c)
    root = np.sqrt(2.0 * zeta * (1.0 + zeta))
    closed = (zeta - 1.0) ** 2 / (1.0 + 3.0 * zeta + 2.0 * root)
    return _unwrap(np.where(zeta < 1.0, -closed, closed))


def cop_max_ss_in_tau(tau: ArrayLike) -> Real:
    """
    cop_max_ss written in tau: (sqrt(2 tau) - 1)^2 / (1 - tau), carrying the
    sign of sqrt(2 tau) - 1.
    """
    tau = _open_unit("tau", tau)
    root = np.sqrt(2.0 * tau)
    return _unwrap(np.sign(root - 1.0) * (root - 1.0) ** 2 / (1.0 - tau))


def cop_mof_ss_control_squared(tau: ArrayLike) -> Real:
    """
    A = z*^2 with z*^4 = tau zeta_max / (2 + zeta_max), from dOmega/dz = 0.
    """
    tau = np.asarray(tau, dtype=float)
    if not np.all((tau > 0.5) & (tau < 1.0)):
        raise InfeasibleError(SS_FRIDGE_RULE)
    zeta_max = np.asarray(cop_max_ss_in_tau(tau))
    return _unwrap(np.sqrt(tau * zeta_max / (2.0 + zeta_max)))


def cop_mof_ss(zeta_c: ArrayLike) -> Real:
    """
    COP at maximum sudden-switch Omega,

        A [1 - zeta_c + A (1 + zeta_c)] / ((A - 1)[zeta_c - A (1 + zeta_c)]),

    with A the optimal z^2.
    """
    zeta = np.asarray(zeta_c, dtype=float)
    if not np.all(zeta > 1.0):
        raise InfeasibleError(SS_FRIDGE_RULE)
    a = np.asarray(cop_mof_ss_control_squared(zeta / (1.0 + zeta)))
    return _unwrap(
        a * (1.0 - zeta + a * (1.0 + zeta)) / ((a - 1.0) * (zeta - a * (1.0 + zeta)))
    )


def omega_fridge_ss(z: ArrayLike, tau: ArrayLike, beta_hot: ArrayLike = 1.0) -> Real:
    """2 Q4 - zeta_max W_in for the sudden switch; defined wherever z < 1."""
    u = np.asarray(z, dtype=float) ** 2
    tau = np.asarray(tau, dtype=float)
    beta_hot = np.asarray(beta_hot, dtype=float)
    zeta_max = np.asarray(cop_max_ss_in_tau(tau))
    q_cold = (tau - 0.5 * (u + 1.0)) / beta_hot
    work_in = (u - 1.0) * (u - tau) / (2.0 * beta_hot * u)
    return omega_fridge(q_cold, work_in, zeta_max)


# ----- cooling power at maximum Omega -----


def cooling_power_ad_high(tau: ArrayLike, beta_hot: ArrayLike = 1.0) -> Real:
    """(tau - tau / sqrt(2 - tau)) / beta_hot."""
    tau = _open_unit("tau", tau)
    return _unwrap((tau - tau / np.sqrt(2.0 - tau)) / beta_hot)


def cooling_power_ad_low(tau: ArrayLike, beta_hot: ArrayLike = 1.0) -> Real:
    """
    (1/(2 - tau))^(1/(1 - tau)) [1 - tau - ln(1/(2 - tau))] tau
    / (e beta_hot (2 - tau)).
    """
    tau = _open_unit("tau", tau)
    log_2_minus_tau = np.log1p(1.0 - tau)
    power = np.exp(-log_2_minus_tau / (1.0 - tau) - 1.0)
    return _unwrap(
        power * (1.0 - tau + log_2_minus_tau) * tau / (beta_hot * (2.0 - tau))
    )


def cooling_power_ss(tau: ArrayLike, beta_hot: ArrayLike = 1.0) -> Real:
    """
    (2 tau - A - 1) / (2 beta_hot) with
    A = sqrt(tau (2 tau - 2 sqrt(2 tau) + 1) / (3 - 2 sqrt(2 tau))).
    """
    tau = np.asarray(tau, dtype=float)
    if not np.all((tau > 0.5) & (tau < 1.0)):
        raise InfeasibleError(SS_FRIDGE_RULE)
    root = np.sqrt(2.0 * tau)
    a = np.sqrt(tau * (2.0 * tau - 2.0 * root + 1.0) / (3.0 - 2.0 * root))
    return _unwrap((2.0 * tau - a - 1.0) / (2.0 * beta_hot))

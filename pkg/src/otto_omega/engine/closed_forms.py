"""
Closed-form engine results in the high- and low-temperature limits.

Every function broadcasts over numpy arrays. `eta_c` is the Carnot efficiency
1 - tau and energies carry the scale 1/beta_hot. Forms that are 0/0 at
eta_c = 0 switch to their Taylor series below SERIES_BELOW.
"""

from __future__ import annotations

from typing import NamedTuple, Tuple

import numpy as np
from numpy.typing import ArrayLike
from scipy.special import xlogy

from otto_omega.errors import DomainError

SERIES_BELOW = 1e-6

Real = float | np.ndarray


def _unwrap(values: ArrayLike) -> Real:
    values = np.asarray(values, dtype=float)
    return float(values) if values.ndim == 0 else values


def _closed_unit(name: str, values: ArrayLike) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    if not np.all((values >= 0.0) & (values <= 1.0)):
        raise DomainError(f"{name} must lie in [0, 1]")
    return values


def _open_unit(name: str, values: ArrayLike) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    if not np.all((values > 0.0) & (values < 1.0)):
        raise DomainError(f"{name} must lie in (0, 1)")
    return values


def _ratio(name: str, z: ArrayLike) -> np.ndarray:
    z = np.asarray(z, dtype=float)
    if not np.all((z > 0.0) & (z <= 1.0)):
        raise DomainError(f"{name} must lie in (0, 1]")
    return z


# ----- adiabatic drive, high temperature -----


def omega_engine(work: ArrayLike, q_hot: ArrayLike, eta_max: ArrayLike) -> Real:
    """Omega = 2 W - eta_max Q2."""
    return _unwrap(2.0 * np.asarray(work) - np.asarray(eta_max) * np.asarray(q_hot))


def work_high_t(z: ArrayLike, tau: ArrayLike, beta_hot: ArrayLike = 1.0) -> Real:
    z = _ratio("z", z)
    return _unwrap((z - tau) * (1.0 - z) / (np.asarray(beta_hot) * z))


def omega_high_t(z: ArrayLike, tau: ArrayLike, beta_hot: ArrayLike = 1.0) -> Real:
    """(z - tau)(1 + tau - 2z) / (beta_hot z)."""
    z = _ratio("z", z)
    return _unwrap((z - tau) * (1.0 + tau - 2.0 * z) / (np.asarray(beta_hot) * z))


def emof_high_t_control(tau: ArrayLike) -> Real:
    tau = np.asarray(tau, dtype=float)
    return _unwrap(np.sqrt(0.5 * tau * (1.0 + tau)))


def eta_omega_high(eta_c: ArrayLike) -> Real:
    """
    1 - sqrt((1 - eta_c)(2 - eta_c)/2), written as (1 - x)/(1 + sqrt(x)) to
    keep full relative precision near eta_c = 0.
    """
    eta = _closed_unit("eta_c", eta_c)
    root = np.sqrt((1.0 - eta) * (1.0 - 0.5 * eta))
    return _unwrap(0.5 * eta * (3.0 - eta) / (1.0 + root))


def eta_curzon_ahlborn(eta_c: ArrayLike) -> Real:
    """1 - sqrt(1 - eta_c); the efficiency at maximum high-temperature work."""
    eta = _closed_unit("eta_c", eta_c)
    return _unwrap(eta / (1.0 + np.sqrt(1.0 - eta)))


# ----- adiabatic drive, low temperature -----


def work_low_t(
    omega_1: ArrayLike, omega_2: ArrayLike, beta_cold: ArrayLike, beta_hot: ArrayLike
) -> Real:
    """W = (w2 - w1)(exp(-b2 w2) - exp(-b1 w1)); valid for b_i w_i >> 1."""
    omega_1 = np.asarray(omega_1, dtype=float)
    omega_2 = np.asarray(omega_2, dtype=float)
    gap = np.exp(-np.asarray(beta_hot) * omega_2) - np.exp(
        -np.asarray(beta_cold) * omega_1
    )
    return _unwrap((omega_2 - omega_1) * gap)


def max_work_low_t_controls(
    eta_c: ArrayLike, beta_hot: ArrayLike = 1.0
) -> Tuple[Real, Real]:
    """(w1*, w2*) maximising the low-temperature work."""
    eta = _open_unit("eta_c", eta_c)
    with np.errstate(all="ignore"):
        log_tau = np.log1p(-eta)
        w1 = (1.0 - eta) * (eta - log_tau) / eta
        w2 = (eta - xlogy(1.0 - eta, 1.0 - eta)) / eta
    small = eta < SERIES_BELOW
    w1 = np.where(small, 2.0 - 1.5 * eta - eta**2 / 6.0, w1)
    w2 = np.where(small, 2.0 - 0.5 * eta - eta**2 / 6.0, w2)
    return _unwrap(w1 / beta_hot), _unwrap(w2 / beta_hot)


def eta_work_low(eta_c: ArrayLike) -> Real:
    """eta_c^2 / (eta_c - (1 - eta_c) ln(1 - eta_c))."""
    eta = _closed_unit("eta_c", eta_c)
    with np.errstate(all="ignore"):
        closed = eta**2 / (eta - xlogy(1.0 - eta, 1.0 - eta))
    series = eta / 2.0 + eta**2 / 8.0 + 7.0 * eta**3 / 96.0
    return _unwrap(np.where(eta < SERIES_BELOW, series, closed))


def max_work_low(eta_c: ArrayLike, beta_hot: ArrayLike = 1.0) -> Real:
    """W* = eta_c^2 (1 - eta_c)^((1 - eta_c)/eta_c) / (beta_hot e)."""
    eta = _open_unit("eta_c", eta_c)
    with np.errstate(all="ignore"):
        closed = eta**2 * np.exp(xlogy(1.0 - eta, 1.0 - eta) / eta - 1.0)
    series = eta**2 * (1.0 + 0.5 * eta + 7.0 * eta**2 / 24.0) * np.exp(-2.0)
    return _unwrap(np.where(eta < SERIES_BELOW, series, closed) / beta_hot)


def _omega_low_exponents(eta: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Optimal Boltzmann exponents a = b1 w1 and b = b2 w2 of the low-temperature
    Omega problem. a - b = k = ln((2 - eta) / (2 (1 - eta))).
    """
    with np.errstate(all="ignore"):
        k = np.log1p(eta / (2.0 * (1.0 - eta)))
        b = 1.0 + 2.0 * (1.0 - eta) * k / eta
        a = b + k
    small = eta < SERIES_BELOW
    a = np.where(small, 2.0 + eta / 4.0 + 5.0 * eta**2 / 24.0, a)
    b = np.where(small, 2.0 - eta / 4.0 - eta**2 / 6.0, b)
    return a, b


def omega_low_t_controls(
    eta_c: ArrayLike, beta_hot: ArrayLike = 1.0
) -> Tuple[Real, Real]:
    """(w1, w2) at maximum low-temperature Omega."""
    eta = _open_unit("eta_c", eta_c)
    a, b = _omega_low_exponents(eta)
    tau = 1.0 - eta
    return _unwrap(a * tau / beta_hot), _unwrap(b / beta_hot)


def eta_omega_low(eta_c: ArrayLike) -> Real:
    """eta_c (eta_c + (1 - eta_c) k) / (eta_c + 2 (1 - eta_c) k)."""
    eta = _closed_unit("eta_c", eta_c)
    with np.errstate(all="ignore"):
        k = np.log1p(eta / (2.0 * (1.0 - eta)))
        spread = (1.0 - eta) * k
        closed = eta * (eta + spread) / (eta + 2.0 * spread)
    series = 0.75 * eta + eta**2 / 32.0 + 19.0 * eta**3 / 768.0
    out = np.where(eta < SERIES_BELOW, series, closed)
    return _unwrap(np.where(eta >= 1.0, 1.0, out))


def max_omega_low(eta_c: ArrayLike, beta_hot: ArrayLike = 1.0) -> Real:
    """Omega* = eta_c^2 exp(-b) / ((2 - eta_c) beta_hot)."""
    eta = _open_unit("eta_c", eta_c)
    _, b = _omega_low_exponents(eta)
    return _unwrap(eta**2 * np.exp(-b) / ((2.0 - eta) * beta_hot))


# ----- sudden switch, high temperature -----


def eta_ss(z: ArrayLike, tau: ArrayLike) -> Real:
    """(z^2 - 1)(z^2 - tau) / (tau + (tau - 2) z^2)."""
    u = _ratio("z", z) ** 2
    tau = np.asarray(tau, dtype=float)
    with np.errstate(all="ignore"):
        return _unwrap((u - 1.0) * (u - tau) / (tau + (tau - 2.0) * u))


def work_ss(z: ArrayLike, tau: ArrayLike, beta_hot: ArrayLike = 1.0) -> Real:
    """(1 - z^2)(z^2 - tau) / (2 z^2 beta_hot); positive iff z > sqrt(tau)."""
    u = _ratio("z", z) ** 2
    return _unwrap((1.0 - u) * (u - tau) / (2.0 * u * np.asarray(beta_hot)))


def heat_hot_ss(z: ArrayLike, tau: ArrayLike, beta_hot: ArrayLike = 1.0) -> Real:
    u = _ratio("z", z) ** 2
    tau = np.asarray(tau, dtype=float)
    return _unwrap(((2.0 - tau) * u - tau) / (2.0 * u * np.asarray(beta_hot)))


def omega_ss(z: ArrayLike, tau: ArrayLike, beta_hot: ArrayLike = 1.0) -> Real:
    """Sudden-switch Omega with eta_max from `eta_max_ss`."""
    tau = np.asarray(tau, dtype=float)
    eta_max = eta_max_ss(1.0 - tau)
    work = work_ss(z, tau, beta_hot)
    return omega_engine(work, heat_hot_ss(z, tau, beta_hot), eta_max)


def eta_max_ss(eta_c: ArrayLike) -> Real:
    """
    Largest sudden-switch efficiency,

        eta_c [3 - eta_c - 2 sqrt(2(1 - eta_c))] / (1 + eta_c)^2.

    The bracket equals (1 + eta_c)^2 / (3 - eta_c + 2 sqrt(2(1 - eta_c))), which
    gives the cancellation-free form used here. Never exceeds 1/2.
    """
    eta = _closed_unit("eta_c", eta_c)
    return _unwrap(eta / (3.0 - eta + 2.0 * np.sqrt(2.0 * (1.0 - eta))))


def max_efficiency_ss_control(tau: ArrayLike) -> Real:
    """z at maximum sudden-switch efficiency.

    z^2 = [tau + (1 - tau) sqrt(2 tau)] / (2 - tau).
    """
    tau = np.asarray(tau, dtype=float)
    return _unwrap(np.sqrt((tau + (1.0 - tau) * np.sqrt(2.0 * tau)) / (2.0 - tau)))


def max_work_ss_control(tau: ArrayLike) -> Real:
    """z at maximum sudden-switch work: z^2 = sqrt(tau)."""
    return _unwrap(np.asarray(tau, dtype=float) ** 0.25)


def emof_ss_control(tau: ArrayLike) -> Real:
    """z at maximum sudden-switch Omega: z^4 = tau (2 - eta_max) / 2."""
    tau = np.asarray(tau, dtype=float)
    eta_max = eta_max_ss(1.0 - tau)
    return _unwrap((0.5 * tau * (2.0 - eta_max)) ** 0.25)


def _eta_omega_ss_stationary(eta: np.ndarray) -> np.ndarray:
    # eta_ss at the stationary point, with d = 1 - z^2 taken without cancellation
    eta_max = eta / (3.0 - eta + 2.0 * np.sqrt(2.0 * (1.0 - eta)))
    one_minus_u2 = eta + 0.5 * eta_max - 0.5 * eta * eta_max
    d = one_minus_u2 / (1.0 + np.sqrt(1.0 - one_minus_u2))
    with np.errstate(all="ignore"):
        return d * (eta - d) / (2.0 * eta - d * (1.0 + eta))


def eta_omega_ss(eta_c: ArrayLike) -> Real:
    """
    Efficiency at maximum sudden-switch Omega,

        (2 + 2 eta_c - A)(2 - 2 eta_c^2 - A) / (2 (1 + eta_c)^2 (2 - 2 eta_c - A)),
        A = sqrt(2 (1 - eta_c)(2 + eta_c + 2 eta_c sqrt(2 (1 - eta_c)) + 3 eta_c^2)).

    The closed form is 0/0 at both ends; below SERIES_BELOW the efficiency is
    taken at the stationary point directly, and eta_c = 1 gives 1/2.
    """
    eta = _closed_unit("eta_c", eta_c)
    with np.errstate(all="ignore"):
        a = np.sqrt(
            2.0
            * (1.0 - eta)
            * (2.0 + eta + 2.0 * eta * np.sqrt(2.0 * (1.0 - eta)) + 3.0 * eta**2)
        )
        closed = (
            (2.0 + 2.0 * eta - a)
            * (2.0 - 2.0 * eta**2 - a)
            / (2.0 * (1.0 + eta) ** 2 * (2.0 - 2.0 * eta - a))
        )
        near_zero = _eta_omega_ss_stationary(eta)
    out = np.where(eta < SERIES_BELOW, np.where(eta > 0.0, near_zero, 0.0), closed)
    return _unwrap(np.where(eta >= 1.0, 0.5, out))


def eta_work_ss(eta_c: ArrayLike) -> Real:
    """(1 - sqrt(1 - eta_c)) / (2 + sqrt(1 - eta_c))."""
    eta = _closed_unit("eta_c", eta_c)
    root = np.sqrt(1.0 - eta)
    return _unwrap(eta / ((1.0 + root) * (2.0 + root)))


class ReferenceEfficiencies(NamedTuple):
    curzon_ahlborn: Real
    work_low: Real
    work_ss: Real


def reference_efficiencies(eta_c: ArrayLike) -> ReferenceEfficiencies:
    """Efficiencies at maximum work for the three families."""
    return ReferenceEfficiencies(
        curzon_ahlborn=eta_curzon_ahlborn(eta_c),
        work_low=eta_work_low(eta_c),
        work_ss=eta_work_ss(eta_c),
    )

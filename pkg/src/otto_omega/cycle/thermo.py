"""
Vectorised thermal kernel of the harmonic Otto cycle.

Everything here accepts scalars or numpy arrays and broadcasts, so the same
code serves single cycle reports and whole oracle grids. Heats are assembled
from the excess factor coth(x/2) - 1 rather than from coth itself, which keeps
the low-temperature differences free of the leading 1 + ... cancellation.
"""

from __future__ import annotations

from typing import Tuple

import numpy as np
from numpy.typing import ArrayLike

from otto_omega.domain.models import DriveProtocol, Regime

# below this argument coth(x/2) is taken from its Laurent series
SERIES_CUTOFF = 1e-4


def _unwrap(values: np.ndarray) -> float | np.ndarray:
    return float(values) if values.ndim == 0 else values


def coth_half(x: ArrayLike, regime: Regime | str = Regime.EXACT) -> float | np.ndarray:
    """
    coth(x/2) for x > 0, or its high/low temperature approximation.

    The exact branch uses 1 + 2/expm1(x), which saturates to 1 instead of
    overflowing for large x.
    """
    regime = Regime(regime)
    x = np.asarray(x, dtype=float)
    with np.errstate(over="ignore", divide="ignore"):
        if regime is Regime.HIGH_T:
            out = 2.0 / x
        elif regime is Regime.LOW_T:
            out = 1.0 + 2.0 * np.exp(-x)
        else:
            series = 2.0 / x + x / 6.0 - x**3 / 360.0
            out = np.where(x < SERIES_CUTOFF, series, 1.0 + 2.0 / np.expm1(x))
    return _unwrap(np.asarray(out))


def thermal_excess(
    x: ArrayLike, regime: Regime | str = Regime.EXACT
) -> float | np.ndarray:
    """coth(x/2) - 1, i.e. twice the Bose occupation in the exact regime."""
    regime = Regime(regime)
    x = np.asarray(x, dtype=float)
    with np.errstate(over="ignore", divide="ignore"):
        if regime is Regime.HIGH_T:
            out = 2.0 / x - 1.0
        elif regime is Regime.LOW_T:
            out = 2.0 * np.exp(-x)
        else:
            series = 2.0 / x - 1.0 + x / 6.0 - x**3 / 360.0
            out = np.where(x < SERIES_CUTOFF, series, 2.0 / np.expm1(x))
    return _unwrap(np.asarray(out))


def adiabaticity_parameter(
    omega_1: ArrayLike, omega_2: ArrayLike, protocol: DriveProtocol | str
) -> float | np.ndarray:
    """lambda: 1 for adiabatic driving, (w1^2 + w2^2) / (2 w1 w2) for a quench."""
    return _unwrap(np.asarray(1.0 + friction_excess(omega_1, omega_2, protocol)))


def friction_excess(
    omega_1: ArrayLike, omega_2: ArrayLike, protocol: DriveProtocol | str
) -> float | np.ndarray:
    """lambda - 1, computed as (w2 - w1)^2 / (2 w1 w2) to stay exact near w1 = w2."""
    omega_1 = np.asarray(omega_1, dtype=float)
    omega_2 = np.asarray(omega_2, dtype=float)
    if DriveProtocol(protocol) is DriveProtocol.ADIABATIC:
        out = np.zeros(np.broadcast(omega_1, omega_2).shape)
    else:
        out = (omega_2 - omega_1) ** 2 / (2.0 * omega_1 * omega_2)
    return _unwrap(np.asarray(out))


def heat_flows(
    beta_cold: ArrayLike,
    beta_hot: ArrayLike,
    omega_1: ArrayLike,
    omega_2: ArrayLike,
    protocol: DriveProtocol | str,
    regime: Regime | str = Regime.EXACT,
) -> Tuple[float | np.ndarray, float | np.ndarray]:
    """
    Mean heats (Q2, Q4) exchanged with the hot and cold reservoirs.

        Q2 = (w2/2) [coth(b2 w2/2) - lambda coth(b1 w1/2)]
        Q4 = (w1/2) [coth(b1 w1/2) - lambda coth(b2 w2/2)]
    """
    omega_1 = np.asarray(omega_1, dtype=float)
    omega_2 = np.asarray(omega_2, dtype=float)
    x_cold = np.asarray(beta_cold, dtype=float) * omega_1
    x_hot = np.asarray(beta_hot, dtype=float) * omega_2

    if Regime(regime) is Regime.HIGH_T:
        # differences of 2/x directly; the -1 offsets cancel exactly
        with np.errstate(divide="ignore"):
            spread = 2.0 / x_hot - 2.0 / x_cold
    else:
        spread = np.asarray(thermal_excess(x_hot, regime)) - np.asarray(
            thermal_excess(x_cold, regime)
        )
    friction = np.asarray(friction_excess(omega_1, omega_2, protocol))
    coth_cold = np.asarray(coth_half(x_cold, regime))
    coth_hot = np.asarray(coth_half(x_hot, regime))

    q_hot = 0.5 * omega_2 * (spread - friction * coth_cold)
    q_cold = 0.5 * omega_1 * (-spread - friction * coth_hot)
    return _unwrap(np.asarray(q_hot)), _unwrap(np.asarray(q_cold))

from __future__ import annotations

import logging
from typing import NamedTuple, Tuple

from otto_omega.cycle.thermo import adiabaticity_parameter, coth_half, heat_flows
from otto_omega.domain.models import (
    BathPair,
    CycleEnergies,
    CycleReport,
    DriveProtocol,
    FrequencyPair,
    Regime,
)
from otto_omega.errors import require_finite

logger = logging.getLogger(__name__)

# |Q| below this counts as zero when classifying the operating mode
HEAT_TOLERANCE = 1e-12


class ThermalFactors(NamedTuple):
    """coth(b_i w_i / 2) for the cold (i=1) and hot (i=2) isochores."""

    cold: float
    hot: float


def adiabaticity(protocol: DriveProtocol, freqs: FrequencyPair) -> float:
    return float(adiabaticity_parameter(freqs.omega_1, freqs.omega_2, protocol))


def regime_approx(
    baths: BathPair, freqs: FrequencyPair, regime: Regime
) -> ThermalFactors:
    """
    Per-reservoir coth factors in the requested evaluation mode.

    Applicability of HIGH_T (b w << 1) or LOW_T (b w >> 1) is the caller's call.
    """
    return ThermalFactors(
        cold=float(coth_half(baths.beta_cold * freqs.omega_1, regime)),
        hot=float(coth_half(baths.beta_hot * freqs.omega_2, regime)),
    )


def corner_energies(
    baths: BathPair,
    freqs: FrequencyPair,
    protocol: DriveProtocol,
    regime: Regime = Regime.EXACT,
) -> CycleEnergies:
    factors = regime_approx(baths, freqs, regime)
    lam = adiabaticity(protocol, freqs)
    w1, w2 = freqs.omega_1, freqs.omega_2
    return CycleEnergies(
        h_a=0.5 * w1 * factors.cold,
        h_b=0.5 * w2 * lam * factors.cold,
        h_c=0.5 * w2 * factors.hot,
        h_d=0.5 * w1 * lam * factors.hot,
    )


def heats(
    baths: BathPair,
    freqs: FrequencyPair,
    protocol: DriveProtocol,
    regime: Regime = Regime.EXACT,
) -> Tuple[float, float]:
    """(Q2, Q4); equal to (h_c - h_b, h_a - h_d) up to rounding."""
    q_hot, q_cold = heat_flows(
        baths.beta_cold,
        baths.beta_hot,
        freqs.omega_1,
        freqs.omega_2,
        protocol,
        regime,
    )
    return float(q_hot), float(q_cold)


def cycle_report(
    baths: BathPair,
    freqs: FrequencyPair,
    protocol: DriveProtocol,
    regime: Regime = Regime.EXACT,
) -> CycleReport:
    """
    Full energetics of one cycle.

    Efficiency is reported only in engine mode and COP only in refrigerator
    mode; a cycle that dissipates on both sides reports neither. Non-finite
    heats (e.g. from underflowing b w products) raise NumericFailure.
    """
    inputs = {
        "beta_cold": baths.beta_cold,
        "beta_hot": baths.beta_hot,
        "omega_1": freqs.omega_1,
        "omega_2": freqs.omega_2,
    }
    lam = require_finite(adiabaticity(protocol, freqs), "adiabaticity", **inputs)
    q_hot, q_cold = heats(baths, freqs, protocol, regime)
    require_finite(q_hot, "q_hot", **inputs)
    require_finite(q_cold, "q_cold", **inputs)
    work_out = q_hot + q_cold
    work_in = -work_out

    engine_mode = work_out > HEAT_TOLERANCE and q_hot > HEAT_TOLERANCE
    fridge_mode = (
        q_cold > HEAT_TOLERANCE
        and q_hot < -HEAT_TOLERANCE
        and work_in > HEAT_TOLERANCE
    )
    if not (engine_mode or fridge_mode):
        logger.debug(
            "cycle at z=%.6g is neither engine nor refrigerator (Q2=%.3g, Q4=%.3g)",
            freqs.z,
            q_hot,
            q_cold,
        )

    return CycleReport(
        protocol=protocol,
        regime=regime,
        beta_cold=baths.beta_cold,
        beta_hot=baths.beta_hot,
        omega_1=freqs.omega_1,
        omega_2=freqs.omega_2,
        adiabaticity=lam,
        q_hot=q_hot,
        q_cold=q_cold,
        work_out=work_out,
        work_in=work_in,
        efficiency=work_out / q_hot if engine_mode else None,
        cop=q_cold / work_in if fridge_mode else None,
        engine_mode=engine_mode,
        fridge_mode=fridge_mode,
    )

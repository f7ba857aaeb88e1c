"""
Analytic-versus-numeric verification suites behind `otto verify`.

Every record compares a closed form with an independent evaluation: the
numeric oracle run on the cycle heat kernel, a composition of lower-level
results, or a least-squares series fit.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, List

import numpy as np

from otto_omega.cycle.thermo import heat_flows
from otto_omega.domain.models import (
    BathPair,
    CoolingRegime,
    Device,
    DriveProtocol,
    ObjectiveKind,
    Regime,
    VerificationRecord,
)
from otto_omega.engine import closed_forms as engine_cf
from otto_omega.errors import DomainError
from otto_omega.fridge import closed_forms as fridge_cf
from otto_omega.fridge.cooling import cooling_power_at_mof, cooling_power_from_controls
from otto_omega.oracle import ScalarProblem1D, fit_series, maximize_1d
from otto_omega.solvers import solve_analytic, solve_numeric
from otto_omega.sweeps.registry import (
    TAU_RANGE,
    TAU_SS_RANGE,
    ZETA_RANGE,
    ZETA_SS_RANGE,
)

logger = logging.getLogger(__name__)

GRID_POINTS = 50
ENGINE_ETA_RANGE = (0.02, 0.98)

# series coefficients are checked to this absolute accuracy whatever --tol says
TAYLOR_TOLERANCE = 1e-3
TAYLOR_SCALE = 0.05
ASYMPTOTIC_SCALE = 0.01
ASYMPTOTIC_LIMIT_AT = 1e-12

ENGINE_FAMILIES = [
    (ObjectiveKind.OMEGA, DriveProtocol.ADIABATIC, Regime.HIGH_T),
    (ObjectiveKind.OMEGA, DriveProtocol.ADIABATIC, Regime.LOW_T),
    (ObjectiveKind.OMEGA, DriveProtocol.SUDDEN_SWITCH, Regime.HIGH_T),
    (ObjectiveKind.WORK, DriveProtocol.ADIABATIC, Regime.HIGH_T),
    (ObjectiveKind.WORK, DriveProtocol.ADIABATIC, Regime.LOW_T),
    (ObjectiveKind.WORK, DriveProtocol.SUDDEN_SWITCH, Regime.HIGH_T),
]

FRIDGE_FAMILIES = [
    (DriveProtocol.ADIABATIC, Regime.HIGH_T, ZETA_RANGE),
    (DriveProtocol.ADIABATIC, Regime.LOW_T, ZETA_RANGE),
    (DriveProtocol.SUDDEN_SWITCH, Regime.HIGH_T, ZETA_SS_RANGE),
]


@dataclass(frozen=True)
class SuiteReport:
    records: List[VerificationRecord]

    @property
    def failures(self) -> int:
        return sum(not r.passed for r in self.records)

    @property
    def passed(self) -> bool:
        return self.failures == 0


def _grid(bounds) -> np.ndarray:
    lo, hi = bounds
    return np.linspace(lo, hi, GRID_POINTS)


def _oracle_max(objective, domain, name: str) -> float:
    problem = ScalarProblem1D(objective=objective, domain=domain, name=name)
    return maximize_1d(problem).value


def _ss_cop_from_kernel(tau: float) -> Callable[[np.ndarray], np.ndarray]:
    # beta_hot = omega_2 = 1
    def cop(z: np.ndarray) -> np.ndarray:
        q_hot, q_cold = heat_flows(
            1.0 / tau, 1.0, z, 1.0, DriveProtocol.SUDDEN_SWITCH, Regime.HIGH_T
        )
        q_cold = np.asarray(q_cold)
        return q_cold / -(np.asarray(q_hot) + q_cold)

    return cop


def engine_suite(tol_rel: float = 1e-8) -> List[VerificationRecord]:
    """Efficiency at every analytic engine optimum, plus eta_max_ss."""
    tol_abs = tol_rel / 100.0
    records = []
    for eta_c in _grid(ENGINE_ETA_RANGE):
        baths = BathPair.from_eta_carnot(float(eta_c))
        for kind, protocol, regime in ENGINE_FAMILIES:
            analytic = solve_analytic(Device.ENGINE, kind, protocol, regime, baths)
            numeric = solve_numeric(Device.ENGINE, kind, protocol, regime, baths)
            records.append(
                VerificationRecord.compare(
                    "engine",
                    f"{kind}-{protocol}-{regime}@eta_c={eta_c:.6g}",
                    analytic.figure_of_merit,
                    numeric.figure_of_merit,
                    tol_rel=tol_rel,
                    tol_abs=tol_abs,
                )
            )

        tau = baths.tau
        best = _oracle_max(
            lambda z: engine_cf.eta_ss(z, tau), (math.sqrt(tau), 1.0), "eta_ss"
        )
        records.append(
            VerificationRecord.compare(
                "engine",
                f"eta_max-ss@eta_c={eta_c:.6g}",
                float(engine_cf.eta_max_ss(eta_c)),
                best,
                tol_rel=tol_rel,
                tol_abs=tol_abs,
            )
        )
    return records


def fridge_suite(tol_rel: float = 1e-8) -> List[VerificationRecord]:
    """COP at every analytic refrigerator optimum, zeta_max and cooling power at MOF."""
    tol_abs = tol_rel / 100.0
    records = []
    for protocol, regime, bounds in FRIDGE_FAMILIES:
        for zeta_c in _grid(bounds):
            baths = BathPair.from_zeta_carnot(float(zeta_c))
            key = (Device.FRIDGE, ObjectiveKind.OMEGA, protocol, regime)
            analytic = solve_analytic(*key, baths)
            numeric = solve_numeric(*key, baths)
            records.append(
                VerificationRecord.compare(
                    "fridge",
                    f"omega-{protocol}-{regime}@zeta_c={zeta_c:.6g}",
                    analytic.figure_of_merit,
                    numeric.figure_of_merit,
                    tol_rel=tol_rel,
                    tol_abs=tol_abs,
                )
            )

    for zeta_c in _grid(ZETA_SS_RANGE):
        tau = float(fridge_cf.tau_from_zeta(zeta_c))
        best = _oracle_max(
            _ss_cop_from_kernel(tau), (0.0, math.sqrt(2.0 * tau - 1.0)), "zeta_ss"
        )
        records.append(
            VerificationRecord.compare(
                "fridge",
                f"zeta_max-ss@zeta_c={zeta_c:.6g}",
                float(fridge_cf.cop_max_ss(zeta_c)),
                best,
                tol_rel=tol_rel,
                tol_abs=tol_abs,
            )
        )

    cooling_ranges = {
        CoolingRegime.AD_HIGH_T: TAU_RANGE,
        CoolingRegime.AD_LOW_T: TAU_RANGE,
        CoolingRegime.SUDDEN_SWITCH: TAU_SS_RANGE,
    }
    for cooling, bounds in cooling_ranges.items():
        for tau in _grid(bounds):
            records.append(
                VerificationRecord.compare(
                    "fridge",
                    f"cp-{cooling}@tau={tau:.6g}",
                    cooling_power_at_mof(cooling, float(tau)),
                    cooling_power_from_controls(cooling, float(tau)),
                    tol_rel=tol_rel,
                    tol_abs=tol_abs,
                )
            )
    return records


def _coefficients(
    suite_records: List[VerificationRecord],
    family: str,
    fitted,
    expected: Dict[int, float],
) -> None:
    for power, value in expected.items():
        suite_records.append(
            VerificationRecord.compare(
                "taylor",
                f"{family}:c{power}",
                value,
                fitted[power],
                tol_rel=0.0,
                tol_abs=TAYLOR_TOLERANCE,
            )
        )


def _asymptotic(cop: Callable) -> Callable[[float], float]:
    # s * zeta(1 / s), finite as s -> 0
    return lambda s: s * float(cop(1.0 / s))


def taylor_suite(tol_rel: float = 1e-8) -> List[VerificationRecord]:
    """
    Series coefficients near eta_c = 0 and asymptotic coefficients for large
    zeta_c, fitted by least squares and compared with their exact values.
    `tol_rel` is not used; the fits carry TAYLOR_TOLERANCE.
    """
    records: List[VerificationRecord] = []
    series = {
        "emw_low": (engine_cf.eta_work_low, {1: 1 / 2, 2: 1 / 8, 3: 7 / 96}),
        "emw_high": (engine_cf.eta_curzon_ahlborn, {1: 1 / 2, 2: 1 / 8, 3: 6 / 96}),
        "emof_low": (engine_cf.eta_omega_low, {1: 3 / 4, 2: 1 / 32, 3: 19 / 768}),
        "emof_high": (engine_cf.eta_omega_high, {1: 3 / 4, 2: 1 / 32, 3: 18 / 768}),
    }
    fits = {}
    for family, (efficiency, expected) in series.items():
        # quartic so the cubic coefficient is not polluted by the next term
        fits[family] = fit_series(efficiency, 4, TAYLOR_SCALE)
        _coefficients(records, family, fits[family].coefficients, expected)

    for family, low, high, gap in [
        ("emw", "emw_low", "emw_high", 1 / 96),
        ("emof", "emof_low", "emof_high", 1 / 768),
    ]:
        fitted_gap = fits[low].coefficients[3] - fits[high].coefficients[3]
        records.append(
            VerificationRecord.compare(
                "taylor",
                f"{family}:c3-gap",
                gap,
                fitted_gap,
                tol_rel=0.5,
                tol_abs=0.0,
            )
        )

    for family, cop, third in [
        ("cop_mof_high", fridge_cf.cop_mof_high, -17 / 216),
        ("cop_mof_low", fridge_cf.cop_mof_low, -16 / 216),
    ]:
        scaled = _asymptotic(cop)
        limit = scaled(ASYMPTOTIC_LIMIT_AT)
        fit = fit_series(scaled, 3, ASYMPTOTIC_SCALE, limit=limit)
        expected = {0: 2 / 3, 1: 1 / 18, 2: third}
        _coefficients(records, family, fit.coefficients, expected)

    ratio = float(fridge_cf.cop_max_ss(1.0 / ASYMPTOTIC_LIMIT_AT)) * ASYMPTOTIC_LIMIT_AT
    records.append(
        VerificationRecord.compare(
            "taylor",
            "cop_max_ss:slope",
            3.0 - 2.0 * math.sqrt(2.0),
            ratio,
            tol_rel=0.0,
            tol_abs=TAYLOR_TOLERANCE,
        )
    )
    return records


SUITES: Dict[str, Callable[[float], List[VerificationRecord]]] = {
    "engine": engine_suite,
    "fridge": fridge_suite,
    "taylor": taylor_suite,
}


def run_suite(name: str, tol_rel: float = 1e-8) -> SuiteReport:
    """Run one suite, or every suite in order for name "all"."""
    if not tol_rel > 0:
        raise DomainError("tolerance must be positive")
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        choices = ", ".join(SUITES)
        raise DomainError(f"unknown suite {name!r}; choose from all, {choices}")

    records: List[VerificationRecord] = []
    for suite in names:
        found = SUITES[suite](tol_rel)
        failed = sum(not r.passed for r in found)
        logger.info("suite %s: %d records, %d failed", suite, len(found), failed)
        records.extend(found)
    return SuiteReport(records=records)

"""
Solver registry keyed by (device, objective, protocol, regime).

Analytic solvers take a BathPair; numeric solvers are built from the device's
objective model and run through the oracle.
"""

from __future__ import annotations

import logging
from typing import Callable, Dict, List, Optional, Tuple

from otto_omega.domain.models import (
    BathPair,
    Device,
    DriveProtocol,
    Method,
    ObjectiveKind,
    OptResult,
    Regime,
    VerificationRecord,
)
from otto_omega.engine.objectives import ENGINE_FAMILIES, EngineObjective
from otto_omega.engine.optimization import (
    emof_adiabatic_high_t,
    emof_ss,
    maximize_engine,
    maximize_omega_low_t,
    maximize_work_high_t,
    maximize_work_low_t,
    maximize_work_ss,
)
from otto_omega.errors import DomainError, require_finite
from otto_omega.fridge.objectives import FRIDGE_FAMILIES, FridgeObjective
from otto_omega.fridge.optimization import (
    cop_mof_adiabatic_high_t,
    cop_mof_adiabatic_low_t,
    cop_mof_ss,
    maximize_fridge,
)

logger = logging.getLogger(__name__)

SolverKey = Tuple[Device, ObjectiveKind, DriveProtocol, Regime]
AnalyticSolver = Callable[[BathPair], OptResult]


def _key(
    device: Device | str,
    objective: ObjectiveKind | str,
    protocol: DriveProtocol | str,
    regime: Regime | str,
) -> SolverKey:
    return (
        Device(device),
        ObjectiveKind(objective),
        DriveProtocol(protocol),
        Regime(regime),
    )


ANALYTIC_SOLVERS: Dict[SolverKey, AnalyticSolver] = {
    _key("engine", "omega", "adiabatic", "high"): emof_adiabatic_high_t,
    _key("engine", "omega", "adiabatic", "low"): maximize_omega_low_t,
    _key("engine", "omega", "ss", "high"): emof_ss,
    _key("engine", "work", "adiabatic", "high"): maximize_work_high_t,
    _key("engine", "work", "adiabatic", "low"): maximize_work_low_t,
    _key("engine", "work", "ss", "high"): maximize_work_ss,
    _key("fridge", "omega", "adiabatic", "high"): cop_mof_adiabatic_high_t,
    _key("fridge", "omega", "adiabatic", "low"): cop_mof_adiabatic_low_t,
    _key("fridge", "omega", "ss", "high"): cop_mof_ss,
}


def numeric_keys() -> List[SolverKey]:
    keys = [
        (Device.ENGINE, kind, protocol, regime)
        for kind in ObjectiveKind
        for protocol, regime in ENGINE_FAMILIES
    ]
    keys += [
        (Device.FRIDGE, ObjectiveKind.OMEGA, protocol, regime)
        for protocol, regime in FRIDGE_FAMILIES
    ]
    return sorted(keys)


def _describe(key: SolverKey) -> str:
    return "/".join(str(part) for part in key)


def require_finite_result(result: OptResult) -> OptResult:
    """Return `result`, or raise NumericFailure for its first non-finite number."""
    inputs = {"tau": result.tau, "beta_hot": result.beta_hot}
    for name, value in result.controls.items():
        require_finite(value, name, **inputs)
    require_finite(result.objective_value, "objective_value", **inputs)
    require_finite(result.figure_of_merit, "figure_of_merit", **inputs)
    return result


def solve_analytic(
    device: Device | str,
    objective: ObjectiveKind | str,
    protocol: DriveProtocol | str,
    regime: Regime | str,
    baths: BathPair,
) -> OptResult:
    key = _key(device, objective, protocol, regime)
    solver = ANALYTIC_SOLVERS.get(key)
    if solver is None:
        available = ", ".join(_describe(k) for k in sorted(ANALYTIC_SOLVERS))
        raise DomainError(
            f"no closed form for {_describe(key)}; available: {available}"
        )
    return require_finite_result(solver(baths))


def solve_numeric(
    device: Device | str,
    objective: ObjectiveKind | str,
    protocol: DriveProtocol | str,
    regime: Regime | str,
    baths: BathPair,
    *,
    omega_2: Optional[float] = None,
    tolerance: Optional[float] = None,
) -> OptResult:
    key = _key(device, objective, protocol, regime)
    if key not in numeric_keys():
        raise DomainError(f"no numeric objective for {_describe(key)}")
    device, kind, protocol, regime = key
    if device is Device.ENGINE:
        engine = EngineObjective.build(kind, protocol, regime, baths, omega_2=omega_2)
        return require_finite_result(maximize_engine(engine, tolerance=tolerance))
    fridge = FridgeObjective.build(protocol, regime, baths, omega_2=omega_2)
    return require_finite_result(maximize_fridge(fridge, tolerance=tolerance))


def solve(
    device: Device | str,
    objective: ObjectiveKind | str,
    protocol: DriveProtocol | str,
    regime: Regime | str,
    baths: BathPair,
    method: Method | str,
    *,
    omega_2: Optional[float] = None,
) -> OptResult:
    if Method(method) is Method.ANALYTIC:
        return solve_analytic(device, objective, protocol, regime, baths)
    return solve_numeric(device, objective, protocol, regime, baths, omega_2=omega_2)


def discrepancy(
    analytic: OptResult, numeric: OptResult, *, tol_rel: float = 1e-8
) -> VerificationRecord:
    """Compare the figures of merit of two results for the same problem."""
    case_id = "{}-{}-{}-{}-tau={:.17g}".format(
        analytic.device,
        analytic.objective,
        analytic.protocol,
        analytic.regime,
        analytic.tau,
    )
    record = VerificationRecord.compare(
        "optimize",
        case_id,
        analytic.figure_of_merit,
        numeric.figure_of_merit,
        tol_rel=tol_rel,
        tol_abs=tol_rel / 100.0,
    )
    if not record.passed:
        logger.warning(
            "%s: analytic and numeric disagree (rel_err %.3g)", case_id, record.rel_err
        )
    return record

from __future__ import annotations

import logging
import math
from typing import Optional, Tuple

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field, model_validator

from otto_omega.cycle.core import HEAT_TOLERANCE
from otto_omega.cycle.thermo import heat_flows
from otto_omega.domain.models import BathPair, DriveProtocol, ObjectiveKind, Regime
from otto_omega.engine.closed_forms import eta_max_ss
from otto_omega.errors import DomainError, InfeasibleError, OracleFailure
from otto_omega.oracle import ScalarProblem1D, maximize_1d

logger = logging.getLogger(__name__)

ENGINE_FAMILIES = {
    (DriveProtocol.ADIABATIC, Regime.HIGH_T),
    (DriveProtocol.ADIABATIC, Regime.LOW_T),
    (DriveProtocol.ADIABATIC, Regime.EXACT),
    (DriveProtocol.SUDDEN_SWITCH, Regime.HIGH_T),
    (DriveProtocol.SUDDEN_SWITCH, Regime.EXACT),
}


class EngineObjective(BaseModel):
    """
    Work or Omega = 2 W - eta_max Q2 of the engine, evaluated through the cycle
    heat kernel so it stays independent of the closed forms.

    Searches run in z = omega_1 / omega_2; outside LOW_T the hot-stroke
    frequency stays at `omega_2`.
    """

    model_config = ConfigDict(frozen=True)

    kind: ObjectiveKind
    protocol: DriveProtocol
    regime: Regime
    baths: BathPair
    eta_max: Optional[float] = Field(
        default=None, gt=0, le=1, description="Efficiency bound weighting Q2"
    )
    omega_2: float = Field(
        default=1.0, gt=0, allow_inf_nan=False, description="Fixed hot-stroke frequency"
    )

    @model_validator(mode="after")
    def eta_max_within_bounds(self) -> "EngineObjective":
        if (self.protocol, self.regime) not in ENGINE_FAMILIES:
            raise ValueError(
                f"no engine objective for protocol={self.protocol} regime={self.regime}"
            )
        if self.eta_max is None:
            if self.kind is ObjectiveKind.OMEGA:
                raise ValueError("an Omega objective needs eta_max")
            return self
        if self.eta_max > self.baths.eta_carnot * (1.0 + 1e-12):
            raise ValueError("eta_max must not exceed the Carnot efficiency")
        if self.protocol is DriveProtocol.SUDDEN_SWITCH and self.eta_max > 0.5:
            raise ValueError("sudden-switch eta_max never exceeds 1/2")
        return self

    @classmethod
    def build(
        cls,
        kind: ObjectiveKind,
        protocol: DriveProtocol,
        regime: Regime,
        baths: BathPair,
        *,
        omega_2: Optional[float] = None,
    ) -> "EngineObjective":
        """
        Objective with the protocol's own efficiency bound filled in. WORK
        objectives carry no bound.
        """
        if (protocol, regime) not in ENGINE_FAMILIES:
            raise DomainError(
                f"no engine objective for protocol={protocol} regime={regime}"
            )
        omega_2 = 1.0 / baths.beta_hot if omega_2 is None else omega_2
        eta_max = None
        if ObjectiveKind(kind) is ObjectiveKind.OMEGA:
            eta_max = _efficiency_bound(protocol, regime, baths, omega_2)
        return cls(
            kind=kind,
            protocol=protocol,
            regime=regime,
            baths=baths,
            eta_max=eta_max,
            omega_2=omega_2,
        )

    @property
    def name(self) -> str:
        return f"engine-{self.kind}-{self.protocol}-{self.regime}"

    @property
    def beta_hot(self) -> float:
        return self.baths.beta_hot

    def heats(self, omega_1: ArrayLike, omega_2: ArrayLike):
        return heat_flows(
            self.baths.beta_cold,
            self.baths.beta_hot,
            omega_1,
            omega_2,
            self.protocol,
            self.regime,
        )

    def evaluate(self, omega_1: ArrayLike, omega_2: ArrayLike) -> np.ndarray:
        q_hot, q_cold = self.heats(omega_1, omega_2)
        work = np.asarray(q_hot) + np.asarray(q_cold)
        if self.kind is ObjectiveKind.WORK:
            return work
        return 2.0 * work - self.eta_max * np.asarray(q_hot)

    def feasible(self, omega_1: ArrayLike, omega_2: ArrayLike) -> np.ndarray:
        """Engine mode: W > 0 and Q2 > 0."""
        q_hot, q_cold = self.heats(omega_1, omega_2)
        q_hot = np.asarray(q_hot)
        return (q_hot + np.asarray(q_cold) > HEAT_TOLERANCE) & (q_hot > HEAT_TOLERANCE)

    def figure_of_merit(self, omega_1: float, omega_2: float) -> float:
        """Efficiency W / Q2."""
        q_hot, q_cold = self.heats(omega_1, omega_2)
        return float((q_hot + q_cold) / q_hot)

    def ratio_domain(self) -> Tuple[float, float]:
        """Interval of z that contains the positive-work region."""
        tau = self.baths.tau
        if self.protocol is DriveProtocol.ADIABATIC:
            return tau, 1.0
        if self.regime is Regime.HIGH_T:
            return math.sqrt(tau), 1.0
        return 0.0, 1.0


def _efficiency_bound(
    protocol: DriveProtocol, regime: Regime, baths: BathPair, omega_2: float
) -> float:
    if protocol is DriveProtocol.ADIABATIC:
        return baths.eta_carnot
    if regime is Regime.HIGH_T:
        return float(eta_max_ss(baths.eta_carnot))
    return exact_eta_max_ss(baths, omega_2)


def exact_eta_max_ss(baths: BathPair, omega_2: float) -> float:
    """
    Largest exact-regime sudden-switch efficiency over z at fixed omega_2.
    """

    def efficiency(z: np.ndarray) -> np.ndarray:
        q_hot, q_cold = heat_flows(
            baths.beta_cold,
            baths.beta_hot,
            z * omega_2,
            omega_2,
            DriveProtocol.SUDDEN_SWITCH,
            Regime.EXACT,
        )
        return (np.asarray(q_hot) + np.asarray(q_cold)) / np.asarray(q_hot)

    def engine_mode(z: np.ndarray) -> np.ndarray:
        q_hot, q_cold = heat_flows(
            baths.beta_cold,
            baths.beta_hot,
            z * omega_2,
            omega_2,
            DriveProtocol.SUDDEN_SWITCH,
            Regime.EXACT,
        )
        q_hot = np.asarray(q_hot)
        return (q_hot + np.asarray(q_cold) > HEAT_TOLERANCE) & (q_hot > HEAT_TOLERANCE)

    problem = ScalarProblem1D(
        objective=efficiency,
        domain=(0.0, 1.0),
        feasible=engine_mode,
        name="exact sudden-switch efficiency",
    )
    try:
        best = maximize_1d(problem)
    except OracleFailure as e:
        raise InfeasibleError(
            f"sudden-switch engine produces no work at omega_2={omega_2:g}, "
            f"tau={baths.tau:g}"
        ) from e
    logger.debug("exact sudden-switch eta_max=%.17g at z=%.17g", best.value, best.x)
    return best.value

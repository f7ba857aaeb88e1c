from __future__ import annotations

import logging
import math
from typing import Optional, Tuple

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field, model_validator

from otto_omega.cycle.core import HEAT_TOLERANCE
from otto_omega.cycle.thermo import heat_flows
from otto_omega.domain.models import BathPair, DriveProtocol, Regime
from otto_omega.errors import DomainError, InfeasibleError, OracleFailure
from otto_omega.fridge.closed_forms import SS_FRIDGE_RULE, cop_max_ss
from otto_omega.oracle import ScalarProblem1D, maximize_1d

logger = logging.getLogger(__name__)

FRIDGE_FAMILIES = {
    (DriveProtocol.ADIABATIC, Regime.HIGH_T),
    (DriveProtocol.ADIABATIC, Regime.LOW_T),
    (DriveProtocol.ADIABATIC, Regime.EXACT),
    (DriveProtocol.SUDDEN_SWITCH, Regime.HIGH_T),
    (DriveProtocol.SUDDEN_SWITCH, Regime.EXACT),
}


def _fridge_mode(q_hot: ArrayLike, q_cold: ArrayLike) -> np.ndarray:
    q_hot = np.asarray(q_hot)
    q_cold = np.asarray(q_cold)
    work_in = -(q_hot + q_cold)
    return (
        (q_cold > HEAT_TOLERANCE)
        & (q_hot < -HEAT_TOLERANCE)
        & (work_in > HEAT_TOLERANCE)
    )


class FridgeObjective(BaseModel):
    """
    Omega = 2 Q4 - zeta_max W_in of the refrigerator, evaluated through the
    cycle heat kernel.
    """

    model_config = ConfigDict(frozen=True)

    protocol: DriveProtocol
    regime: Regime
    baths: BathPair
    zeta_max: float = Field(
        ..., gt=0, allow_inf_nan=False, description="COP bound weighting W_in"
    )
    omega_2: float = Field(
        default=1.0, gt=0, allow_inf_nan=False, description="Fixed hot-stroke frequency"
    )

    @model_validator(mode="after")
    def zeta_max_within_bounds(self) -> "FridgeObjective":
        if (self.protocol, self.regime) not in FRIDGE_FAMILIES:
            raise ValueError(
                f"no refrigerator objective for protocol={self.protocol} "
                f"regime={self.regime}"
            )
        if self.zeta_max > self.baths.zeta_carnot * (1.0 + 1e-12):
            raise ValueError("zeta_max must not exceed the Carnot COP")
        return self

    @classmethod
    def build(
        cls,
        protocol: DriveProtocol,
        regime: Regime,
        baths: BathPair,
        *,
        omega_2: Optional[float] = None,
    ) -> "FridgeObjective":
        """Objective with the protocol's own COP bound filled in."""
        if (protocol, regime) not in FRIDGE_FAMILIES:
            raise DomainError(
                f"no refrigerator objective for protocol={protocol} regime={regime}"
            )
        omega_2 = 1.0 / baths.beta_hot if omega_2 is None else omega_2
        if protocol is DriveProtocol.ADIABATIC:
            zeta_max = baths.zeta_carnot
        elif regime is Regime.HIGH_T:
            if not baths.tau > 0.5:
                raise InfeasibleError(SS_FRIDGE_RULE)
            zeta_max = float(cop_max_ss(baths.zeta_carnot))
        else:
            zeta_max = exact_cop_max_ss(baths, omega_2)
        return cls(
            protocol=protocol,
            regime=regime,
            baths=baths,
            zeta_max=zeta_max,
            omega_2=omega_2,
        )

    @property
    def name(self) -> str:
        return f"fridge-omega-{self.protocol}-{self.regime}"

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
        q_cold = np.asarray(q_cold)
        work_in = -(np.asarray(q_hot) + q_cold)
        return 2.0 * q_cold - self.zeta_max * work_in

    def feasible(self, omega_1: ArrayLike, omega_2: ArrayLike) -> np.ndarray:
        """Refrigerator mode: Q4 > 0, Q2 < 0 and W_in > 0."""
        return _fridge_mode(*self.heats(omega_1, omega_2))

    def figure_of_merit(self, omega_1: float, omega_2: float) -> float:
        """COP Q4 / W_in."""
        q_hot, q_cold = self.heats(omega_1, omega_2)
        return float(q_cold / -(q_hot + q_cold))

    def ratio_domain(self) -> Tuple[float, float]:
        """Interval of z that contains the positive-cooling region."""
        tau = self.baths.tau
        if self.protocol is DriveProtocol.ADIABATIC:
            return 0.0, tau
        if self.regime is Regime.HIGH_T:
            return 0.0, math.sqrt(2.0 * tau - 1.0)
        return 0.0, 1.0


def exact_cop_max_ss(baths: BathPair, omega_2: float) -> float:
    """
    Largest exact-regime sudden-switch COP over z at fixed omega_2.
    """

    def heats(z: np.ndarray):
        return heat_flows(
            baths.beta_cold,
            baths.beta_hot,
            z * omega_2,
            omega_2,
            DriveProtocol.SUDDEN_SWITCH,
            Regime.EXACT,
        )

    def cop(z: np.ndarray) -> np.ndarray:
        q_hot, q_cold = heats(z)
        q_cold = np.asarray(q_cold)
        return q_cold / -(np.asarray(q_hot) + q_cold)

    problem = ScalarProblem1D(
        objective=cop,
        domain=(0.0, 1.0),
        feasible=lambda z: _fridge_mode(*heats(z)),
        name="exact sudden-switch COP",
    )
    try:
        best = maximize_1d(problem)
    except OracleFailure as e:
        raise InfeasibleError(
            f"sudden-switch refrigerator extracts no heat at omega_2={omega_2:g}, "
            f"tau={baths.tau:g}"
        ) from e
    logger.debug("exact sudden-switch zeta_max=%.17g at z=%.17g", best.value, best.x)
    return best.value

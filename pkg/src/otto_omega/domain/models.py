from __future__ import annotations

import math
from enum import StrEnum
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class DriveProtocol(StrEnum):
    """How the frequency is changed on the two work strokes."""

    ADIABATIC = "adiabatic"
    SUDDEN_SWITCH = "ss"


class Regime(StrEnum):
    """Evaluation mode for the thermal coth factors. Never auto-detected."""

    EXACT = "exact"
    HIGH_T = "high"
    LOW_T = "low"


class Device(StrEnum):
    ENGINE = "engine"
    FRIDGE = "fridge"


class ObjectiveKind(StrEnum):
    WORK = "work"
    OMEGA = "omega"


class Method(StrEnum):
    ANALYTIC = "analytic"
    NUMERIC = "numeric"


class CoolingRegime(StrEnum):
    """Refrigerator families for which a cooling-power-at-MOF closed form exists."""

    AD_HIGH_T = "ad-high"
    AD_LOW_T = "ad-low"
    SUDDEN_SWITCH = "ss"


class BathPair(BaseModel):
    """
    Inverse temperatures of the two reservoirs (units with hbar = k_B = 1).

    `tau`, `eta_carnot` and `zeta_carnot` are derived and never stored.
    """

    model_config = ConfigDict(frozen=True)

    beta_cold: float = Field(
        ..., gt=0, allow_inf_nan=False, description="Cold reservoir inverse temperature"
    )
    beta_hot: float = Field(
        ..., gt=0, allow_inf_nan=False, description="Hot reservoir inverse temperature"
    )

    @model_validator(mode="after")
    def cold_reservoir_is_colder(self) -> "BathPair":
        if not self.beta_cold > self.beta_hot:
            raise ValueError("beta_cold must exceed beta_hot")
        return self

    @property
    def tau(self) -> float:
        return self.beta_hot / self.beta_cold

    @property
    def eta_carnot(self) -> float:
        return 1.0 - self.tau

    @property
    def zeta_carnot(self) -> float:
        return self.beta_hot / (self.beta_cold - self.beta_hot)

    @classmethod
    def from_tau(cls, tau: float, beta_hot: float = 1.0) -> "BathPair":
        if not 0.0 < tau < 1.0:
            raise ValueError("tau must lie in (0, 1)")
        return cls(beta_cold=beta_hot / tau, beta_hot=beta_hot)

    @classmethod
    def from_eta_carnot(cls, eta_c: float, beta_hot: float = 1.0) -> "BathPair":
        if not 0.0 < eta_c < 1.0:
            raise ValueError("eta_c must lie in (0, 1)")
        return cls.from_tau(1.0 - eta_c, beta_hot)

    @classmethod
    def from_zeta_carnot(cls, zeta_c: float, beta_hot: float = 1.0) -> "BathPair":
        if not (zeta_c > 0.0 and math.isfinite(zeta_c)):
            raise ValueError("zeta_c must be positive")
        return cls.from_tau(zeta_c / (1.0 + zeta_c), beta_hot)


class FrequencyPair(BaseModel):
    model_config = ConfigDict(frozen=True)

    omega_1: float = Field(
        ..., gt=0, allow_inf_nan=False, description="Frequency during the cold isochore"
    )
    omega_2: float = Field(
        ..., gt=0, allow_inf_nan=False, description="Frequency during the hot isochore"
    )

    @property
    def z(self) -> float:
        """Compression ratio omega_1 / omega_2."""
        return self.omega_1 / self.omega_2

    @classmethod
    def from_ratio(cls, z: float, omega_2: float = 1.0) -> "FrequencyPair":
        return cls(omega_1=z * omega_2, omega_2=omega_2)


class CycleEnergies(BaseModel):
    """Mean oscillator energies at the four corners A-D of the cycle."""

    model_config = ConfigDict(frozen=True)

    h_a: float = Field(..., gt=0, description="After thermalising with the cold bath")
    h_b: float = Field(..., gt=0, description="After the compression stroke")
    h_c: float = Field(..., gt=0, description="After thermalising with the hot bath")
    h_d: float = Field(..., gt=0, description="After the expansion stroke")


class CycleReport(BaseModel):
    """
    Energetics of one cycle configuration.

    Sign convention: all incoming fluxes are positive, so the engine output is
    `work_out = q_hot + q_cold` and the refrigerator input is `work_in = -work_out`.
    """

    model_config = ConfigDict(frozen=True)

    protocol: DriveProtocol
    regime: Regime
    beta_cold: float
    beta_hot: float
    omega_1: float
    omega_2: float
    adiabaticity: float = Field(..., ge=1.0, description="lambda")
    q_hot: float = Field(..., description="Heat absorbed from the hot bath (Q2)")
    q_cold: float = Field(..., description="Heat exchanged with the cold bath (Q4)")
    work_out: float
    work_in: float
    efficiency: Optional[float] = Field(default=None, description="W/Q2, engine only")
    cop: Optional[float] = Field(default=None, description="Q4/W_in, fridge only")
    engine_mode: bool
    fridge_mode: bool

    @model_validator(mode="after")
    def figures_follow_modes(self) -> "CycleReport":
        if self.engine_mode and self.fridge_mode:
            raise ValueError("engine_mode and fridge_mode are mutually exclusive")
        if (self.efficiency is not None) != self.engine_mode:
            raise ValueError("efficiency is set iff engine_mode")
        if (self.cop is not None) != self.fridge_mode:
            raise ValueError("cop is set iff fridge_mode")
        return self


class Convergence(BaseModel):
    model_config = ConfigDict(frozen=True)

    iterations: int = Field(..., ge=0, description="Golden-section or simplex steps")
    polish_steps: int = Field(default=0, ge=0)
    evaluations: int = Field(..., ge=0)
    achieved_tolerance: float = Field(..., ge=0)
    at_boundary: bool = False
    plateau: bool = False


class OptResult(BaseModel):
    """An optimum, either from closed forms or from the numeric oracle."""

    model_config = ConfigDict(frozen=True)

    device: Device
    objective: ObjectiveKind
    protocol: DriveProtocol
    regime: Regime
    tau: float
    beta_hot: float
    controls: Dict[str, float] = Field(
        ..., description="{'z': ...} or {'omega_1': ..., 'omega_2': ...}"
    )
    objective_value: float
    figure_of_merit: float = Field(..., description="Efficiency or COP at the optimum")
    method: Method
    convergence: Optional[Convergence] = None

    @model_validator(mode="after")
    def convergence_only_for_numeric(self) -> "OptResult":
        if (self.convergence is not None) != (self.method == Method.NUMERIC):
            raise ValueError(
                "convergence metadata is reported for numeric results only"
            )
        return self


class LoopPoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["sample", "max_work", "max_efficiency", "mof"] = "sample"
    z: float
    efficiency: float
    work: float


class LoopCurve(BaseModel):
    model_config = ConfigDict(frozen=True)

    tau: float
    beta_hot: float
    samples: List[LoopPoint]
    max_work: LoopPoint
    max_efficiency: LoopPoint
    mof: LoopPoint


class CoolingPeak(BaseModel):
    model_config = ConfigDict(frozen=True)

    regime: CoolingRegime
    beta_hot: float
    tau_star: float
    q_cold_star: float
    convergence: Convergence


SweepAxis = Literal["eta_c", "zeta_c", "tau"]


class SweepSpec(BaseModel):
    """
    A one-dimensional sweep: one axis, one or more named quantities.
    """

    axis: SweepAxis = Field(..., description="Sweep variable")
    quantities: List[str] = Field(..., min_length=1, description="Output columns")
    start: float = Field(..., allow_inf_nan=False)
    stop: float = Field(..., allow_inf_nan=False)
    count: int = Field(default=200, ge=2)
    beta_hot: float = Field(default=1.0, gt=0, allow_inf_nan=False)
    format: Literal["csv", "json"] = "csv"

    @field_validator("quantities")
    @classmethod
    def no_duplicate_quantities(cls, v: List[str]) -> List[str]:
        if len(set(v)) != len(v):
            raise ValueError("quantities must not repeat")
        return v

    @model_validator(mode="after")
    def range_is_increasing(self) -> "SweepSpec":
        if not self.start < self.stop:
            raise ValueError("sweep start must be below stop")
        return self

    def grid(self) -> List[float]:
        step = (self.stop - self.start) / (self.count - 1)
        points = [self.start + i * step for i in range(self.count - 1)]
        return points + [self.stop]


class VerificationRecord(BaseModel):
    """
    One analytic-vs-numeric comparison.

    `rel_err` is relative to the analytic magnitude and falls back to the
    absolute error when the analytic value is zero.
    """

    model_config = ConfigDict(frozen=True)

    suite: str
    case_id: str
    analytic_value: float
    numeric_value: float
    abs_err: float = Field(..., ge=0)
    rel_err: float = Field(..., ge=0)
    tol_abs: float = Field(..., ge=0)
    tol_rel: float = Field(..., ge=0)
    passed: bool

    @model_validator(mode="after")
    def pass_flag_matches_tolerances(self) -> "VerificationRecord":
        expected = self.abs_err <= self.tol_abs or self.rel_err <= self.tol_rel
        if self.passed != expected:
            raise ValueError(
                "passed must equal (abs_err <= tol_abs or rel_err <= tol_rel)"
            )
        return self

    @classmethod
    def compare(
        cls,
        suite: str,
        case_id: str,
        analytic: float,
        numeric: float,
        *,
        tol_rel: float,
        tol_abs: float,
    ) -> "VerificationRecord":
        abs_err = abs(numeric - analytic)
        if not math.isfinite(abs_err):
            abs_err = math.inf
        rel_err = abs_err / abs(analytic) if analytic != 0.0 else abs_err
        return cls(
            suite=suite,
            case_id=case_id,
            analytic_value=analytic,
            numeric_value=numeric,
            abs_err=abs_err,
            rel_err=rel_err,
            tol_abs=tol_abs,
            tol_rel=tol_rel,
            passed=abs_err <= tol_abs or rel_err <= tol_rel,
        )

from otto_omega.domain.models import (
    BathPair,
    Convergence,
    CoolingPeak,
    CoolingRegime,
    CycleEnergies,
    CycleReport,
    Device,
    DriveProtocol,
    FrequencyPair,
    LoopCurve,
    LoopPoint,
    Method,
    ObjectiveKind,
    OptResult,
    Regime,
    SweepSpec,
    VerificationRecord,
)

__all__ = [
    "BathPair",
    "Convergence",
    "CoolingPeak",
    "CoolingRegime",
    "CycleEnergies",
    "CycleReport",
    "Device",
    "DriveProtocol",
    "FrequencyPair",
    "LoopCurve",
    "LoopPoint",
    "Method",
    "ObjectiveKind",
    "OptResult",
    "Regime",
    "SweepSpec",
    "VerificationRecord",
]

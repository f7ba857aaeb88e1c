from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict


class DomainError(ValueError):
    """Raised when a parameter lies outside the domain of an operation."""


class InfeasibleError(DomainError):
    """Raised when a configuration cannot operate in the requested mode."""


class UnknownQuantityError(ValueError):
    """Raised for sweep quantities that do not exist or do not match the axis."""


class ConfigError(ValueError):
    """Raised when a config file cannot be read or fails schema validation."""


@dataclass
class NumericFailure(Exception):
    message: str
    quantity: str | None = None
    inputs: Dict[str, Any] = field(default_factory=dict)

    def __str__(self) -> str:
        if self.quantity is None:
            return self.message
        args = ", ".join(f"{k}={v!r}" for k, v in self.inputs.items())
        return f"{self.message} (quantity: {self.quantity}; inputs: {args})"


@dataclass
class OracleFailure(NumericFailure):
    """The numeric oracle could not produce a finite optimum."""


def require_finite(value: float, quantity: str, **inputs: Any) -> float:
    """
    Return `value` unchanged, or raise NumericFailure naming the quantity and
    the inputs that produced a NaN or infinity.
    """
    # NaN fails both comparisons
    if not (-float("inf") < value < float("inf")):
        raise NumericFailure("non-finite value computed", quantity, dict(inputs))
    return value

"""
Config files for the `otto` command line.

A config document mirrors the command-line flags (snake_case keys) and is
applied as argparse defaults, so explicit flags override it.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field

from otto_omega.errors import ConfigError
from otto_omega.schema.validator import (
    InvalidSchemaError,
    SchemaValidationError,
    validate_instance,
)

logger = logging.getLogger(__name__)


class ConfigFile(BaseModel):
    """Every key is optional; unknown keys are rejected."""

    model_config = ConfigDict(extra="forbid")

    beta1: Optional[float] = Field(
        default=None, gt=0, description="Cold bath inverse temperature"
    )
    beta2: Optional[float] = Field(
        default=None, gt=0, description="Hot bath inverse temperature"
    )
    omega1: Optional[float] = Field(
        default=None, gt=0, description="Cold isochore frequency"
    )
    omega2: Optional[float] = Field(
        default=None, gt=0, description="Hot isochore frequency"
    )
    protocol: Optional[Literal["adiabatic", "ss"]] = None
    regime: Optional[Literal["exact", "high", "low"]] = None
    objective: Optional[Literal["omega", "work"]] = None
    method: Optional[Literal["analytic", "numeric", "both"]] = None
    eta_c: Optional[float] = Field(default=None, gt=0, lt=1)
    zeta_c: Optional[float] = Field(default=None, gt=0)
    tau: Optional[float] = Field(default=None, gt=0, lt=1)
    axis: Optional[Literal["eta_c", "zeta_c", "tau"]] = None
    quantity: Optional[List[str]] = Field(default=None, description="Sweep columns")
    figure: Optional[Literal["2", "4", "6"]] = None
    start: Optional[float] = None
    stop: Optional[float] = None
    points: Optional[int] = Field(default=None, ge=2)
    workers: Optional[int] = Field(default=None, ge=1)
    tol: Optional[float] = Field(default=None, gt=0, description="Relative tolerance")
    format: Optional[Literal["csv", "json"]] = None
    out: Optional[str] = Field(default=None, description="Output path")


def config_schema() -> Dict[str, Any]:
    """JSON Schema of a config document."""
    return json.loads(json.dumps(ConfigFile.model_json_schema(), sort_keys=True))


CONFIG_SCHEMA = config_schema()


def load_config(path: str | Path) -> Dict[str, Any]:
    """
    Read a JSON (.json) or YAML (.yaml, .yml) config file and validate it.

    Returns only the keys that are set. Raises ConfigError for unreadable,
    unparseable or schema-invalid files.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read config {path}: {e.strerror}") from e

    suffix = path.suffix.lower()
    try:
        if suffix == ".json":
            document = json.loads(text)
        elif suffix in (".yaml", ".yml"):
            document = yaml.safe_load(text)
        else:
            raise ConfigError(f"config {path} must end in .json, .yaml or .yml")
    except (json.JSONDecodeError, yaml.YAMLError) as e:
        raise ConfigError(f"cannot parse config {path}: {e}") from e

    if document is None:
        document = {}
    try:
        validate_instance(document, CONFIG_SCHEMA)
    except (SchemaValidationError, InvalidSchemaError) as e:
        raise ConfigError(f"{path}: {e}") from e

    config = ConfigFile.model_validate(document).model_dump(exclude_none=True)
    logger.info("loaded %d settings from %s", len(config), path)
    return config

from __future__ import annotations

from typing import Any, Dict, Optional

from jsonschema import Draft7Validator
from jsonschema.exceptions import SchemaError, ValidationError


class SchemaValidationError(ValueError):
    """Raised when a document does not conform to its schema."""


class InvalidSchemaError(ValueError):
    """Raised when the JSON schema itself is invalid."""


def check_schema(schema: Dict[str, Any]) -> Dict[str, Any]:
    """Return `schema` unchanged, or raise InvalidSchemaError."""
    try:
        Draft7Validator.check_schema(schema)
    except SchemaError as e:
        raise InvalidSchemaError(f"Invalid JSON Schema: {e.message}") from e
    return schema


def _first_error(instance: Any, schema: Dict[str, Any]) -> Optional[ValidationError]:
    # deterministic pick: shallowest path, then message
    errors = sorted(
        Draft7Validator(schema).iter_errors(instance),
        key=lambda e: (len(e.path), list(map(str, e.path)), e.message),
    )
    return errors[0] if errors else None


def _path(error: ValidationError) -> Optional[str]:
    return ".".join(str(p) for p in error.path) or None


def _describe(error: ValidationError) -> str:
    path = _path(error)
    return f"Schema validation failed: {error.message}" + (
        f" (path: {path})" if path else ""
    )


def validate_instance(instance: Any, schema: Dict[str, Any]) -> None:
    """
    Validate a config document against a Draft 7 schema.

    The message names the offending key, e.g. "Schema validation failed:
    0 is less than or equal to the minimum of 0 (path: beta2)".
    """
    check_schema(schema)
    error = _first_error(instance, schema)
    if error is not None:
        raise SchemaValidationError(_describe(error))


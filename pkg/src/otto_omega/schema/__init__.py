from __future__ import annotations

from otto_omega.schema.validator import (
    InvalidSchemaError,
    SchemaValidationError,
    check_schema,
    validate_instance,
)

__all__ = [
    "InvalidSchemaError",
    "SchemaValidationError",
    "check_schema",
    "validate_instance",
]

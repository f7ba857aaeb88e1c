from __future__ import annotations

from otto_omega.io.config import CONFIG_SCHEMA, ConfigFile, load_config
from otto_omega.io.tables import (
    dump_json,
    loop_rows,
    read_table,
    write_csv,
    write_json,
    write_table,
)

__all__ = [
    "CONFIG_SCHEMA",
    "ConfigFile",
    "dump_json",
    "load_config",
    "loop_rows",
    "read_table",
    "write_csv",
    "write_json",
    "write_table",
]

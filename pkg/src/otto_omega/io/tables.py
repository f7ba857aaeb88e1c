"""
CSV and JSON tables.

CSV is comma separated with a header row and LF line endings; floats are
written with 17 significant digits so reading them back is bit exact. JSON
tables are lists of flat objects keyed by column name.
"""

from __future__ import annotations

import csv
import json
from typing import Any, List, Literal, Sequence, TextIO, Tuple

from pydantic import BaseModel

from otto_omega.domain.models import LoopCurve
from otto_omega.errors import require_finite

Cell = float | str
TableFormat = Literal["csv", "json"]

LOOP_COLUMNS = ["kind", "z", "efficiency", "work"]


def format_cell(value: Cell) -> str:
    if isinstance(value, str):
        return value
    return format(float(value), ".17g")


def write_csv(
    columns: Sequence[str], rows: Sequence[Sequence[Cell]], out: TextIO
) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_cell(v) for v in row])


def write_json(
    columns: Sequence[str], rows: Sequence[Sequence[Cell]], out: TextIO
) -> None:
    records = [dict(zip(columns, row)) for row in rows]
    out.write(json.dumps(records, indent=2))
    out.write("\n")


def write_table(
    columns: Sequence[str],
    rows: Sequence[Sequence[Cell]],
    out: TextIO,
    fmt: TableFormat = "csv",
) -> None:
    for row in rows:
        for name, value in zip(columns, row):
            if not isinstance(value, str):
                require_finite(float(value), name)
    if fmt == "json":
        write_json(columns, rows, out)
    else:
        write_csv(columns, rows, out)


def _parse_cell(text: str) -> Cell:
    try:
        return float(text)
    except ValueError:
        return text


def read_table(stream: TextIO) -> Tuple[List[str], List[List[Cell]]]:
    """Read a CSV table written by `write_csv`; numeric cells come back as floats."""
    reader = csv.reader(stream)
    columns = next(reader)
    rows = [[_parse_cell(cell) for cell in row] for row in reader if row]
    return columns, rows


def loop_rows(curve: LoopCurve) -> List[List[Cell]]:
    """Loop samples followed by the flagged max-work, max-efficiency and MOF rows."""
    points = [*curve.samples, curve.max_work, curve.max_efficiency, curve.mof]
    return [[p.kind, p.z, p.efficiency, p.work] for p in points]


def dump_json(payload: BaseModel | Any, out: TextIO) -> None:
    """One JSON document; pydantic models are dumped in JSON mode."""
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json")
    out.write(json.dumps(payload, indent=2))
    out.write("\n")

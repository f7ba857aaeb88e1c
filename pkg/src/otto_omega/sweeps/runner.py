from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Sequence

import numpy as np

from otto_omega.domain.models import SweepSpec
from otto_omega.errors import DomainError, require_finite
from otto_omega.sweeps.registry import Quantity, lookup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepTable:
    """Rows in axis order; the first column is the axis value."""

    columns: List[str]
    rows: List[List[float]]


def _row(x: float, quantities: Sequence[Quantity], spec: SweepSpec) -> List[float]:
    row = [x]
    inputs = {spec.axis: x, "beta_hot": spec.beta_hot}
    for quantity in quantities:
        value = float(quantity.compute(np.asarray(x), spec.beta_hot))
        row.append(require_finite(value, quantity.name, **inputs))
    return row


def run_sweep(spec: SweepSpec, *, workers: int = 1) -> SweepTable:
    """
    Evaluate every requested quantity on the spec's grid.

    Rows are independent; with `workers > 1` they are computed on a thread
    pool and still returned in grid order.
    """
    quantities = lookup(spec.axis, spec.quantities)
    for quantity in quantities:
        if not quantity.accepts(spec.start, spec.stop):
            lo, hi = quantity.domain
            raise DomainError(
                f"{quantity.name} needs {spec.axis} in ({lo:g}, {hi:g}), "
                f"got [{spec.start:g}, {spec.stop:g}]"
            )
    if workers < 1:
        raise DomainError("workers must be at least 1")

    grid = spec.grid()
    logger.info(
        "sweeping %d points of %s for %s",
        len(grid),
        spec.axis,
        ", ".join(spec.quantities),
    )
    if workers == 1:
        rows = [_row(x, quantities, spec) for x in grid]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda x: _row(x, quantities, spec), grid))
    return SweepTable(columns=[spec.axis, *spec.quantities], rows=rows)

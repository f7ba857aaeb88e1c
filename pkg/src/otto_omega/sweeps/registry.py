from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple

import numpy as np
from numpy.typing import ArrayLike

from otto_omega.domain.models import SweepAxis
from otto_omega.engine import closed_forms as engine
from otto_omega.errors import UnknownQuantityError
from otto_omega.fridge import closed_forms as fridge

# (axis values, beta_hot) -> values
Compute = Callable[[np.ndarray, float], ArrayLike]


@dataclass(frozen=True)
class Quantity:
    """
    A named sweep column. `domain` is the open interval the closed form is
    defined on; `default_range` is the closed sub-interval swept when the
    caller gives no range.
    """

    name: str
    axis: SweepAxis
    compute: Compute
    domain: Tuple[float, float]
    default_range: Tuple[float, float]
    description: str

    def accepts(self, start: float, stop: float) -> bool:
        lo, hi = self.domain
        return lo < start and stop < hi


ETA_RANGE = (0.01, 0.99)
ZETA_RANGE = (0.05, 20.0)
ZETA_SS_RANGE = (1.05, 20.0)
TAU_RANGE = (0.01, 0.99)
TAU_SS_RANGE = (0.51, 0.99)

_UNIT = (0.0, 1.0)
_POSITIVE = (0.0, math.inf)


def _efficiency(name: str, fn, description: str) -> Quantity:
    return Quantity(name, "eta_c", lambda x, _b: fn(x), _UNIT, ETA_RANGE, description)


QUANTITIES: Dict[str, Quantity] = {
    q.name: q
    for q in [
        _efficiency(
            "emof_ad_highT", engine.eta_omega_high, "EMOF, adiabatic, high temperature"
        ),
        _efficiency(
            "emof_ad_lowT", engine.eta_omega_low, "EMOF, adiabatic, low temperature"
        ),
        _efficiency("emof_ss", engine.eta_omega_ss, "EMOF, sudden switch"),
        _efficiency("emw_ss", engine.eta_work_ss, "EMW, sudden switch"),
        _efficiency(
            "delta",
            lambda eta: engine.eta_omega_ss(eta) - engine.eta_work_ss(eta),
            "emof_ss - emw_ss",
        ),
        _efficiency(
            "emw_ad_highT",
            engine.eta_curzon_ahlborn,
            "EMW, adiabatic, high temperature",
        ),
        _efficiency(
            "emw_ad_lowT", engine.eta_work_low, "EMW, adiabatic, low temperature"
        ),
        _efficiency(
            "eta_max_ss", engine.eta_max_ss, "maximum sudden-switch efficiency"
        ),
        Quantity(
            "cop_mof_highT",
            "zeta_c",
            lambda x, _b: fridge.cop_mof_high(x),
            _POSITIVE,
            ZETA_RANGE,
            "COP at MOF, adiabatic, high temperature",
        ),
        Quantity(
            "cop_mof_lowT",
            "zeta_c",
            lambda x, _b: fridge.cop_mof_low(x),
            _POSITIVE,
            ZETA_RANGE,
            "COP at MOF, adiabatic, low temperature",
        ),
        Quantity(
            "cop_mof_ss",
            "zeta_c",
            lambda x, _b: fridge.cop_mof_ss(x),
            (1.0, math.inf),
            ZETA_SS_RANGE,
            "COP at MOF, sudden switch",
        ),
        Quantity(
            "cop_chi_highT",
            "zeta_c",
            lambda x, _b: fridge.cop_chi_high(x),
            _POSITIVE,
            ZETA_RANGE,
            "COP at maximum chi, adiabatic, high temperature",
        ),
        Quantity(
            "cop_max_ss",
            "zeta_c",
            lambda x, _b: fridge.cop_max_ss(x),
            _POSITIVE,
            ZETA_SS_RANGE,
            "maximum sudden-switch COP (negative below zeta_c = 1)",
        ),
        Quantity(
            "cp_ad_highT",
            "tau",
            fridge.cooling_power_ad_high,
            _UNIT,
            TAU_RANGE,
            "cooling power at MOF, adiabatic, high temperature",
        ),
        Quantity(
            "cp_ad_lowT",
            "tau",
            fridge.cooling_power_ad_low,
            _UNIT,
            TAU_RANGE,
            "cooling power at MOF, adiabatic, low temperature",
        ),
        Quantity(
            "cp_ss",
            "tau",
            fridge.cooling_power_ss,
            (0.5, 1.0),
            TAU_SS_RANGE,
            "cooling power at MOF, sudden switch",
        ),
    ]
}

FIGURE_PRESETS: Dict[str, Tuple[SweepAxis, List[str]]] = {
    "2": ("eta_c", ["emof_ad_highT", "emof_ad_lowT", "emof_ss", "emw_ss", "delta"]),
    "4": ("zeta_c", ["cop_mof_highT", "cop_mof_lowT", "cop_mof_ss", "cop_chi_highT"]),
    "6": ("tau", ["cp_ad_highT", "cp_ad_lowT", "cp_ss"]),
}


def valid_pairs() -> str:
    return ", ".join(f"{q.axis}:{q.name}" for q in QUANTITIES.values())


def lookup(axis: str, names: Sequence[str]) -> List[Quantity]:
    """
    Resolve quantity names for a sweep along `axis`; raises UnknownQuantityError
    listing the valid axis:quantity pairs.
    """
    found = []
    for name in names:
        quantity = QUANTITIES.get(name)
        if quantity is None:
            raise UnknownQuantityError(
                f"unknown quantity {name!r}; valid pairs: {valid_pairs()}"
            )
        if quantity.axis != axis:
            raise UnknownQuantityError(
                f"quantity {name!r} is swept along {quantity.axis}, not {axis}; "
                f"valid pairs: {valid_pairs()}"
            )
        found.append(quantity)
    return found


def default_range(quantities: Sequence[Quantity]) -> Tuple[float, float]:
    """Intersection of the default ranges."""
    start = max(q.default_range[0] for q in quantities)
    stop = min(q.default_range[1] for q in quantities)
    return start, stop

import math

import numpy as np
import pytest
from pydantic import ValidationError

from otto_omega.cycle.core import cycle_report
from otto_omega.cycle.thermo import heat_flows
from otto_omega.domain.models import (
    BathPair,
    Device,
    DriveProtocol,
    FrequencyPair,
    Method,
    Regime,
)
from otto_omega.errors import DomainError, InfeasibleError
from otto_omega.fridge import closed_forms as cf
from otto_omega.fridge.objectives import FridgeObjective, exact_cop_max_ss
from otto_omega.fridge.optimization import (
    cop_mof_adiabatic_high_t,
    cop_mof_adiabatic_low_t,
    cop_mof_ss,
    maximize_fridge,
)

UNIT = BathPair.from_zeta_carnot(1.0)
DOUBLE = BathPair.from_zeta_carnot(2.0)
WALL_PROBES = 1000


def _numeric(protocol, regime, baths, **kwargs):
    return maximize_fridge(FridgeObjective.build(protocol, regime, baths, **kwargs))


class TestAnalyticOptima:
    def test_adiabatic_high_temperature(self):
        result = cop_mof_adiabatic_high_t(UNIT)

        assert result.device == Device.FRIDGE
        assert result.method == Method.ANALYTIC
        assert result.controls["z"] == pytest.approx(0.408248, rel=1e-5)
        assert result.figure_of_merit == pytest.approx(0.689898, rel=1e-6)

    def test_adiabatic_low_temperature(self):
        result = cop_mof_adiabatic_low_t(UNIT)

        assert set(result.controls) == {"omega_1", "omega_2"}
        assert result.figure_of_merit == pytest.approx(0.690704, rel=1e-5)
        assert result.objective_value == pytest.approx(cf.max_omega_fridge_low(1.0))

    def test_sudden_switch(self):
        result = cop_mof_ss(DOUBLE)

        assert result.controls["z"] ** 2 == pytest.approx(0.151996, rel=1e-5)
        assert result.figure_of_merit == pytest.approx(0.0631528, rel=1e-5)

    def test_sudden_switch_rule(self):
        with pytest.raises(InfeasibleError) as excinfo:
            cop_mof_ss(BathPair.from_zeta_carnot(0.8))

        assert str(excinfo.value) == cf.SS_FRIDGE_RULE


class TestNumericAgreement:
    @pytest.mark.parametrize("zeta_c", [0.25, 1.0, 4.0])
    def test_adiabatic_high_temperature(self, zeta_c):
        baths = BathPair.from_zeta_carnot(zeta_c)

        analytic = cop_mof_adiabatic_high_t(baths)
        numeric = _numeric(DriveProtocol.ADIABATIC, Regime.HIGH_T, baths)

        assert numeric.method == Method.NUMERIC
        assert numeric.convergence is not None
        assert numeric.controls["z"] == pytest.approx(
            analytic.controls["z"], abs=1e-8
        )
        assert numeric.figure_of_merit == pytest.approx(
            analytic.figure_of_merit, rel=1e-8
        )

    @pytest.mark.parametrize("zeta_c", [1.5, 2.0, 6.0])
    def test_sudden_switch(self, zeta_c):
        baths = BathPair.from_zeta_carnot(zeta_c)

        analytic = cop_mof_ss(baths)
        numeric = _numeric(DriveProtocol.SUDDEN_SWITCH, Regime.HIGH_T, baths)

        assert numeric.figure_of_merit == pytest.approx(
            analytic.figure_of_merit, rel=1e-8
        )
        assert numeric.objective_value == pytest.approx(
            analytic.objective_value, rel=1e-10
        )

    def test_low_temperature_two_parameter_search(self):
        analytic = cop_mof_adiabatic_low_t(UNIT)

        numeric = _numeric(DriveProtocol.ADIABATIC, Regime.LOW_T, UNIT)

        assert numeric.objective_value == pytest.approx(
            analytic.objective_value, rel=1e-8
        )
        assert numeric.figure_of_merit == pytest.approx(
            analytic.figure_of_merit, rel=1e-6
        )
        for name in ("omega_1", "omega_2"):
            assert numeric.controls[name] == pytest.approx(
                analytic.controls[name], rel=1e-4
            )

    def test_exact_regime_approaches_the_high_temperature_limit(self):
        numeric = _numeric(
            DriveProtocol.ADIABATIC, Regime.EXACT, UNIT, omega_2=0.01
        )

        assert numeric.figure_of_merit == pytest.approx(
            cf.cop_mof_high(1.0), rel=1e-3
        )


class TestFridgeObjective:
    def test_sudden_switch_bound(self):
        objective = FridgeObjective.build(
            DriveProtocol.SUDDEN_SWITCH, Regime.HIGH_T, DOUBLE
        )

        assert objective.zeta_max == pytest.approx(cf.cop_max_ss(2.0))
        assert objective.ratio_domain() == pytest.approx((0.0, math.sqrt(1.0 / 3.0)))
        assert objective.name == "fridge-omega-ss-high"

    def test_sudden_switch_needs_tau_above_one_half(self):
        with pytest.raises(InfeasibleError) as excinfo:
            FridgeObjective.build(
                DriveProtocol.SUDDEN_SWITCH, Regime.HIGH_T, BathPair.from_tau(0.4)
            )

        assert str(excinfo.value) == cf.SS_FRIDGE_RULE

    def test_exact_sudden_switch_bound_is_found_numerically(self):
        zeta_max = exact_cop_max_ss(DOUBLE, omega_2=0.01)

        assert zeta_max == pytest.approx(cf.cop_max_ss(2.0), rel=1e-2)

    def test_exact_sudden_switch_without_cooling(self):
        with pytest.raises(InfeasibleError):
            exact_cop_max_ss(BathPair.from_tau(0.3), omega_2=0.01)

    def test_feasibility_is_refrigerator_mode(self):
        objective = FridgeObjective.build(DriveProtocol.ADIABATIC, Regime.HIGH_T, UNIT)

        assert objective.feasible(0.3, 1.0)
        assert not objective.feasible(0.7, 1.0)
        assert objective.figure_of_merit(0.25, 1.0) == pytest.approx(1.0 / 3.0)

    def test_rejects_bounds_above_carnot(self):
        with pytest.raises(ValidationError) as excinfo:
            FridgeObjective(
                protocol=DriveProtocol.ADIABATIC,
                regime=Regime.HIGH_T,
                baths=UNIT,
                zeta_max=1.5,
            )

        assert "Carnot COP" in str(excinfo.value)

    def test_rejects_unsupported_family(self):
        with pytest.raises(DomainError):
            FridgeObjective.build(DriveProtocol.SUDDEN_SWITCH, Regime.LOW_T, DOUBLE)


class TestFeasibilityWall:
    def test_sudden_switch_cools_only_above_tau_one_half(self):
        rng = np.random.default_rng(11)
        distances = 10.0 ** rng.uniform(-8.0, -1.0, WALL_PROBES)
        sides = rng.choice([-1.0, 1.0], WALL_PROBES)
        zs = np.linspace(0.0, 1.0, 202)[1:-1]

        misclassified = []
        for distance, side in zip(distances, sides):
            tau = 0.5 + float(side * distance)
            baths = BathPair.from_tau(tau)
            if side > 0:
                # midpoint of the cooling window (0, sqrt(2 tau - 1))
                z = 0.5 * math.sqrt(2.0 * tau - 1.0)
                report = cycle_report(
                    baths,
                    FrequencyPair(omega_1=z, omega_2=1.0),
                    DriveProtocol.SUDDEN_SWITCH,
                    Regime.HIGH_T,
                )
                cools = report.fridge_mode
            else:
                _, q_cold = heat_flows(
                    baths.beta_cold,
                    baths.beta_hot,
                    zs,
                    1.0,
                    DriveProtocol.SUDDEN_SWITCH,
                    Regime.HIGH_T,
                )
                cools = bool(np.any(q_cold > 0.0))
            if cools != (side > 0):
                misclassified.append(tau)

        assert misclassified == []

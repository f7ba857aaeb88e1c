import math

import numpy as np
import pytest

from otto_omega.engine import closed_forms as cf
from otto_omega.errors import DomainError


class TestAdiabaticHighTemperature:
    def test_efficiency_at_maximum_omega(self):
        expected = 1.0 - math.sqrt(0.375)

        assert cf.eta_omega_high(0.5) == pytest.approx(expected, rel=1e-14)
        assert cf.eta_omega_high(0.5) == pytest.approx(0.387628, rel=1e-6)

    def test_endpoints(self):
        assert cf.eta_omega_high(0.0) == 0.0
        assert cf.eta_omega_high(1.0) == pytest.approx(1.0)
        assert cf.eta_curzon_ahlborn(0.0) == 0.0

    def test_control_maximises_omega(self):
        tau = 0.5
        z_star = cf.emof_high_t_control(tau)

        assert z_star == pytest.approx(math.sqrt(0.375))
        for z in (z_star - 1e-3, z_star + 1e-3):
            assert cf.omega_high_t(z, tau) < cf.omega_high_t(z_star, tau)

    def test_omega_from_work_and_heat(self):
        z, tau = 0.8, 0.5
        q_hot = (z - tau) / z

        omega = cf.omega_engine(cf.work_high_t(z, tau), q_hot, 1.0 - tau)

        assert omega == pytest.approx(-0.0375, rel=1e-12)
        assert omega == pytest.approx(cf.omega_high_t(z, tau), rel=1e-12)

    def test_curzon_ahlborn(self):
        expected = 1.0 - math.sqrt(0.5)

        assert cf.eta_curzon_ahlborn(0.5) == pytest.approx(expected, rel=1e-14)

    def test_work_vanishes_on_the_positive_work_boundary(self):
        assert cf.work_high_t(0.5, 0.5) == 0.0
        assert cf.work_high_t(1.0, 0.5) == 0.0
        assert cf.work_high_t(0.75, 0.5, beta_hot=2.0) == pytest.approx(
            0.25 * 0.25 / 1.5
        )

    def test_rejects_out_of_range(self):
        with pytest.raises(DomainError) as excinfo:
            cf.eta_omega_high(1.5)

        assert "eta_c" in str(excinfo.value)
        with pytest.raises(DomainError):
            cf.work_high_t(0.0, 0.5)


class TestAdiabaticLowTemperature:
    def test_maximum_work_controls(self):
        omega_1, omega_2 = cf.max_work_low_t_controls(0.5)

        assert omega_1 == pytest.approx(0.5 + math.log(2.0), rel=1e-12)
        assert omega_2 == pytest.approx(1.0 + math.log(2.0), rel=1e-12)

    def test_maximum_work_matches_the_work_function(self):
        omega_1, omega_2 = cf.max_work_low_t_controls(0.5)

        work = cf.work_low_t(omega_1, omega_2, beta_cold=2.0, beta_hot=1.0)

        assert cf.max_work_low(0.5) == pytest.approx(0.125 / math.e, rel=1e-12)
        assert work == pytest.approx(cf.max_work_low(0.5), rel=1e-12)
        assert cf.max_work_low(0.5, beta_hot=4.0) == pytest.approx(0.125 / math.e / 4.0)

    def test_efficiencies(self):
        assert cf.eta_work_low(0.5) == pytest.approx(0.25 / (0.5 + 0.5 * math.log(2.0)))
        assert cf.eta_omega_low(0.5) == pytest.approx(0.388050, rel=1e-5)
        assert cf.eta_omega_low(1.0) == 1.0

    def test_omega_controls_reproduce_the_efficiency(self):
        eta_c = 0.3
        omega_1, omega_2 = cf.omega_low_t_controls(eta_c)

        # adiabatic efficiency is 1 - w1 / w2
        efficiency = 1.0 - omega_1 / omega_2

        assert efficiency == pytest.approx(cf.eta_omega_low(eta_c), rel=1e-12)

    @pytest.mark.parametrize(
        "efficiency", [cf.eta_work_low, cf.eta_omega_low, cf.eta_omega_high]
    )
    def test_series_branch_joins_the_closed_form(self, efficiency):
        below = efficiency(cf.SERIES_BELOW * (1.0 - 1e-9))
        above = efficiency(cf.SERIES_BELOW * (1.0 + 1e-9))

        assert below == pytest.approx(above, rel=1e-7)
        assert efficiency(0.0) == 0.0

    def test_controls_are_finite_near_equilibrium(self):
        omega_1, omega_2 = cf.max_work_low_t_controls(1e-9)

        assert omega_1 == pytest.approx(2.0, rel=1e-8)
        assert omega_2 == pytest.approx(2.0, rel=1e-8)


class TestSuddenSwitch:
    def test_work_and_efficiency(self):
        expected = 0.2775 * 0.2225 / 1.445

        assert cf.work_ss(0.85, 0.5) == pytest.approx(expected, rel=1e-12)
        assert cf.eta_ss(0.85, 0.5) == pytest.approx(0.105771, rel=1e-5)

    def test_positive_work_boundaries(self):
        assert cf.work_ss(math.sqrt(0.5), 0.5) == pytest.approx(0.0, abs=1e-15)
        assert cf.work_ss(1.0, 0.5) == 0.0
        assert cf.eta_ss(1.0, 0.5) == 0.0

    def test_efficiency_bound(self):
        assert cf.eta_max_ss(0.5) == pytest.approx(1.0 / 9.0, rel=1e-14)
        assert cf.eta_max_ss(0.0) == 0.0
        assert cf.eta_max_ss(1.0) == 0.5

    def test_efficiency_bound_never_exceeds_one_half(self):
        grid = np.linspace(0.0, 1.0, 10_001)

        assert np.all(cf.eta_max_ss(grid) <= 0.5)
        assert np.all(np.diff(cf.eta_max_ss(grid)) >= 0.0)

    def test_efficiency_bound_is_reached_at_its_control(self):
        tau = 0.5
        z = cf.max_efficiency_ss_control(tau)

        assert cf.eta_ss(z, tau) == pytest.approx(cf.eta_max_ss(1.0 - tau), rel=1e-12)

    def test_maximum_omega(self):
        assert cf.eta_omega_ss(0.5) == pytest.approx(0.110318, rel=1e-5)
        assert cf.eta_omega_ss(0.5) <= cf.eta_max_ss(0.5)
        assert cf.eta_omega_ss(1.0) == 0.5
        assert cf.eta_omega_ss(0.0) == 0.0

    def test_maximum_omega_efficiency_matches_its_control(self):
        for tau in (0.2, 0.5, 0.8):
            z = cf.emof_ss_control(tau)

            expected = cf.eta_omega_ss(1.0 - tau)

            assert cf.eta_ss(z, tau) == pytest.approx(expected, rel=1e-8)

    def test_maximum_work(self):
        tau = 0.5
        z = cf.max_work_ss_control(tau)

        assert z == pytest.approx(0.5**0.25)
        assert cf.eta_work_ss(0.5) == pytest.approx(0.108194, rel=1e-5)
        assert cf.eta_ss(z, tau) == pytest.approx(cf.eta_work_ss(0.5), rel=1e-12)

    def test_figure_ordering(self):
        eta_c = np.linspace(0.05, 0.95, 19)

        assert np.all(cf.eta_work_ss(eta_c) < cf.eta_omega_ss(eta_c))
        assert np.all(cf.eta_omega_ss(eta_c) < cf.eta_max_ss(eta_c))

    def test_reference_efficiencies(self):
        refs = cf.reference_efficiencies(0.5)

        assert refs.curzon_ahlborn == pytest.approx(cf.eta_curzon_ahlborn(0.5))
        assert refs.work_ss == pytest.approx(cf.eta_work_ss(0.5))

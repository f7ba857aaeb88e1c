import math

import numpy as np
import pytest

from otto_omega.errors import DomainError, OracleFailure
from otto_omega.oracle import (
    ScalarProblem1D,
    ScalarProblem2D,
    fit_series,
    golden_section,
    maximize_1d,
    maximize_2d,
    second_derivative,
)


class TestGoldenSection:
    def test_finds_interior_maximum(self):
        x, fx, iterations, width = golden_section(
            lambda x: -((x - 0.25) ** 2), 0.0, 1.0, 1e-10
        )

        assert x == pytest.approx(0.25, abs=1e-9)
        assert fx == pytest.approx(0.0, abs=1e-18)
        assert iterations > 0
        assert width < 2e-10

    def test_infeasible_points_lose_every_comparison(self):
        def score(x):
            return None if x > 0.5 else x

        x, fx, _, _ = golden_section(score, 0.0, 1.0, 1e-12)

        assert x <= 0.5
        assert x == pytest.approx(0.5, abs=1e-9)


class TestMaximize1D:
    def test_quadratic_with_offset(self):
        problem = ScalarProblem1D(
            objective=lambda x: 2.0 - (x - 0.3) ** 2, domain=(0.0, 1.0)
        )

        best = maximize_1d(problem)

        assert best.x == pytest.approx(0.3, abs=1e-8)
        assert best.value == pytest.approx(2.0, abs=1e-15)
        assert best.at_boundary is False
        assert best.plateau is False
        assert best.evaluations > problem.grid_points

    def test_maximum_at_the_domain_edge_is_flagged(self):
        best = maximize_1d(ScalarProblem1D(objective=lambda x: x, domain=(0.0, 1.0)))

        assert best.at_boundary is True
        assert best.x > 0.999
        assert best.convergence().at_boundary is True

    def test_respects_the_feasibility_mask(self):
        problem = ScalarProblem1D(
            objective=lambda x: -((x - 0.8) ** 2),
            domain=(0.0, 1.0),
            feasible=lambda x: x < 0.5,
        )

        best = maximize_1d(problem)

        assert best.x < 0.5
        assert best.x == pytest.approx(0.5, abs=1e-9)

    def test_non_finite_values_are_infeasible(self):
        # NaN below x = 0.5
        problem = ScalarProblem1D(
            objective=lambda x: np.sqrt(x - 0.5) * (1.0 - x), domain=(0.0, 1.0)
        )

        best = maximize_1d(problem)

        assert best.x == pytest.approx(2.0 / 3.0, abs=1e-8)
        assert best.value == pytest.approx(math.sqrt(1.0 / 6.0) / 3.0, rel=1e-12)

    def test_plateau_reports_the_smallest_control(self):
        problem = ScalarProblem1D(objective=lambda x: 0.0 * x + 1.0, domain=(0.0, 1.0))

        best = maximize_1d(problem)

        assert best.plateau is True
        assert best.x == pytest.approx(1.0 / (problem.grid_points + 1))

    def test_all_infeasible_raises(self):
        problem = ScalarProblem1D(
            objective=lambda x: x,
            domain=(0.0, 1.0),
            feasible=lambda x: x < 0.0,
            name="never feasible",
        )

        with pytest.raises(OracleFailure) as excinfo:
            maximize_1d(problem)

        assert excinfo.value.quantity == "never feasible"
        assert "infeasible on the whole grid" in str(excinfo.value)

    def test_rejects_bad_problems(self):
        with pytest.raises(DomainError):
            ScalarProblem1D(objective=lambda x: x, domain=(1.0, 0.0))
        with pytest.raises(DomainError):
            ScalarProblem1D(objective=lambda x: x, domain=(0.0, 1.0), tolerance=0.0)
        with pytest.raises(DomainError):
            ScalarProblem1D(objective=lambda x: x, domain=(0.0, math.inf))


class TestMaximize2D:
    def test_coupled_quadratic(self):
        def objective(x, y):
            return 1.0 - (x - 1.0) ** 2 - (y - 2.0) ** 2 - 0.5 * (x - 1.0) * (y - 2.0)

        best = maximize_2d(
            ScalarProblem2D(objective=objective, domain=((0.0, 3.0), (0.0, 4.0)))
        )

        assert best.x[0] == pytest.approx(1.0, abs=1e-6)
        assert best.x[1] == pytest.approx(2.0, abs=1e-6)
        assert best.value == pytest.approx(1.0, abs=1e-10)
        assert best.at_boundary is False

    def test_all_infeasible_raises(self):
        problem = ScalarProblem2D(
            objective=lambda x, y: x + y,
            domain=((0.0, 1.0), (0.0, 1.0)),
            feasible=lambda x, y: x + y > 5.0,
        )

        with pytest.raises(OracleFailure):
            maximize_2d(problem)

    def test_rejects_degenerate_rectangle(self):
        with pytest.raises(DomainError):
            ScalarProblem2D(objective=lambda x, y: x, domain=((0.0, 1.0), (2.0, 2.0)))


class TestSeries:
    def test_recovers_polynomial_coefficients(self):
        fit = fit_series(lambda x: x / 2 + x**2 / 8, order=2, scale=0.1)

        assert fit.coefficients[0] == 0.0
        assert fit.coefficients[1] == pytest.approx(0.5, abs=1e-10)
        assert fit.coefficients[2] == pytest.approx(0.125, abs=1e-8)
        assert fit.residual < 1e-14
        assert fit.ill_conditioned is False

    def test_limit_is_passed_through(self):
        fit = fit_series(
            lambda x: 2.0 / 3.0 + x / 18.0, order=1, scale=0.01, limit=2.0 / 3.0
        )

        assert fit.coefficients[0] == 2.0 / 3.0
        assert fit.coefficients[1] == pytest.approx(1.0 / 18.0, abs=1e-8)

    def test_samples_stay_inside_the_interval(self):
        fit = fit_series(math.expm1, order=3, scale=0.05)

        assert all(0.0 < x < 0.05 for x in fit.sample_points)

    def test_rejects_bad_orders(self):
        with pytest.raises(DomainError):
            fit_series(math.expm1, order=5, scale=0.1)
        with pytest.raises(DomainError):
            fit_series(math.expm1, order=2, scale=0.0)


def test_second_derivative_of_cubic():
    assert second_derivative(lambda x: x**3, 1.0, 1e-3) == pytest.approx(6.0, rel=1e-5)
    assert second_derivative(lambda x: None, 1.0, 1e-3) is None

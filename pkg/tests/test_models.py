import unittest

from pydantic import ValidationError

from otto_omega.domain.models import (
    BathPair,
    Convergence,
    Device,
    DriveProtocol,
    FrequencyPair,
    Method,
    ObjectiveKind,
    OptResult,
    Regime,
    SweepSpec,
    VerificationRecord,
)


class TestBathPair(unittest.TestCase):

    def test_derived_quantities(self):
        baths = BathPair(beta_cold=2.0, beta_hot=1.0)

        self.assertEqual(baths.tau, 0.5)
        self.assertEqual(baths.eta_carnot, 0.5)
        self.assertEqual(baths.zeta_carnot, 1.0)

    def test_cold_bath_must_be_colder(self):
        with self.assertRaises(ValidationError) as ctx:
            BathPair(beta_cold=1.0, beta_hot=1.0)

        self.assertIn("beta_cold must exceed beta_hot", str(ctx.exception))

    def test_rejects_non_positive_and_non_finite(self):
        with self.assertRaises(ValidationError):
            BathPair(beta_cold=2.0, beta_hot=0.0)
        with self.assertRaises(ValidationError):
            BathPair(beta_cold=float("inf"), beta_hot=1.0)

    def test_constructors_from_carnot_figures(self):
        self.assertAlmostEqual(BathPair.from_eta_carnot(0.25).tau, 0.75)
        self.assertAlmostEqual(BathPair.from_zeta_carnot(2.0).tau, 2.0 / 3.0)
        self.assertAlmostEqual(BathPair.from_tau(0.5, beta_hot=3.0).beta_cold, 6.0)

    def test_constructors_reject_out_of_range(self):
        with self.assertRaises(ValueError):
            BathPair.from_eta_carnot(1.0)
        with self.assertRaises(ValueError):
            BathPair.from_zeta_carnot(0.0)
        with self.assertRaises(ValueError):
            BathPair.from_tau(1.5)

    def test_is_frozen(self):
        baths = BathPair(beta_cold=2.0, beta_hot=1.0)

        with self.assertRaises(ValidationError):
            baths.beta_hot = 0.5


class TestFrequencyPair(unittest.TestCase):

    def test_ratio(self):
        freqs = FrequencyPair.from_ratio(0.25, omega_2=4.0)

        self.assertEqual(freqs.omega_1, 1.0)
        self.assertEqual(freqs.z, 0.25)

    def test_rejects_zero_frequency(self):
        with self.assertRaises(ValidationError):
            FrequencyPair(omega_1=0.0, omega_2=1.0)


class TestOptResult(unittest.TestCase):

    def _result(self, **overrides):
        fields = dict(
            device=Device.ENGINE,
            objective=ObjectiveKind.OMEGA,
            protocol=DriveProtocol.ADIABATIC,
            regime=Regime.HIGH_T,
            tau=0.5,
            beta_hot=1.0,
            controls={"z": 0.6},
            objective_value=0.1,
            figure_of_merit=0.4,
            method=Method.ANALYTIC,
        )
        fields.update(overrides)
        return OptResult(**fields)

    def test_analytic_result_has_no_convergence(self):
        result = self._result()

        self.assertIsNone(result.convergence)
        self.assertEqual(result.model_dump(mode="json")["protocol"], "adiabatic")

    def test_numeric_result_requires_convergence(self):
        with self.assertRaises(ValidationError):
            self._result(method=Method.NUMERIC)

        convergence = Convergence(
            iterations=3, evaluations=40, achieved_tolerance=1e-12
        )
        result = self._result(method=Method.NUMERIC, convergence=convergence)

        self.assertFalse(result.convergence.at_boundary)


class TestSweepSpec(unittest.TestCase):

    def test_grid_hits_both_ends_exactly(self):
        spec = SweepSpec(
            axis="eta_c", quantities=["emof_ss"], start=0.1, stop=0.9, count=7
        )

        grid = spec.grid()

        self.assertEqual(len(grid), 7)
        self.assertEqual(grid[0], 0.1)
        self.assertEqual(grid[-1], 0.9)
        self.assertEqual(grid, sorted(grid))

    def test_rejects_bad_specs(self):
        with self.assertRaises(ValidationError):
            SweepSpec(axis="eta_c", quantities=["emof_ss"], start=0.5, stop=0.5)
        with self.assertRaises(ValidationError):
            SweepSpec(axis="eta_c", quantities=[], start=0.1, stop=0.5)
        with self.assertRaises(ValidationError):
            SweepSpec(axis="eta_c", quantities=["delta", "delta"], start=0.1, stop=0.5)
        with self.assertRaises(ValidationError):
            SweepSpec(axis="beta", quantities=["delta"], start=0.1, stop=0.5)
        with self.assertRaises(ValidationError):
            SweepSpec(axis="tau", quantities=["cp_ss"], start=0.6, stop=0.9, count=1)


class TestVerificationRecord(unittest.TestCase):

    def test_compare_passes_on_either_tolerance(self):
        record = VerificationRecord.compare(
            "engine", "case", 1.0, 1.0 + 1e-10, tol_rel=1e-8, tol_abs=0.0
        )

        self.assertTrue(record.passed)
        self.assertAlmostEqual(record.rel_err, 1e-10, places=15)

    def test_zero_analytic_value_falls_back_to_absolute_error(self):
        record = VerificationRecord.compare(
            "fridge", "case", 0.0, 1e-3, tol_rel=1e-8, tol_abs=1e-10
        )

        self.assertFalse(record.passed)
        self.assertEqual(record.rel_err, record.abs_err)

    def test_nan_numeric_value_fails(self):
        record = VerificationRecord.compare(
            "taylor", "case", 0.5, float("nan"), tol_rel=1.0, tol_abs=1.0
        )

        self.assertFalse(record.passed)

    def test_pass_flag_must_match_tolerances(self):
        with self.assertRaises(ValidationError):
            VerificationRecord(
                suite="engine",
                case_id="case",
                analytic_value=1.0,
                numeric_value=2.0,
                abs_err=1.0,
                rel_err=1.0,
                tol_abs=0.0,
                tol_rel=1e-8,
                passed=True,
            )


if __name__ == "__main__":
    unittest.main()

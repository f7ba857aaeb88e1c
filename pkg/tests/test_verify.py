import pytest

from otto_omega.errors import DomainError
from otto_omega.verify.suites import (
    SUITES,
    TAYLOR_TOLERANCE,
    run_suite,
    taylor_suite,
)


class TestTaylorSuite:
    def test_passes(self):
        report = run_suite("taylor")

        failed = [r.case_id for r in report.records if not r.passed]
        assert failed == []
        assert report.passed
        assert report.failures == 0

    def test_records_carry_the_series_tolerance(self):
        records = taylor_suite(1e-12)

        coefficients = [
            r for r in records if ":c" in r.case_id and "gap" not in r.case_id
        ]
        assert coefficients
        assert all(r.tol_abs == TAYLOR_TOLERANCE for r in coefficients)
        assert {r.suite for r in records} == {"taylor"}

    def test_covers_every_family(self):
        case_ids = {r.case_id for r in taylor_suite()}

        for family in ("emw_low", "emw_high", "emof_low", "emof_high"):
            assert f"{family}:c1" in case_ids
        assert "cop_mof_high:c0" in case_ids
        assert "cop_max_ss:slope" in case_ids


class TestRunSuite:
    def test_unknown_suite(self):
        with pytest.raises(DomainError) as excinfo:
            run_suite("quantum")

        assert "choose from all, engine, fridge, taylor" in str(excinfo.value)

    def test_tolerance_must_be_positive(self):
        with pytest.raises(DomainError):
            run_suite("taylor", tol_rel=0.0)

    def test_suite_names(self):
        assert list(SUITES) == ["engine", "fridge", "taylor"]


@pytest.mark.slow
class TestOracleSuites:
    @pytest.mark.parametrize("name", ["engine", "fridge"])
    def test_suite_passes(self, name):
        report = run_suite(name, tol_rel=1e-6)

        failed = [(r.case_id, r.rel_err) for r in report.records if not r.passed]
        assert failed == []
        assert len(report.records) > 100

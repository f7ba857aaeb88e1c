from __future__ import annotations

from otto_omega.verify.suites import SUITES, SuiteReport, run_suite

__all__ = ["SUITES", "SuiteReport", "run_suite"]

"""Property suites behind `verify all`."""

from .suite import CHECKS, CheckResult, SuiteReport, run_suite

__all__ = ["CHECKS", "CheckResult", "SuiteReport", "run_suite"]

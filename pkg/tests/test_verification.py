import pytest

from src.error_handling import VerificationFailedException
from src.verification import CHECKS, CheckResult, SuiteReport, run_suite

QUICK = ["integer_demo", "zero_ideal_finite", "maximal_containment", "reduction_soundness", "infinite_witness"]


class TestSuite:
    def test_quick_checks_pass(self):
        report = run_suite(QUICK)

        assert report.failed == 0
        assert [r.name for r in report.results] == QUICK
        assert all(r.cases > 0 for r in report.results)

    def test_unknown_check(self):
        with pytest.raises(VerificationFailedException):
            run_suite(["no_such_check"])

    def test_report_is_deterministic(self):
        assert run_suite(QUICK, seed=5).to_dict() == run_suite(QUICK, seed=5).to_dict()

    def test_summary(self):
        report = SuiteReport([CheckResult("a", True, 3), CheckResult("b", False, error="boom")])

        assert report.passed == 1
        assert report.failed == 1
        assert report.summary().splitlines() == ["PASS a (3 cases)", "FAIL b (0 cases): boom", "1 passed, 1 failed"]
        assert "duration" not in report.to_dict()["checks"][0]

    def test_failing_check_is_reported(self, monkeypatch):
        def broken(rng):
            raise AssertionError("law violated")

        monkeypatch.setitem(CHECKS, "broken", broken)
        report = run_suite(["broken"])

        assert report.failed == 1
        assert "law violated" in report.results[0].error


@pytest.mark.slow
class TestFullSuite:
    """Every acceptance check, with the default seed"""

    @pytest.mark.parametrize("name", list(CHECKS))
    def test_check_passes(self, name):
        report = run_suite([name])

        assert report.failed == 0, report.summary()

    def test_verify_all_through_cli(self):
        import io

        from src.cli import Output, Session, run_source

        output = Output(io.StringIO(), io.StringIO())

        assert run_source("verify all", Session(), output) == 0
        assert output.out.getvalue().splitlines()[-1] == f"{len(CHECKS)} passed, 0 failed"

"""
Unit Tests for the Command-Line Application

Tests argument parsing, exit codes, report writing and verb dispatch.
"""

import json

from unittest.mock import patch

from app import EXIT_FAILED, EXIT_OK, EXIT_USAGE, _print_line, build_parser, main
from config import SuiteConfig
from services.suite_service import CheckResult, Report, SuiteReport


def _report(passed=True):
    check = CheckResult(name="liealg.killing_oracle", anchor="", tol=1e-8, max_residual=0.0, passed=passed)
    return Report(
        config=SuiteConfig(suites=["liealg"]),
        calibrated_sign=1,
        suites=[SuiteReport(suite="liealg", checks=[check], wall_time=0.1)],
        passed=passed,
    )


class TestParser:
    """Test the argument parser."""

    def test_verify_defaults(self):
        args = build_parser().parse_args(["verify"])
        assert args.suite == ["all"]
        assert args.theta == []
        assert args.report is None

    def test_theta_list(self):
        args = build_parser().parse_args(["verify", "--n", "4", "--theta", "1", "3"])
        assert args.theta == [1, 3]


class TestExitCodes:
    """Test the mapping of outcomes to exit codes."""

    @patch("app.SuiteService.run_suite")
    def test_passing_run(self, mock_run):
        mock_run.return_value = _report(passed=True)
        assert main(["verify", "--suite", "liealg"]) == EXIT_OK
        cfg = mock_run.call_args.args[0]
        assert cfg.suites == ["liealg"]

    @patch("app.SuiteService.run_suite")
    def test_failing_run(self, mock_run):
        mock_run.return_value = _report(passed=False)
        assert main(["verify"]) == EXIT_FAILED

    @patch("app.SuiteService.run_suite")
    def test_suite_verb_runs_one_suite(self, mock_run):
        mock_run.return_value = _report()
        assert main(["cotangent", "verify", "--samples", "3"]) == EXIT_OK
        assert mock_run.call_args.args[0].suites == ["cotangent"]

    @patch("app.SuiteService.run_suite")
    def test_report_file(self, mock_run, tmp_path):
        mock_run.return_value = _report()
        path = tmp_path / "out" / "report.json"
        assert main(["verify", "--report", str(path)]) == EXIT_OK
        data = json.loads(path.read_text(encoding="utf-8"))
        assert data["passed"] is True
        assert data["suites"][0]["checks"][0]["pass"] is True

    @patch("app.SuiteService.run_suite")
    def test_bare_report_name_goes_to_reports_dir(self, mock_run, tmp_path):
        """A file name without a directory lands in REPORTS_DIR."""
        mock_run.return_value = _report()
        with patch("app.REPORTS_DIR", tmp_path):
            assert main(["verify", "--report", "run.json"]) == EXIT_OK
        assert (tmp_path / "run.json").exists()

    def test_invalid_configuration(self):
        assert main(["verify", "--n", "3", "--theta", "1", "2"]) == EXIT_USAGE

    def test_unknown_verb(self):
        assert main(["frobnicate"]) == EXIT_USAGE

    def test_kernel_error(self):
        assert main(["orbit", "factorize", "--matrix", "[[2, 0], [0, -2]]"]) == EXIT_FAILED


class TestOutput:
    """Test what the CLI prints."""

    def test_json_line(self, capsys):
        _print_line(CheckResult(name="rep.a", anchor="x", tol=0.0, max_residual=0.0, passed=True))
        line = capsys.readouterr().out.strip()
        assert json.loads(line)["pass"] is True

    def test_fixed_points(self, capsys):
        assert main(["lagrangian", "fixed-points", "--count", "25"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["r"]["spurious"] == 0

    def test_factorize(self, capsys):
        assert main(["orbit", "factorize", "--matrix", "[[1, 1], [0, -1]]"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert set(data) == {"k", "X", "Y"}

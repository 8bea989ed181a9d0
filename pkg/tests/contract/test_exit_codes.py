"""Contract tests for exit codes.

0: every verdict passed; 1: a verdict failed or errored; 2: the request was
unusable (bad type, size out of range, malformed roots, unknown options).
"""

import pytest

from tests.test_utils import json_report, run_dtlbench

pytestmark = pytest.mark.contract


class TestExitCodeContract:

    def test_success(self):
        result = run_dtlbench(["rank", "--algebra", "tl", "--m", "2", "--json"])

        assert result.returncode == 0, result.stderr
        assert json_report(result)["summary"]["failed"] == 0

    @pytest.mark.parametrize(
        "args",
        [
            ["rank", "--algebra", "dtlB", "--n", "1"],
            ["rank", "--algebra", "dtlC", "--n", "7"],
            ["rank", "--algebra", "tl"],
            ["verify", "--suite", "dtl", "--type", "D4"],
            ["verify", "--suite", "hat", "--n", "12"],
            ["orbit", "--type", "A4", "--seed", "a1,a2"],
            ["orbit", "--type", "A4", "--seed", "a1+b2"],
            ["closure", "--type", "D4", "--roots", "a9"],
            ["rootsys", "--type", "G2"],
            ["iso-check", "--n", "0"],
            ["census", "--n", "5"],
            ["rank", "--algebra", "nope", "--n", "2"],
        ],
    )
    def test_unusable_requests_exit_2(self, args):
        result = run_dtlbench(args)

        assert result.returncode == 2, f"{args}: {result.returncode} {result.stderr}"
        assert result.stdout == "", "no report is written for unusable requests"
        assert "Error" in result.stderr

    def test_failed_step_exits_1(self, tmp_path):
        plan = tmp_path / "plan.yaml"
        plan.write_text("steps:\n  - action: verify\n    suite: height\n    type: A5\n", encoding="utf-8")

        result = run_dtlbench(["run", "--plan", str(plan), "--json"])

        assert result.returncode == 1
        report = json_report(result)
        assert report["summary"]["error"] == 1

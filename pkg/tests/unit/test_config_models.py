"""Unit tests for report and run plan models."""

import pytest
from pydantic import ValidationError

from dtlbench.config.models import (
    Algebra,
    CheckStatus,
    CheckVerdict,
    PlanAction,
    PlanSettings,
    PlanStep,
    ReportSummary,
    RunPlan,
    RunReport,
)
from dtlbench.constants import REPORT_SCHEMA_VERSION


class TestCheckVerdict:

    def test_compare(self):
        assert CheckVerdict.compare("rank", 20, 20).status == CheckStatus.PASS
        failing = CheckVerdict.compare("rank", 20, 19, detail="off by one")
        assert failing.status == CheckStatus.FAIL
        assert failing.detail == "off by one"
        assert not failing.passed

    def test_holds(self):
        verdict = CheckVerdict.holds("planar", 1)
        assert verdict.passed
        assert verdict.actual is True
        assert CheckVerdict.holds("planar", False).status == CheckStatus.FAIL

    def test_name_is_required(self):
        with pytest.raises(ValidationError):
            CheckVerdict(name="")


class TestRunReport:

    def test_summary(self):
        verdicts = [
            CheckVerdict.compare("a", 1, 1),
            CheckVerdict.compare("b", 1, 2),
            CheckVerdict(name="c", status=CheckStatus.SKIP),
            CheckVerdict(name="d", status=CheckStatus.ERROR),
        ]
        summary = ReportSummary.from_verdicts(verdicts)
        assert (summary.passed, summary.failed, summary.skipped, summary.error) == (1, 1, 1, 1)
        assert summary.total == 4

    def test_ok_ignores_skips(self):
        report = RunReport(command="census --n 1")
        report.add_verdict(CheckVerdict.compare("a", 1, 1))
        report.add_verdict(CheckVerdict(name="b", status=CheckStatus.SKIP))
        assert report.ok
        report.extend([CheckVerdict.compare("c", 1, 2)])
        assert not report.ok

    def test_finalize(self):
        report = RunReport(command="rank").finalize()
        assert report.summary == ReportSummary()
        assert report.duration >= 0

    def test_payload_uses_schema_alias(self):
        report = RunReport(command="rank --algebra dtlC --n 2")
        report.add_verdict(CheckVerdict.compare("rank", 6, 6))
        payload = report.finalize().to_payload()
        assert payload["schema"] == REPORT_SCHEMA_VERSION
        assert "schema_version" not in payload
        assert payload["verdicts"][0]["status"] == "pass"
        assert payload["summary"]["passed"] == 1
        assert isinstance(payload["started_at"], str)


class TestPlanStep:

    def test_rank_step(self):
        step = PlanStep(action="rank", algebra="dtlC", n=3)
        assert step.algebra is Algebra.DTL_C
        assert step.title == "rank dtlC n=3"

    def test_rank_step_needs_the_right_size(self):
        with pytest.raises(ValidationError):
            PlanStep(action="rank", algebra="brA", n=3)
        with pytest.raises(ValidationError):
            PlanStep(action="rank", algebra="tl", m=3, n=3)
        with pytest.raises(ValidationError):
            PlanStep(action="rank", n=3)

    def test_verify_step_uses_type_alias(self):
        step = PlanStep(**{"action": "verify", "suite": "dtl", "type": "C3"})
        assert step.type_label == "C3"
        assert step.title == "verify dtl C3"

    def test_verify_step_validation(self):
        with pytest.raises(ValidationError):
            PlanStep(action="verify", suite="nonexistent", n=3)
        with pytest.raises(ValidationError):
            PlanStep(action="verify", suite="dtl")
        with pytest.raises(ValidationError):
            PlanStep(**{"action": "verify", "suite": "dtl", "type": "c3"})

    def test_other_steps_need_n(self):
        assert PlanStep(action="census", n=2).action is PlanAction.CENSUS
        with pytest.raises(ValidationError):
            PlanStep(action="iso-check")
        with pytest.raises(ValidationError):
            PlanStep(action="census", n=2, algebra="tl")

    def test_explicit_name_wins(self):
        assert PlanStep(action="census", n=1, name="small census").title == "small census"

    def test_sizes_are_positive(self):
        with pytest.raises(ValidationError):
            PlanStep(action="census", n=0)


class TestRunPlan:

    def test_defaults(self):
        plan = RunPlan(steps=[{"action": "census", "n": 1}])
        assert plan.name == "plan"
        assert plan.settings == PlanSettings()
        assert not plan.settings.stop_on_failure

    def test_needs_steps(self):
        with pytest.raises(ValidationError):
            RunPlan(steps=[])

    def test_load_from_file(self, write_plan, monkeypatch):
        monkeypatch.setenv("DTLBENCH_TEST_N", "2")
        path = write_plan(
            """
            name: smoke
            settings:
              max_elements: 5000
            steps:
              - action: census
                n: ${DTLBENCH_TEST_N}
              - action: rank
                algebra: dtlB
                n: ${DTLBENCH_TEST_UNSET:-3}
            """
        )
        plan = RunPlan.load_from_file(path)
        assert plan.name == "smoke"
        assert plan.settings.max_elements == 5000
        assert [step.n for step in plan.steps] == [2, 3]
        assert plan.plan_file_path == path.resolve()

    def test_load_requires_a_mapping(self, write_plan):
        with pytest.raises(ValueError):
            RunPlan.load_from_file(write_plan("- just\n- a list\n"))

    def test_unknown_variables_stay_as_written(self):
        assert RunPlan._substitute_env_vars("n: ${DTLBENCH_SURELY_UNSET_VAR}") == "n: ${DTLBENCH_SURELY_UNSET_VAR}"

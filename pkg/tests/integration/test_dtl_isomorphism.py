"""Integration tests: DTL(C_n) against STL(A_{2n-1}), presentations and the decorated census."""

import json

import pytest

from dtlbench.checks import SuiteContext, SuiteRegistry
from dtlbench.checks.runners import census_outcome, iso_check_outcome
from tests.test_utils import json_report, run_dtlbench

pytestmark = pytest.mark.integration


class TestIsoCheck:

    def test_n3(self):
        outcome = iso_check_outcome(3)
        assert all(v.passed for v in outcome.verdicts)
        assert outcome.verdicts[0].actual == 20
        witnesses = outcome.artifacts["witnesses"]
        assert witnesses["unreachable"] == []
        assert set(witnesses["sizes"]) == {"0", "1", "2", "3"}

    @pytest.mark.slow
    def test_n4(self):
        assert all(v.passed for v in iso_check_outcome(4).verdicts)

    def test_cli_writes_witness_words(self, tmp_path):
        witness_file = tmp_path / "witnesses.json"

        result = run_dtlbench(["iso-check", "--n", "3", "--witnesses", str(witness_file), "--json"])

        assert result.returncode == 0, result.stderr
        assert json_report(result)["artifacts"]["witnesses_file"] == str(witness_file)
        witnesses = json.loads(witness_file.read_text(encoding="utf-8"))
        for size in witnesses["sizes"].values():
            for entry in size["witnesses"]:
                assert entry["word"] == "1" or entry["word"].startswith("e")


class TestPresentations:

    @pytest.mark.parametrize(
        "suite,parameters",
        [
            ("brauer", {"type": "A5"}),
            ("brauer", {"type": "D5"}),
            ("brauer-derived", {"type": "A5"}),
            ("dtl", {"type": "B5"}),
            ("dtl", {"type": "C4"}),
            ("double-laced", {"type": "B3"}),
            ("double-laced", {"type": "C3"}),
            ("hat", {"n": 6}),
            ("height", {"type": "A3"}),
        ],
    )
    def test_suite_passes(self, suite, parameters):
        result = SuiteRegistry.get_suite(suite).execute(SuiteContext(suite, parameters))
        assert [v.name for v in result.verdicts if not v.passed] == []


class TestCensus:

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_census_matches_closed_forms(self, n):
        outcome = census_outcome(n)
        assert all(v.passed for v in outcome.verdicts)

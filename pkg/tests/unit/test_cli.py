"""CLI tests through click's CliRunner.

Reports are written with ``-o`` so stdout/stderr mixing never touches the
parsed payload.
"""

import json
import textwrap

import pytest
import yaml
from click.testing import CliRunner

from dtlbench.__version__ import __version__
from dtlbench.cli_main import cli
from dtlbench.roots.admissible import format_set
from dtlbench.roots.rootsys import root_system


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def invoke(runner, tmp_path):
    """Invoke a command with a JSON report file; returns (result, payload or None)."""

    def _invoke(*args):
        report_file = tmp_path / "report.json"
        if report_file.exists():
            report_file.unlink()
        result = runner.invoke(cli, [*args, "--json", "-o", str(report_file)])
        payload = json.loads(report_file.read_text(encoding="utf-8")) if report_file.exists() else None
        return result, payload

    return _invoke


class TestGroup:

    def test_version(self, runner):
        result = runner.invoke(cli, ["--version"])
        assert result.exit_code == 0
        assert __version__ in result.output

    def test_help_lists_commands(self, runner):
        result = runner.invoke(cli, ["--help"])
        assert result.exit_code == 0
        for command in ["rank", "enumerate", "verify", "orbit", "hasse", "action", "closure",
                        "iso-check", "rootsys", "census", "run"]:
            assert command in result.output

    @pytest.mark.parametrize(
        "group,commands",
        [
            ("admissible", ["orbit", "hasse", "closure", "action"]),
            ("dtl", ["rank", "verify", "iso-check"]),
            ("diagrams", ["enumerate"]),
        ],
    )
    def test_grouped_commands(self, runner, group, commands):
        result = runner.invoke(cli, [group, "--help"])
        assert result.exit_code == 0
        for command in commands:
            assert command in result.output

    def test_dtl_rank_by_type(self, invoke):
        result, payload = invoke("dtl", "rank", "--type", "C3")
        assert result.exit_code == 0
        assert payload["artifacts"]["rank"] == {"algebra": "dtlC", "size": 3, "expected": 20}

    def test_entry_point_delegates_to_the_cli(self, monkeypatch):
        import dtlbench.cli_main
        from dtlbench.__main__ import main

        calls = []
        monkeypatch.setattr(dtlbench.cli_main, "cli", lambda: calls.append(True))
        main()
        assert calls == [True]


class TestRank:

    def test_tl(self, invoke):
        result, payload = invoke("rank", "--algebra", "tl", "--m", "3")
        assert result.exit_code == 0
        assert payload["schema"] == 1
        assert payload["command"].startswith("rank --algebra tl --m 3")
        assert payload["summary"] == {"passed": 2, "failed": 0, "skipped": 0, "error": 0}
        assert payload["artifacts"]["rank"]["expected"] == 14

    def test_dtl_c(self, invoke):
        result, payload = invoke("rank", "--algebra", "dtlC", "--n", "3")
        assert result.exit_code == 0
        assert {v["actual"] for v in payload["verdicts"]} == {20}

    def test_wrong_size_parameter(self, invoke):
        result, payload = invoke("rank", "--algebra", "brA", "--n", "2")
        assert result.exit_code == 2
        assert payload is None

    def test_size_out_of_range(self, invoke):
        result, _ = invoke("rank", "--algebra", "dtlC", "--n", "9")
        assert result.exit_code == 2
        assert "dtlC supports n = 1..6" in result.output

    def test_enumeration_cap(self, invoke):
        result, _ = invoke("rank", "--algebra", "brA", "--m", "3", "--max-elements", "20")
        assert result.exit_code == 2
        assert "--max-elements" in result.output


class TestEnumerate:

    def test_type_a_tl(self, invoke):
        result, payload = invoke("enumerate", "--type", "A2", "--gens", "tl", "--list")
        assert result.exit_code == 0
        assert payload["artifacts"]["count"] == 5
        assert len(payload["artifacts"]["elements"]) == 5

    def test_type_d_tl_has_no_closed_form(self, invoke):
        result, payload = invoke("enumerate", "--type", "D3", "--gens", "tl")
        assert result.exit_code == 0
        assert payload["artifacts"]["count"] > 0
        assert payload["summary"]["skipped"] == 1

    def test_type_d_undecorated_layer(self, invoke):
        result, payload = invoke("enumerate", "--type", "D3", "--layer", "l1", "--list")
        assert result.exit_code == 0
        # C_2 + C_3 - 1
        assert payload["verdicts"][0]["expected"] == 6
        assert payload["artifacts"]["count"] == 6
        tags = {element["tag"] for element in payload["artifacts"]["elements"]}
        assert tags == {"one", "theta"}
        assert not any(element["decorated"] for element in payload["artifacts"]["elements"])

    def test_type_d_decorated_layer(self, invoke):
        result, payload = invoke("enumerate", "--type", "D3", "--layer", "l2")
        assert result.exit_code == 0
        assert payload["verdicts"][0]["expected"] == 105
        assert payload["artifacts"]["count"] == 105

    @pytest.mark.parametrize("args,count", [(["--type", "A3"], "105"), (["--type", "A3", "--gens", "tl"], "14")])
    def test_count_only(self, runner, args, count):
        result = runner.invoke(cli, ["enumerate", *args, "--count"])
        assert result.exit_code == 0
        assert result.output.strip() == count

    def test_count_and_list_exclude_each_other(self, runner):
        result = runner.invoke(cli, ["enumerate", "--type", "A2", "--count", "--list"])
        assert result.exit_code == 2

    @pytest.mark.parametrize(
        "args",
        [["--type", "A2", "--layer", "l2"], ["--type", "D3", "--layer", "l1", "--gens", "full"], ["--type", "E6"]],
    )
    def test_wrong_layer(self, invoke, args):
        result, _ = invoke("enumerate", *args)
        assert result.exit_code == 2


class TestVerify:

    def test_hat_suite(self, invoke):
        result, payload = invoke("verify", "--suite", "hat", "--n", "3")
        assert result.exit_code == 0
        assert payload["summary"]["failed"] == 0
        assert all(v["suite"] == "hat" for v in payload["verdicts"])

    def test_unknown_suite(self, runner):
        result = runner.invoke(cli, ["verify", "--suite", "nope"])
        assert result.exit_code == 2

    def test_unsupported_type(self, invoke):
        result, _ = invoke("verify", "--suite", "brauer", "--type", "B3")
        assert result.exit_code == 2
        assert "not supported here" in result.output


class TestRootCommands:

    def test_orbit(self, invoke):
        result, payload = invoke("orbit", "--type", "A4", "--seed", "a1,a3")
        a4 = root_system("A4")
        assert result.exit_code == 0
        orbit = payload["artifacts"]["orbit"]
        assert orbit["size"] == 15
        assert orbit["seed_height"] == 0
        assert orbit["maximal"] == format_set(a4, a4.parse_root_set("a1+a2+a3,a2+a3+a4"))

    def test_orbit_rejects_non_orthogonal_seeds(self, invoke):
        result, _ = invoke("orbit", "--type", "A4", "--seed", "a1,a2")
        assert result.exit_code == 2
        assert "not a set of mutually orthogonal positive roots" in result.output

    def test_orbit_rejects_non_admissible_seeds(self, invoke):
        result, _ = invoke("orbit", "--type", "D4", "--seed", "a1,a2,a4")
        assert result.exit_code == 2
        assert "closure" in result.output

    def test_hasse_writes_dot(self, invoke, tmp_path):
        dot_file = tmp_path / "orbit.dot"
        result, payload = invoke("hasse", "--type", "A2", "--seed", "a1", "--dot", str(dot_file))
        assert result.exit_code == 0
        assert dot_file.read_text(encoding="utf-8").startswith("digraph A2_orbit {")
        assert payload["artifacts"]["hasse"]["nodes"] == 3
        assert payload["artifacts"]["hasse"]["dot_file"] == str(dot_file)

    def test_action(self, invoke):
        result, payload = invoke("action", "--type", "A3", "--word", "E2", "--set", "a1")
        assert result.exit_code == 0
        assert payload["artifacts"]["action"]["result"] == "{a2}"
        assert [step["step"] for step in payload["artifacts"]["action"]["trace"]] == ["start", "E2"]
        assert payload["summary"]["passed"] == 2

    def test_action_rejects_foreign_generators(self, invoke):
        result, _ = invoke("action", "--type", "A3", "--word", "E4", "--set", "a1")
        assert result.exit_code == 2

    def test_closure(self, invoke):
        result, payload = invoke("closure", "--type", "D4", "--roots", "a1,a2,a4")
        assert result.exit_code == 0
        assert payload["artifacts"]["closure"]["added"] == "{a1+a2+2a3+a4}"

    def test_rootsys(self, invoke):
        result, payload = invoke("rootsys", "--type", "A3", "--list-positive")
        assert result.exit_code == 0
        summary = payload["artifacts"]["rootsys"]
        assert summary["positive_roots"] == 6
        assert summary["cartan"][0] == [2, -1, 0]
        assert {"root": "a1+a2+a3", "height": 3, "epsilon": "ε1-ε4"} in summary["roots"]

    def test_rootsys_e8_skips_the_weyl_search(self, invoke):
        result, payload = invoke("rootsys", "--type", "E8")
        assert result.exit_code == 0
        assert payload["summary"]["skipped"] == 1

    def test_unknown_type(self, invoke):
        result, _ = invoke("rootsys", "--type", "Q3")
        assert result.exit_code == 2


class TestIsoCheckAndCensus:

    def test_iso_check_witness_file(self, invoke, tmp_path):
        witness_file = tmp_path / "witnesses.json"
        result, payload = invoke("iso-check", "--n", "2", "--witnesses", str(witness_file))
        assert result.exit_code == 0
        assert payload["artifacts"]["witnesses_file"] == str(witness_file)
        assert json.loads(witness_file.read_text(encoding="utf-8"))["n"] == 2

    def test_census(self, invoke):
        result, payload = invoke("census", "--n", "1")
        assert result.exit_code == 0
        assert payload["artifacts"]["census"] == {
            "decorated": 6, "undecorated": 3, "xi_sector": 2, "theta_sector": 1,
        }

    def test_census_range(self, invoke):
        result, _ = invoke("census", "--n", "7")
        assert result.exit_code == 2


class TestRun:

    def write(self, tmp_path, content):
        plan = tmp_path / "plan.yaml"
        plan.write_text(textwrap.dedent(content), encoding="utf-8")
        return str(plan)

    def test_dry_run(self, runner, tmp_path):
        plan = self.write(tmp_path, """
            steps:
              - action: census
                n: 1
        """)
        result = runner.invoke(cli, ["run", "--plan", plan, "--dry-run"])
        assert result.exit_code == 0
        assert "1 steps" in result.output

    def test_run_collects_every_step(self, invoke, tmp_path):
        plan = self.write(tmp_path, """
            name: small
            steps:
              - action: rank
                algebra: dtlB
                n: 2
              - action: verify
                suite: hat
                n: 2
              - action: census
                name: census one
                n: 1
        """)
        result, payload = invoke("run", "--plan", plan)
        assert result.exit_code == 0
        assert payload["command"] == "run small"
        assert set(payload["artifacts"]) == {"rank dtlB n=2", "verify hat n=2", "census one"}

    def test_step_errors_become_error_verdicts(self, invoke, tmp_path):
        plan = self.write(tmp_path, """
            steps:
              - action: verify
                suite: hat
                n: 9
              - action: census
                n: 1
        """)
        result, payload = invoke("run", "--plan", plan)
        assert result.exit_code == 1
        assert payload["verdicts"][0]["status"] == "error"
        assert payload["verdicts"][0]["name"] == "verify hat n=9"
        assert payload["summary"]["passed"] == 5

    def test_stop_on_failure(self, invoke, tmp_path):
        plan = self.write(tmp_path, """
            settings:
              stop_on_failure: true
            steps:
              - action: verify
                suite: hat
                n: 9
              - action: census
                n: 1
        """)
        result, payload = invoke("run", "--plan", plan)
        assert result.exit_code == 1
        assert len(payload["verdicts"]) == 1

    def test_invalid_plan(self, runner, tmp_path):
        plan = self.write(tmp_path, """
            steps:
              - action: rank
                n: 2
        """)
        result = runner.invoke(cli, ["run", "--plan", plan])
        assert result.exit_code == 2
        assert "rank steps need an algebra" in result.output


class TestOutputFormats:

    def test_yaml_file(self, runner, tmp_path):
        out = tmp_path / "report.yaml"
        result = runner.invoke(cli, ["census", "--n", "1", "-f", "yaml", "-o", str(out)])
        assert result.exit_code == 0
        payload = yaml.safe_load(out.read_text(encoding="utf-8"))
        assert list(payload)[:2] == ["schema", "command"]

    def test_table_to_stdout(self, runner):
        result = runner.invoke(cli, ["census", "--n", "1", "-f", "table"])
        assert result.exit_code == 0
        assert "Report: census --n 1" in result.output

"""Unit tests for the suite base class, the registry and the built-in suites."""

from typing import Any, Dict, Iterable

import pytest

from dtlbench.checks import RelationSuite, SuiteContext, SuiteRegistry
from dtlbench.checks.base import parse_type, require_int
from dtlbench.checks.suites import hat_relations
from dtlbench.config.models import CheckStatus, CheckVerdict
from dtlbench.exceptions import DiagramError

BUILTIN_SUITES = ["brauer", "brauer-derived", "dtl", "double-laced", "hat", "height", "admissible"]


class BrokenSuite(RelationSuite):
    name = "broken"
    description = "yields one verdict, then fails"

    def validate_parameters(self, parameters: Dict[str, Any]) -> Dict[str, Any]:
        return {"n": require_int(parameters, "n", 1, 3)}

    def run_checks(self, parameters: Dict[str, Any], context: SuiteContext) -> Iterable[CheckVerdict]:
        yield CheckVerdict.holds("first", True)
        raise DiagramError("generator index out of range")


class TestParameterHelpers:

    @pytest.mark.parametrize("label,expected", [("A4", ("A", 4)), ("d_5", ("D", 5)), (" b2 ", ("B", 2))])
    def test_parse_type(self, label, expected):
        assert parse_type(label, "ABCD") == expected

    @pytest.mark.parametrize("label", [None, "", "A", "4A", "Z3"])
    def test_parse_type_rejects_malformed_labels(self, label):
        with pytest.raises(ValueError):
            parse_type(label, "ABCD")

    def test_parse_type_restricts_families(self):
        with pytest.raises(ValueError, match="not supported here"):
            parse_type("B3", "AD")

    def test_require_int(self):
        assert require_int({"n": "4"}, "n", 2, 8) == 4
        with pytest.raises(ValueError, match="missing parameter"):
            require_int({}, "n", 2, 8)
        with pytest.raises(ValueError, match="must lie in 2..8"):
            require_int({"n": 9}, "n", 2, 8)


class TestRegistry:

    def test_builtin_suites(self):
        assert SuiteRegistry.list_suites()[: len(BUILTIN_SUITES)] == BUILTIN_SUITES

    def test_descriptions(self):
        descriptions = SuiteRegistry.descriptions()
        assert all(descriptions[name] for name in BUILTIN_SUITES)

    def test_unknown_suite(self):
        with pytest.raises(KeyError, match="Available suites"):
            SuiteRegistry.get_suite("nope")

    @pytest.mark.parametrize(
        "alias,name",
        [
            ("def11", "brauer"),
            ("rem31", "brauer-derived"),
            ("def01", "dtl"),
            ("def02", "double-laced"),
            ("newrel", "hat"),
            ("heightinv", "height"),
            ("admissible", "admissible"),
        ],
    )
    def test_aliases_resolve(self, alias, name):
        assert SuiteRegistry.resolve(alias) == name
        assert SuiteRegistry.get_suite(alias).name == name
        assert alias in SuiteRegistry.choices()

    def test_aliases_are_not_listed_as_suites(self):
        assert "newrel" not in SuiteRegistry.list_suites()

    def test_height_suite_by_alias_covers_br_a3(self):
        result = SuiteRegistry.get_suite("heightinv").execute(SuiteContext("height", {"type": "A3"}))
        assert result.success
        assert len(result.verdicts) == 105


class TestExecute:

    def test_parameter_errors_propagate(self):
        with pytest.raises(ValueError):
            SuiteRegistry.get_suite("hat").execute(SuiteContext("hat", {"n": 1}))

    def test_domain_error_ends_with_an_error_verdict(self):
        result = BrokenSuite().execute(SuiteContext("broken", {"n": 2}))
        assert not result.success
        assert result.error_message == "generator index out of range"
        assert isinstance(result.raw_exception, DiagramError)
        assert [v.status for v in result.verdicts] == [CheckStatus.PASS, CheckStatus.ERROR]
        assert all(v.suite == "broken" for v in result.verdicts)


class TestBuiltinSuites:

    @pytest.mark.parametrize(
        "suite,parameters",
        [
            ("brauer", {"type": "A3"}),
            ("brauer", {"type": "D4"}),
            ("brauer-derived", {"type": "A3"}),
            ("dtl", {"type": "B3"}),
            ("dtl", {"type": "C3"}),
            ("double-laced", {"type": "B2"}),
            ("double-laced", {"type": "C2"}),
            ("hat", {"n": 3}),
            ("height", {"type": "A2"}),
            ("admissible", {"type": "A3"}),
            ("admissible", {"type": "A4"}),
            ("admissible", {"type": "D4"}),
        ],
    )
    def test_suite_passes(self, suite, parameters):
        result = SuiteRegistry.get_suite(suite).execute(SuiteContext(suite, parameters))
        failing = [v.name for v in result.verdicts if not v.passed]
        assert failing == []
        assert result.success
        assert result.verdicts

    @pytest.mark.parametrize(
        "suite,parameters",
        [
            ("brauer", {"type": "A7"}),
            ("brauer", {"type": "D6"}),
            ("brauer-derived", {"type": "D4"}),
            ("dtl", {"type": "C6"}),
            ("double-laced", {"type": "B4"}),
            ("height", {"type": "A4"}),
            ("admissible", {"type": "D3"}),
        ],
    )
    def test_unsupported_parameters(self, suite, parameters):
        with pytest.raises(ValueError):
            SuiteRegistry.get_suite(suite).validate_parameters(parameters)

    def test_admissible_a4_reports_the_two_root_orbit(self):
        result = SuiteRegistry.get_suite("admissible").execute(SuiteContext("admissible", {"type": "A4"}))
        sizes = [v for v in result.verdicts if v.name.startswith("size of the orbit")]
        assert len(sizes) == 1
        assert sizes[0].actual == 15


class TestHatRelations:

    def test_square_relations_cover_every_index(self):
        labels = [rel.label for rel in hat_relations(3)]
        assert "ê0 ê0 = δ^2 ê0" in labels
        assert "ê2 ê2 = δ^2 ê2" in labels

    def test_far_relations_need_room(self):
        labels = [rel.label for rel in hat_relations(2)]
        assert not any("ê0 e2" in label for label in labels)

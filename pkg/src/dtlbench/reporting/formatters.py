"""
Output formatters for dtlbench reports.
Supports multiple formats: JSON, YAML, Table (text), and Rich console output.

Only the header line carries time-dependent values (start time and duration);
everything after it depends on the inputs alone.
"""
from __future__ import annotations

import json
import sys
from enum import Enum, auto
from functools import lru_cache
from typing import Any, Dict, Optional, TextIO, Union

import jsonschema
import yaml
from rich.box import SIMPLE
from rich.console import Console
from rich.table import Table
from rich.text import Text

from ..config.models import CheckStatus, CheckVerdict, ReportSummary, RunReport
from ..exceptions import ValidationError

_STATUS_STYLES = {
    CheckStatus.PASS: "green",
    CheckStatus.FAIL: "red",
    CheckStatus.SKIP: "blue",
    CheckStatus.ERROR: "yellow",
}


class OutputFormat(Enum):
    """Supported output formats."""
    JSON = auto()
    YAML = auto()
    TABLE = auto()
    CONSOLE = auto()


@lru_cache(maxsize=1)
def report_schema() -> Dict[str, Any]:
    """JSON schema of a serialized ``RunReport``."""
    return RunReport.model_json_schema(by_alias=True, mode="serialization")


def validate_payload(payload: Dict[str, Any]) -> None:
    """Check a report payload against :func:`report_schema`.

    Raises:
        ValidationError: the payload does not match the schema
    """
    validator = jsonschema.Draft202012Validator(report_schema())
    errors = sorted(validator.iter_errors(payload), key=lambda err: list(err.path))
    if errors:
        messages = [f"{'/'.join(str(p) for p in err.path) or '<root>'}: {err.message}" for err in errors]
        raise ValidationError("report does not match its schema", errors=messages)


def _clip(text: Optional[str], width: int) -> str:
    text = text or ""
    return text[: width - 3] + "..." if len(text) > width else text


def _summary(report: RunReport) -> ReportSummary:
    return report.summary or ReportSummary.from_verdicts(report.verdicts)


class OutputFormatter:
    """Base formatter interface."""

    def format_report(self, report: RunReport, output: Optional[TextIO] = None) -> None:
        """Format and output a complete report."""
        raise NotImplementedError("Subclasses must implement format_report")

    def format_verdict(self, verdict: CheckVerdict, output: Optional[TextIO] = None) -> None:
        """Format and output a single verdict."""
        raise NotImplementedError("Subclasses must implement format_verdict")


class JsonFormatter(OutputFormatter):
    """Formats reports as schema-checked JSON."""

    def format_report(self, report: RunReport, output: Optional[TextIO] = None) -> None:
        output = output or sys.stdout
        payload = report.to_payload()
        validate_payload(payload)
        json.dump(payload, output, indent=2, ensure_ascii=False, default=str)
        output.write("\n")

    def format_verdict(self, verdict: CheckVerdict, output: Optional[TextIO] = None) -> None:
        output = output or sys.stdout
        json.dump(verdict.model_dump(mode="json"), output, indent=2, ensure_ascii=False, default=str)
        output.write("\n")


class YamlFormatter(OutputFormatter):
    """Formats reports as YAML."""

    def format_report(self, report: RunReport, output: Optional[TextIO] = None) -> None:
        output = output or sys.stdout
        yaml.safe_dump(
            report.to_payload(),
            output,
            default_flow_style=False,
            sort_keys=False,
            allow_unicode=True,
        )

    def format_verdict(self, verdict: CheckVerdict, output: Optional[TextIO] = None) -> None:
        output = output or sys.stdout
        yaml.safe_dump(
            verdict.model_dump(mode="json"),
            output,
            default_flow_style=False,
            sort_keys=False,
            allow_unicode=True,
        )


class TableFormatter(OutputFormatter):
    """Formats reports as ASCII tables."""

    def format_report(self, report: RunReport, output: Optional[TextIO] = None) -> None:
        output = output or sys.stdout
        summary = _summary(report)

        output.write(f"Report: {report.command} (started {report.started_at}, {report.duration:.2f}s)\n")

        output.write("Summary:\n")
        output.write("-" * 80 + "\n")
        output.write(f"Total: {summary.total}\n")
        output.write(f"Passed: {summary.passed}\n")
        output.write(f"Failed: {summary.failed}\n")
        output.write(f"Skipped: {summary.skipped}\n")
        output.write(f"Error: {summary.error}\n")
        output.write("-" * 80 + "\n\n")

        if report.verdicts:
            output.write("=" * 80 + "\n")
            output.write(f"{'Check':<44} {'Status':<7} {'Expected':<13} {'Actual':<13}\n")
            output.write("-" * 80 + "\n")
            for verdict in report.verdicts:
                output.write(
                    f"{_clip(verdict.name, 44):<44} {verdict.status.value:<7} "
                    f"{_clip(str(verdict.expected), 13):<13} {_clip(str(verdict.actual), 13):<13}\n"
                )
            output.write("=" * 80 + "\n\n")

        for key, value in report.artifacts.items():
            output.write(f"{key}: {_clip(json.dumps(value, ensure_ascii=False, default=str), 200)}\n")

    def format_verdict(self, verdict: CheckVerdict, output: Optional[TextIO] = None) -> None:
        output = output or sys.stdout

        output.write(f"Check: {verdict.name}\n")
        output.write(f"Status: {verdict.status.value}\n")
        output.write(f"Expected: {verdict.expected}\n")
        output.write(f"Actual: {verdict.actual}\n")
        if verdict.detail:
            output.write(f"Detail: {verdict.detail}\n")


class RichConsoleFormatter(OutputFormatter):
    """Formats reports using Rich for terminal output."""

    def __init__(self) -> None:
        self.console = Console()

    def format_report(self, report: RunReport, output: Optional[TextIO] = None) -> None:
        if output and output != sys.stdout:
            self.console = Console(file=output, width=120)
        summary = _summary(report)

        self.console.rule(Text(f"dtlbench {report.command}", style="bold cyan"))
        header = Text()
        header.append("Started: ", style="bold")
        header.append(f"{report.started_at}  ")
        header.append("Duration: ", style="bold")
        header.append(f"{report.duration:.2f} seconds")
        self.console.print(header)

        success = summary.failed == 0 and summary.error == 0
        status = Text()
        status.append("Status: ", style="bold")
        status.append("SUCCESS" if success else "FAILED", style="green" if success else "red")
        self.console.print(status)
        self.console.print()

        summary_table = Table(title="Summary", box=SIMPLE)
        summary_table.add_column("Category", style="cyan")
        summary_table.add_column("Count", style="bold")
        summary_table.add_row("Total", str(summary.total))
        summary_table.add_row("Passed", Text(str(summary.passed), style="green"))
        summary_table.add_row("Failed", Text(str(summary.failed), style="red"))
        summary_table.add_row("Skipped", Text(str(summary.skipped), style="blue"))
        summary_table.add_row("Error", Text(str(summary.error), style="yellow"))
        self.console.print(summary_table)

        if report.verdicts:
            verdict_table = Table(box=SIMPLE)
            verdict_table.add_column("Check", style="cyan")
            verdict_table.add_column("Status", style="bold")
            verdict_table.add_column("Expected")
            verdict_table.add_column("Actual")
            for verdict in report.verdicts:
                verdict_table.add_row(
                    verdict.name,
                    Text(verdict.status.value, style=_STATUS_STYLES[verdict.status]),
                    _clip(str(verdict.expected), 40),
                    _clip(str(verdict.actual), 40),
                )
            self.console.print(verdict_table)

        for key, value in report.artifacts.items():
            line = Text()
            line.append(f"{key}: ", style="bold")
            line.append(_clip(json.dumps(value, ensure_ascii=False, default=str), 400))
            self.console.print(line)

    def format_verdict(self, verdict: CheckVerdict, output: Optional[TextIO] = None) -> None:
        if output and output != sys.stdout:
            self.console = Console(file=output, width=120)

        self.console.rule(Text(f"Check: {verdict.name}", style="bold cyan"))
        status = Text()
        status.append("Status: ", style="bold")
        status.append(verdict.status.value, style=_STATUS_STYLES[verdict.status])
        self.console.print(status)
        self.console.print(f"Expected: {verdict.expected}")
        self.console.print(f"Actual: {verdict.actual}")
        if verdict.detail:
            self.console.print(Text(f"Detail: {verdict.detail}", style="yellow"))


def get_formatter(format_type: Union[OutputFormat, str]) -> OutputFormatter:
    """Factory function to get the appropriate formatter."""
    if isinstance(format_type, str):
        try:
            format_type = OutputFormat[format_type.upper()]
        except KeyError:
            raise ValueError(f"Unknown output format: {format_type}")

    formatters = {
        OutputFormat.JSON: JsonFormatter,
        OutputFormat.YAML: YamlFormatter,
        OutputFormat.TABLE: TableFormatter,
        OutputFormat.CONSOLE: RichConsoleFormatter,
    }

    return formatters[format_type]()

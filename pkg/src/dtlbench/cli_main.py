"""
Command-line interface for dtlbench.
"""
from __future__ import annotations

import json
import os
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Callable, Dict, Iterator, List, Optional

import click
from rich.console import Console
from rich.text import Text

from .__version__ import __version__
from .algebra.diagrams_a import diagram_action, enumerate_brauer
from .algebra.diagrams_d import expected_census, identity_d, psi_gen
from .algebra.dtl import catalan, phi_b_image
from .algebra.monoid import enumerate_monoid
from .algebra.words import GenWord
from .algebra.words import e as dtl_e
from .checks.base import parse_type
from .checks.registry import SuiteRegistry
from .checks.runners import census_outcome, iso_check_outcome, odd_double_factorial, rank_outcome, suite_outcome
from .checks.suites import type_a_representation
from .cli.plan_loader import PlanLoader
from .config.models import Algebra, CheckStatus, CheckVerdict, PlanAction, PlanStep, RunReport
from .constants import DEFAULT_LOG_LEVEL, DEFAULT_MAX_ELEMENTS, DEFAULT_OUTPUT_FORMAT, ENV_PREFIX
from .core.error_handling import ErrorHandler
from .core.logging_config import get_logger, setup_logging
from .exceptions import (
    AdmissibilityError,
    ConfigurationError,
    DiagramError,
    DtlBenchError,
    EnumerationLimitError,
    RootSystemError,
    ValidationError,
    VerificationError,
)
from .reporting.formatters import get_formatter
from .roots.admissible import (
    apply_brauer_word,
    canonical,
    closure,
    format_set,
    is_admissible,
    is_orthogonal_set,
)
from .roots.poset import OrbitPoset
from .roots.rootsys import RootSystem, root_system, weyl_group_order

console = Console(stderr=True)
logger = get_logger("cli")

# errors that mean the request itself was unusable
USAGE_ERRORS = (
    ValueError,
    KeyError,
    ConfigurationError,
    RootSystemError,
    AdmissibilityError,
    DiagramError,
    EnumerationLimitError,
)

# |W| is computed by orbit search only below this order
WEYL_ORDER_SEARCH_LIMIT = 10**6
KNOWN_POSITIVE_ROOTS = {"E6": 36, "E7": 63, "E8": 120}
KNOWN_WEYL_ORDERS = {"E6": 51840, "E7": 2903040, "E8": 696729600}


def _fail_usage(message: str, details: Optional[str] = None) -> None:
    error_text = Text()
    error_text.append("Error: ", style="bold red")
    error_text.append(message)
    console.print(error_text)
    if details and details != message:
        console.print(Text(details, style="yellow"))
    sys.exit(2)


@contextmanager
def usage_errors() -> Iterator[None]:
    """Turn unusable input into exit code 2 and failed verifications into exit code 1."""
    handler = ErrorHandler()
    try:
        yield
    except VerificationError as e:
        console.print(Text(f"Verification failed: {e.message}", style="bold red"))
        console.print(handler.format_error_details(e))
        sys.exit(1)
    except USAGE_ERRORS as e:
        message = e.message if isinstance(e, DtlBenchError) else str(e).strip("'\"")
        _fail_usage(message, handler.format_error_details(e) if isinstance(e, DtlBenchError) else None)


_REPORT_OPTIONS = (
    click.option(
        "-f", "--format", "output_format",
        type=click.Choice(["json", "yaml", "table", "console"], case_sensitive=False),
        default=DEFAULT_OUTPUT_FORMAT,
        show_default=True,
        help="Output format for the report.",
    ),
    click.option("--json", "as_json", is_flag=True, help="Shortcut for --format json."),
    click.option(
        "-o", "--output",
        type=click.Path(dir_okay=False, writable=True),
        help="Write the report to a file instead of stdout.",
    ),
)


def report_options(func: Callable) -> Callable:
    """Output options shared by every reporting command."""
    for option in reversed(_REPORT_OPTIONS):
        func = option(func)
    return func


def max_elements_option(func: Callable) -> Callable:
    return click.option(
        "--max-elements",
        type=click.IntRange(min=1),
        default=DEFAULT_MAX_ELEMENTS,
        show_default=True,
        help="Cap on the number of monoid elements an enumeration may produce.",
    )(func)


_OUTPUT_PARAMS = {"output_format", "as_json", "output", "witnesses", "dot"}


def command_echo(ctx: click.Context) -> str:
    """The command and its inputs, in a stable order."""
    parts = [ctx.info_name or "dtlbench"]
    for param in ctx.command.params:
        value = ctx.params.get(param.name or "")
        if param.name in _OUTPUT_PARAMS or value is None or value is False:
            continue
        flag = max(param.opts, key=len)
        parts.append(flag if value is True else f"{flag} {value}")
    return " ".join(parts)


def emit(report: RunReport, output_format: str, as_json: bool, output: Optional[str]) -> None:
    """Finalize, write the report and exit with its verdict."""
    report.finalize()
    formatter = get_formatter("json" if as_json else output_format)
    try:
        if output:
            with open(output, "w", encoding="utf-8") as handle:
                formatter.format_report(report, handle)
            console.print(f"Report written to: {output}")
        else:
            formatter.format_report(report, sys.stdout)
    except ValidationError as e:
        console.print(Text(f"Report failed schema validation: {e.message}", style="bold red"))
        for error in e.errors:
            console.print(f"- {error}")
        sys.exit(3)
    sys.exit(0 if report.ok else 1)


def load_system(type_label: str) -> RootSystem:
    return root_system(type_label.strip().upper())


def require_admissible(system: RootSystem, roots: frozenset, what: str) -> None:
    """Reject non-orthogonal and non-admissible inputs, naming the closure when there is one."""
    if not is_orthogonal_set(system, roots):
        raise AdmissibilityError(
            f"{what} {format_set(system, roots)} is not a set of mutually orthogonal positive roots",
            roots=list(canonical(roots)),
        )
    if not is_admissible(system, roots):
        closed = closure(system, roots)
        raise AdmissibilityError(
            f"{what} {format_set(system, roots)} is not admissible; its closure is {format_set(system, closed)}",
            roots=list(canonical(roots)),
        )


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, "-v", "--version")
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]),
    default=DEFAULT_LOG_LEVEL.upper(),
    help="Set logging level",
)
@click.option(
    "--log-format",
    type=click.Choice(["standard", "json"]),
    default="standard",
    help="Set logging format",
)
@click.option(
    "--log-file",
    type=click.Path(),
    help="Log file path",
)
@click.pass_context
def cli(ctx: click.Context, log_level: str, log_format: str, log_file: Optional[str]) -> None:
    """
    Diagram-algebra workbench for Dieck-Temperley-Lieb algebras of types B and C.

    Computes ranks, checks presentations on their diagram realizations and
    explores admissible sets of roots, emitting machine-readable reports.
    """
    setup_logging(
        log_level=log_level,
        json_format=(log_format == "json"),
        log_file=log_file,
    )

    ctx.ensure_object(dict)
    ctx.obj["logger"] = logger


@cli.command("rank")
@click.option(
    "--algebra",
    required=True,
    type=click.Choice([a.value for a in Algebra]),
    help="brA and tl take --m; dtlB and dtlC take --n.",
)
@click.option("--m", "m", type=int, help="Rank of A_m for brA and tl.")
@click.option("--n", "n", type=int, help="n for dtlB and dtlC.")
@max_elements_option
@report_options
@click.pass_context
def rank_command(
    ctx: click.Context,
    algebra: str,
    m: Optional[int],
    n: Optional[int],
    max_elements: int,
    output_format: str,
    as_json: bool,
    output: Optional[str],
) -> None:
    """Compare the expected rank of an algebra with every way of computing it."""
    chosen = Algebra(algebra)
    size = m if chosen.size_parameter == "m" else n
    other = n if chosen.size_parameter == "m" else m
    if size is None or other is not None:
        raise click.UsageError(f"rank --algebra {algebra} takes --{chosen.size_parameter} only")

    report = RunReport(command=command_echo(ctx))
    with usage_errors():
        outcome = rank_outcome(chosen, size, max_elements)
    report.extend(outcome.verdicts)
    report.artifacts.update(outcome.artifacts)
    emit(report, output_format, as_json, output)


@cli.command("enumerate")
@click.option("--type", "type_label", required=True, help="A<m> or D<n+1>.")
@click.option("--gens", type=click.Choice(["full", "tl"]), default=None,
              help="Generator set; defaults to tl on the type D l1 layer and full otherwise.")
@click.option("--layer", type=click.Choice(["l1", "l2"]), default=None,
              help="Multiplication layer; type A uses l1, type D defaults to l2.")
@click.option("--count", "count_only", is_flag=True, help="Print only the number of elements.")
@click.option("--list", "list_elements", is_flag=True, help="Add every element to the report.")
@max_elements_option
@report_options
@click.pass_context
def enumerate_command(
    ctx: click.Context,
    type_label: str,
    gens: Optional[str],
    layer: Optional[str],
    count_only: bool,
    list_elements: bool,
    max_elements: int,
    output_format: str,
    as_json: bool,
    output: Optional[str],
) -> None:
    """
    Enumerate a diagram monoid modulo delta and compare its size with a closed form.

    Type A: Br(A_m) (full) or TL(A_m) (tl). Type D_{n+1}: on l1 the
    undecorated monoid generated by the images of e_0..e_{n-1} of DTL(B_n);
    on l2 the monoid generated by the images of R_i and E_i (full) or E_i (tl).
    """
    if count_only and list_elements:
        raise click.UsageError("--count and --list cannot be combined")
    report = RunReport(command=command_echo(ctx))
    with usage_errors():
        system = load_system(type_label)
        rank = system.rank
        expected: Optional[int] = None
        if system.family == "A":
            gens = gens or "full"
            if layer == "l2":
                raise ValueError("type A diagrams carry no decorations; use --layer l1")
            elements = enumerate_brauer(rank + 1, gens, max_elements=max_elements)
            expected = odd_double_factorial(rank + 1) if gens == "full" else catalan(rank + 1)
        elif system.family == "D":
            n = rank - 1
            if layer == "l1":
                gens = gens or "tl"
                if gens == "full":
                    raise ValueError("the full type D generators carry decorations; use --layer l2")
                generators = [phi_b_image(dtl_e(i), n) for i in range(n)]
                expected = catalan(n) + catalan(n + 1) - 1
            else:
                gens = gens or "full"
                nodes = range(1, rank + 1)
                generators = [psi_gen("E", i, n) for i in nodes]
                if gens == "full":
                    generators = [psi_gen("R", i, n) for i in nodes] + generators
                    expected = sum(expected_census(n))
            elements = enumerate_monoid(identity_d(n), generators, max_elements=max_elements, label=f"{gens} {system.label}")
        else:
            raise ValueError(f"enumerate supports types A and D, not {system.label}")

    name = f"|{gens} monoid of {system.label}| mod δ"
    if expected is None:
        verdict = CheckVerdict(name=name, actual=len(elements), status=CheckStatus.SKIP, detail="no closed form")
    else:
        verdict = CheckVerdict.compare(name, expected, len(elements))
    if count_only:
        click.echo(len(elements))
        sys.exit(1 if verdict.status == CheckStatus.FAIL else 0)
    report.add_verdict(verdict)
    report.artifacts["count"] = len(elements)
    if list_elements:
        report.artifacts["elements"] = [element.to_json() for element in elements.values()]
    emit(report, output_format, as_json, output)


@cli.command("verify")
@click.option(
    "--suite",
    required=True,
    type=click.Choice(SuiteRegistry.choices()),
    help="Relation or property suite to run.",
)
@click.option("--type", "type_label", help="Type label such as A4, D4, B3 or C3.")
@click.option("--n", "n", type=int, help="Size for suites that take n.")
@max_elements_option
@report_options
@click.pass_context
def verify_command(
    ctx: click.Context,
    suite: str,
    type_label: Optional[str],
    n: Optional[int],
    max_elements: int,
    output_format: str,
    as_json: bool,
    output: Optional[str],
) -> None:
    """Run one relation or property suite; every instance is listed."""
    report = RunReport(command=command_echo(ctx))
    with usage_errors():
        outcome = suite_outcome(suite, {"type": type_label, "n": n}, max_elements)
    report.extend(outcome.verdicts)
    report.artifacts.update(outcome.artifacts)
    emit(report, output_format, as_json, output)


def _orbit_poset(type_label: str, seed: str) -> tuple:
    system = load_system(type_label)
    roots = system.parse_root_set(seed)
    require_admissible(system, roots, "seed")
    return system, OrbitPoset(system, roots)


def _orbit_listing(system: RootSystem, poset: OrbitPoset) -> List[Dict[str, Any]]:
    return [
        {"height": height, "sets": [format_set(system, members) for members in layer]}
        for height, layer in poset.by_height().items()
    ]


@cli.command("orbit")
@click.option("--type", "type_label", required=True, help="Type label such as A4 or D4.")
@click.option("--seed", required=True, help="Comma separated roots, e.g. 'a1,a3'.")
@report_options
@click.pass_context
def orbit_command(
    ctx: click.Context, type_label: str, seed: str, output_format: str, as_json: bool, output: Optional[str]
) -> None:
    """List the W-orbit of an admissible set with heights."""
    report = RunReport(command=command_echo(ctx))
    with usage_errors():
        system, poset = _orbit_poset(type_label, seed)
    report.add_verdict(CheckVerdict.holds(f"orbit of {format_set(system, poset.seed)} has a unique maximal element", True))
    report.artifacts["orbit"] = {
        "size": len(poset),
        "maximal": format_set(system, poset.maximal),
        "seed_height": poset.height(poset.seed),
        "layers": _orbit_listing(system, poset),
    }
    emit(report, output_format, as_json, output)


@cli.command("hasse")
@click.option("--type", "type_label", required=True, help="Type label such as A4 or D4.")
@click.option("--seed", required=True, help="Comma separated roots, e.g. 'a1,a3'.")
@click.option("--dot", type=click.Path(dir_okay=False, writable=True), help="Write the DOT graph to this file.")
@report_options
@click.pass_context
def hasse_command(
    ctx: click.Context,
    type_label: str,
    seed: str,
    dot: Optional[str],
    output_format: str,
    as_json: bool,
    output: Optional[str],
) -> None:
    """Hasse diagram of an orbit poset as DOT, ranked by height."""
    report = RunReport(command=command_echo(ctx))
    with usage_errors():
        system, poset = _orbit_poset(type_label, seed)
    text = poset.to_dot(f"{system.label}_orbit")
    report.add_verdict(CheckVerdict.holds(f"orbit of {format_set(system, poset.seed)} has a unique maximal element", True))
    report.artifacts["hasse"] = {
        "nodes": poset.graph.number_of_nodes(),
        "edges": poset.graph.number_of_edges(),
        "maximal": format_set(system, poset.maximal),
        "minimal": [format_set(system, members) for members in poset.minimal],
    }
    if dot:
        Path(dot).write_text(text, encoding="utf-8")
        report.artifacts["hasse"]["dot_file"] = dot
    else:
        report.artifacts["hasse"]["dot"] = text
    emit(report, output_format, as_json, output)


@cli.command("action")
@click.option("--type", "type_label", required=True, help="Type label such as A2 or D4.")
@click.option("--word", required=True, help="Brauer word such as 'E1 R2', applied right to left.")
@click.option("--set", "roots_text", required=True, help="Comma separated roots of an admissible set.")
@report_options
@click.pass_context
def action_command(
    ctx: click.Context,
    type_label: str,
    word: str,
    roots_text: str,
    output_format: str,
    as_json: bool,
    output: Optional[str],
) -> None:
    """Trace the action of a Brauer word on an admissible set."""
    report = RunReport(command=command_echo(ctx))
    with usage_errors():
        system = load_system(type_label)
        roots = system.parse_root_set(roots_text)
        require_admissible(system, roots, "set")
        parsed = GenWord.parse(word)
        for letter in parsed.letters:
            if letter.kind not in ("r", "e") or not 1 <= letter.index <= system.rank:
                raise ValueError(f"{letter} is not a Brauer generator of {system.label}")

        trace = [{"step": "start", "set": format_set(system, roots)}]
        current = roots
        for letter in reversed(parsed.letters):
            current = apply_brauer_word(system, GenWord.of(letter), current)
            trace.append({"step": str(letter).upper(), "set": format_set(system, current)})

    report.add_verdict(CheckVerdict.holds(f"{format_set(system, current)} is admissible", is_admissible(system, current)))
    if system.family == "A":
        image = type_a_representation(system.rank)(parsed)
        by_diagram = diagram_action(image, roots)
        report.add_verdict(
            CheckVerdict.compare(
                f"{word} on {format_set(system, roots)} agrees with the diagram top",
                expected=format_set(system, by_diagram),
                actual=format_set(system, current),
            )
        )
    report.artifacts["action"] = {"result": format_set(system, current), "trace": trace}
    emit(report, output_format, as_json, output)


@cli.command("closure")
@click.option("--type", "type_label", required=True, help="Type label such as D4.")
@click.option("--roots", "roots_text", required=True, help="Comma separated mutually orthogonal roots.")
@report_options
@click.pass_context
def closure_command(
    ctx: click.Context, type_label: str, roots_text: str, output_format: str, as_json: bool, output: Optional[str]
) -> None:
    """Smallest admissible set containing the given roots."""
    report = RunReport(command=command_echo(ctx))
    with usage_errors():
        system = load_system(type_label)
        roots = system.parse_root_set(roots_text)
        closed = closure(system, roots)
        admissible = is_admissible(system, closed)
    report.add_verdict(CheckVerdict.holds(f"{format_set(system, closed)} is admissible", admissible))
    report.artifacts["closure"] = {
        "input": format_set(system, roots),
        "closure": format_set(system, closed),
        "added": format_set(system, closed - roots),
    }
    emit(report, output_format, as_json, output)


@cli.command("iso-check")
@click.option("--n", "n", type=int, required=True, help="DTL(C_n) against STL(A_{2n-1}).")
@click.option("--witnesses", type=click.Path(dir_okay=False, writable=True), help="Write witness words as JSON.")
@max_elements_option
@report_options
@click.pass_context
def iso_check_command(
    ctx: click.Context,
    n: int,
    witnesses: Optional[str],
    max_elements: int,
    output_format: str,
    as_json: bool,
    output: Optional[str],
) -> None:
    """Check DTL(C_n) against STL(A_{2n-1}) and find surjectivity witnesses."""
    report = RunReport(command=command_echo(ctx))
    with usage_errors():
        outcome = iso_check_outcome(n, max_elements)
    report.extend(outcome.verdicts)
    if witnesses:
        Path(witnesses).write_text(
            json.dumps(outcome.artifacts["witnesses"], indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
        )
        report.artifacts["witnesses_file"] = witnesses
    else:
        report.artifacts.update(outcome.artifacts)
    emit(report, output_format, as_json, output)


@cli.command("rootsys")
@click.option("--type", "type_label", required=True, help="A<n>, D<n> or E6/E7/E8.")
@click.option("--list-positive", is_flag=True, help="List every positive root.")
@report_options
@click.pass_context
def rootsys_command(
    ctx: click.Context,
    type_label: str,
    list_positive: bool,
    output_format: str,
    as_json: bool,
    output: Optional[str],
) -> None:
    """Summary of a simply laced root system."""
    report = RunReport(command=command_echo(ctx))
    with usage_errors():
        system = load_system(type_label)
    rank, label = system.rank, system.label

    expected_roots = {"A": rank * (rank + 1) // 2, "D": rank * (rank - 1)}.get(system.family, KNOWN_POSITIVE_ROOTS.get(label))
    report.add_verdict(CheckVerdict.compare(f"|Φ+({label})|", expected_roots, len(system.positive_roots)))

    expected_order = _expected_weyl_order(system)
    if expected_order <= WEYL_ORDER_SEARCH_LIMIT:
        report.add_verdict(CheckVerdict.compare(f"|W({label})|", expected_order, weyl_group_order(system)))
    else:
        report.add_verdict(CheckVerdict(
            name=f"|W({label})|", expected=expected_order, status=CheckStatus.SKIP,
            detail="too large for orbit search",
        ))

    summary: Dict[str, Any] = {
        "label": label,
        "rank": rank,
        "edges": [list(edge) for edge in system.diagram.edges()],
        "cartan": system.cartan.tolist(),
        "positive_roots": len(system.positive_roots),
    }
    if list_positive:
        roots = []
        for beta in system.positive_roots:
            entry = {"root": system.format_root(beta), "height": system.height(beta)}
            if system.family in ("A", "D"):
                entry["epsilon"] = system.format_epsilon(beta)
            roots.append(entry)
        summary["roots"] = roots
    report.artifacts["rootsys"] = summary
    emit(report, output_format, as_json, output)


def _expected_weyl_order(system: RootSystem) -> int:
    from math import factorial

    if system.family == "A":
        return factorial(system.rank + 1)
    if system.family == "D":
        return 2 ** (system.rank - 1) * factorial(system.rank)
    return KNOWN_WEYL_ORDERS[system.label]


@cli.command("census")
@click.option("--n", "n", type=int, required=True, help="Decorated connectors on n+1 strands.")
@report_options
@click.pass_context
def census_command(
    ctx: click.Context, n: int, output_format: str, as_json: bool, output: Optional[str]
) -> None:
    """Count the decorated basis by brute force and compare with its closed forms."""
    report = RunReport(command=command_echo(ctx))
    with usage_errors():
        outcome = census_outcome(n)
    report.extend(outcome.verdicts)
    report.artifacts.update(outcome.artifacts)
    emit(report, output_format, as_json, output)


def run_step(step: PlanStep, max_elements: int) -> tuple:
    """Execute one plan step; returns (verdicts, artifacts)."""
    if step.action == PlanAction.RANK:
        assert step.algebra is not None
        size = getattr(step, step.algebra.size_parameter)
        return rank_outcome(step.algebra, size, max_elements)
    if step.action == PlanAction.VERIFY:
        assert step.suite is not None
        return suite_outcome(step.suite, {"type": step.type_label, "n": step.n}, max_elements)
    if step.action == PlanAction.ISO_CHECK:
        return iso_check_outcome(step.n, max_elements)  # type: ignore[arg-type]
    return census_outcome(step.n)  # type: ignore[arg-type]


@cli.command("run")
@click.option(
    "--plan",
    required=True,
    type=click.Path(dir_okay=False),
    help="Path to the run plan (YAML).",
)
@click.option("--dry-run", is_flag=True, help="Validate the plan without running it.")
@click.option("--strict", is_flag=True, help="Treat plan warnings as errors.")
@report_options
@click.pass_context
def run_command(
    ctx: click.Context,
    plan: str,
    dry_run: bool,
    strict: bool,
    output_format: str,
    as_json: bool,
    output: Optional[str],
) -> None:
    """
    Execute a YAML run plan.

    Steps run in order; each contributes its verdicts to one report. A step that
    cannot run is recorded as an error verdict.
    """
    run_log = ctx.obj.get("logger") if ctx.obj else logger
    with usage_errors():
        run_plan = PlanLoader().load_and_validate(plan, strict=strict)

    if dry_run:
        console.print(Text(f"Run plan is valid: {len(run_plan.steps)} steps.", style="bold green"))
        sys.exit(0)

    report = RunReport(command=f"run {run_plan.name}")
    for step in run_plan.steps:
        run_log.info(f"plan step: {step.title}")
        try:
            verdicts, artifacts = run_step(step, run_plan.settings.max_elements)
        except (ValueError, KeyError, DtlBenchError) as e:
            message = e.message if isinstance(e, DtlBenchError) else str(e)
            verdicts = [CheckVerdict(name=step.title, status=CheckStatus.ERROR, detail=message)]
            artifacts = {}
        report.extend(verdicts)
        if artifacts:
            report.artifacts[step.title] = artifacts
        if run_plan.settings.stop_on_failure and not all(v.passed for v in verdicts):
            run_log.warning(f"stopping after failed step: {step.title}")
            break
    emit(report, output_format, as_json, output)


# -- grouped aliases ---------------------------------------------------------


@cli.group("admissible")
def admissible_group() -> None:
    """Admissible sets of roots: orbit, hasse, closure and action."""


for _command in (orbit_command, hasse_command, closure_command, action_command):
    admissible_group.add_command(_command)


@cli.group("dtl")
def dtl_group() -> None:
    """DTL algebras of types B and C: rank, verify and iso-check."""


@dtl_group.command("rank")
@click.option("--type", "type_label", required=True, help="B<n> for DTL(B_n) or C<n> for DTL(C_n).")
@max_elements_option
@report_options
@click.pass_context
def dtl_rank_command(
    ctx: click.Context,
    type_label: str,
    max_elements: int,
    output_format: str,
    as_json: bool,
    output: Optional[str],
) -> None:
    """Rank of DTL(B_n) or DTL(C_n); same checks as rank --algebra dtlB|dtlC."""
    report = RunReport(command=command_echo(ctx))
    with usage_errors():
        family, n = parse_type(type_label, "BC")
        outcome = rank_outcome(Algebra.DTL_B if family == "B" else Algebra.DTL_C, n, max_elements)
    report.extend(outcome.verdicts)
    report.artifacts.update(outcome.artifacts)
    emit(report, output_format, as_json, output)


dtl_group.add_command(verify_command)
dtl_group.add_command(iso_check_command)


@cli.group("diagrams")
def diagrams_group() -> None:
    """Diagram monoids of types A and D."""


diagrams_group.add_command(enumerate_command)


def main() -> None:
    """Main entry point for the CLI."""
    try:
        cli()
    except Exception as e:
        console.print(f"[bold red]Unhandled error:[/] {str(e)}")
        if os.getenv(f"{ENV_PREFIX}DEBUG"):
            import traceback
            console.print("[bold red]Traceback:[/]")
            console.print(traceback.format_exc())
        sys.exit(3)


if __name__ == "__main__":
    main()

"""Rank, isomorphism and census checks shared by the CLI commands and run plans.

Each runner returns the verdicts of one command together with the artifacts
that go into the report. Unsupported sizes raise ``ValueError``.
"""

from math import comb
from typing import Any, Dict, List, NamedTuple

from ..algebra.connector import all_connectors
from ..algebra.diagrams_a import brauer_rank_by_matchings, enumerate_brauer, tl_rank_by_planarity
from ..algebra.diagrams_d import ScaledDiagramD, basis_census, compose_l1, compose_l2, expected_census
from ..algebra.dtl import catalan, dtl_b_rank_methods, dtl_c_rank_methods, stl_basis, surjectivity_bfs
from ..config.models import Algebra, CheckStatus, CheckVerdict
from ..constants import DEFAULT_MAX_ELEMENTS
from ..core.logging_config import get_logger
from ..exceptions import VerificationError
from ..roots.poset import sigma_fixed_height0
from .base import SuiteContext
from .registry import SuiteRegistry

logger = get_logger("checks.runners")

RANK_LIMITS = {
    Algebra.BRAUER_A: (1, 6),
    Algebra.TEMPERLEY_LIEB: (1, 12),
    Algebra.DTL_B: (2, 7),
    Algebra.DTL_C: (1, 6),
}

# compose_l1 and compose_l2 are compared on all undecorated pairs up to this n
LAYER_AGREEMENT_MAX_N = 3


class Outcome(NamedTuple):
    verdicts: List[CheckVerdict]
    artifacts: Dict[str, Any]


def odd_double_factorial(k: int) -> int:
    """1 * 3 * ... * (2k - 1)."""
    result = 1
    for t in range(1, 2 * k, 2):
        result *= t
    return result


def expected_rank(algebra: Algebra, size: int) -> int:
    if algebra == Algebra.BRAUER_A:
        return odd_double_factorial(size + 1)
    if algebra == Algebra.TEMPERLEY_LIEB:
        return catalan(size + 1)
    if algebra == Algebra.DTL_B:
        return catalan(size) + catalan(size + 1) - 1
    return comb(2 * size, size)


def check_rank_size(algebra: Algebra, size: int) -> None:
    low, high = RANK_LIMITS[algebra]
    if not low <= size <= high:
        parameter = algebra.size_parameter
        raise ValueError(f"rank of {algebra.value} supports {parameter} = {low}..{high}, got {size}")


def rank_outcome(algebra: Algebra, size: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> Outcome:
    """Expected rank against every independent computation of it."""
    check_rank_size(algebra, size)
    expected = expected_rank(algebra, size)
    label = f"{algebra.value} {algebra.size_parameter}={size}"
    verdicts = []

    if algebra in (Algebra.BRAUER_A, Algebra.TEMPERLEY_LIEB):
        gens = "full" if algebra == Algebra.BRAUER_A else "tl"
        monoid = enumerate_brauer(size + 1, gens, max_elements=max_elements)
        counted = (
            brauer_rank_by_matchings(size + 1) if gens == "full" else tl_rank_by_planarity(size + 1)
        )
        method = "perfect matchings" if gens == "full" else "planar connectors"
        verdicts.append(CheckVerdict.compare(f"rank {label} by enumeration", expected, len(monoid)))
        verdicts.append(CheckVerdict.compare(f"rank {label} by counting {method}", expected, counted))
    elif algebra == Algebra.DTL_B:
        comparison = dtl_b_rank_methods(size, max_elements)
        verdicts.append(CheckVerdict.compare(f"rank {label} by K1 ∪ K2 images", expected, comparison.by_spanning_set))
        verdicts.append(CheckVerdict.compare(f"rank {label} by enumeration", expected, comparison.by_enumeration))
    else:
        comparison = dtl_c_rank_methods(size, max_elements)
        verdicts.append(CheckVerdict.compare(f"rank {label} by STL basis", expected, comparison.by_spanning_set))
        verdicts.append(CheckVerdict.compare(f"rank {label} by enumeration", expected, comparison.by_enumeration))

    return Outcome(verdicts, {"rank": {"algebra": algebra.value, "size": size, "expected": expected}})


def suite_outcome(suite_name: str, parameters: Dict[str, Any], max_elements: int = DEFAULT_MAX_ELEMENTS) -> Outcome:
    """Run a registered suite.

    Raises:
        KeyError: unknown suite
        ValueError: unsupported parameters
    """
    suite_name = SuiteRegistry.resolve(suite_name)
    suite = SuiteRegistry.get_suite(suite_name)
    context = SuiteContext(suite_name, {k: v for k, v in parameters.items() if v is not None}, max_elements)
    result = suite.execute(context)
    artifacts: Dict[str, Any] = {"suite": {"name": suite_name, "duration": round(result.duration, 6)}}
    if result.error_message:
        artifacts["suite"]["error"] = result.error_message
    return Outcome(result.verdicts, artifacts)


def iso_check_outcome(n: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> Outcome:
    """DTL(C_n) against STL(A_{2n-1}): both ranks, and a constructive surjectivity witness."""
    if not 1 <= n <= 5:
        raise ValueError(f"iso-check supports n = 1..5, got {n}")
    expected = comb(2 * n, n)
    comparison = dtl_c_rank_methods(n, max_elements)
    verdicts = [
        CheckVerdict.compare(f"rank DTL(C{n}) by enumeration", expected, comparison.by_enumeration),
        CheckVerdict.compare(f"|STL basis| on {2 * n} strands", expected, len(stl_basis(n))),
    ]

    targets = sum(len(sets) for sets in sigma_fixed_height0(n).values())
    name = f"σ-invariant height-0 sets of A{2 * n - 1} reachable from B_Y"
    try:
        report = surjectivity_bfs(n)
        witnesses = report.to_json()
        verdicts.append(CheckVerdict.compare(name, targets, report.reached))
    except VerificationError as exc:
        witnesses = exc.details
        unreachable = len(witnesses.get("unreachable", []))
        logger.warning(f"iso-check n={n}: {unreachable} target sets unreachable")
        verdicts.append(
            CheckVerdict(
                name=name,
                expected=targets,
                actual=targets - unreachable,
                status=CheckStatus.FAIL,
                detail=exc.message,
            )
        )
    return Outcome(verdicts, {"witnesses": witnesses})


def layer_agreement(n: int) -> bool:
    """compose_l2 equals compose_l1 on every pair of undecorated diagrams on n+1 strands."""
    diagrams = [ScaledDiagramD.plain(c) for c in all_connectors(n + 1)]
    return all(compose_l1(a, b) == compose_l2(a, b) for a in diagrams for b in diagrams)


def census_outcome(n: int) -> Outcome:
    """Decorated basis census against its closed forms."""
    if not 1 <= n <= 4:
        raise ValueError(f"census supports n = 1..4, got {n}")
    counted = basis_census(n)
    expected = expected_census(n)
    verdicts = [
        CheckVerdict.compare(f"{field} for n={n}", getattr(expected, field), getattr(counted, field))
        for field in counted._fields
    ]
    name = f"compose_l2 agrees with compose_l1 on undecorated pairs, n={n}"
    if n <= LAYER_AGREEMENT_MAX_N:
        verdicts.append(CheckVerdict.holds(name, layer_agreement(n)))
    else:
        verdicts.append(CheckVerdict(name=name, status=CheckStatus.SKIP, detail="too many pairs to compare"))
    return Outcome(verdicts, {"census": counted._asdict()})

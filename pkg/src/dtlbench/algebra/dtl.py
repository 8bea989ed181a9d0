"""Dieck-Temperley-Lieb algebras of types B_n and C_n and their diagram realizations.

DTL(C_n) lives in Br(A_{2n-1}) on 2n strands:

    e_0 -> E_n,  e_i -> E_{n-i} E_{n+i}    (1 <= i <= n-1)

DTL(B_n) lives in the undecorated part of Br(D_{n+1}) on n+1 strands:

    e_0 -> theta delta^-1 U_{1,2},  e_i -> U_{i+1,i+2}

The delta exponent of the e_0 image is the only one for which both
e_0^2 = delta^2 e_0 and e_0 e_1 e_0 = delta e_0 hold.
"""
from __future__ import annotations

import re
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Dict, FrozenSet, Iterator, List, NamedTuple, Optional, Tuple

from ..constants import DEFAULT_MAX_ELEMENTS
from ..core.logging_config import get_logger, log_operation_start, log_operation_success
from ..exceptions import DiagramError, VerificationError
from ..roots.rootsys import DynkinDiagram, Root, root_system
from .connector import Connector, planar_connectors
from .diagrams_a import ScaledDiagramA, diagram_action, gen_e, gen_r, identity
from .diagrams_d import ScaledDiagramD, identity_d, psi_gen
from .monoid import enumerate_monoid
from .scalars import HScalar
from .words import GenWord, Generator, e, evaluate, he, r

logger = get_logger("algebra.dtl")

_LABEL_RE = re.compile(r"^\s*([ABCDEFabcdef])_?(\d+)\s*$")


class Relation(NamedTuple):
    """An instantiated relation ``lhs = rhs``."""

    label: str
    lhs: GenWord
    rhs: GenWord


def _relation(lhs: str, rhs: str) -> Relation:
    left, right = GenWord.parse(lhs), GenWord.parse(rhs)
    return Relation(f"{left} = {right}", left, right)


@dataclass(frozen=True)
class DtlPresentation:
    """Coxeter data of a presentation: nodes, weights kappa, edges, double edge.

    ``double_edge`` is ``(i, j)`` with kappa_j = 2 when the diagram has one.
    """

    family: str
    n: int
    nodes: Tuple[int, ...]
    kappa: Dict[int, int] = field(hash=False)
    edges: FrozenSet[FrozenSet[int]]
    double_edge: Optional[Tuple[int, int]] = None

    @classmethod
    def for_type(cls, family: str, n: int) -> DtlPresentation:
        family = family.upper()
        if family in ("B", "C"):
            if n < 2:
                raise DiagramError(f"{family}{n} needs n >= 2")
            nodes = tuple(range(n))
            edges = frozenset(frozenset((i, i + 1)) for i in range(n - 1))
            if family == "C":
                kappa = {i: 1 if i == 0 else 2 for i in nodes}
                double = (0, 1)
            else:
                kappa = {i: 2 if i == 0 else 1 for i in nodes}
                double = (1, 0)
            return cls(family, n, nodes, kappa, edges, double)
        if family == "F":
            if n != 4:
                raise DiagramError("type F only exists in rank 4")
            nodes = (1, 2, 3, 4)
            edges = frozenset(frozenset(pair) for pair in ((1, 2), (2, 3), (3, 4)))
            return cls("F", 4, nodes, {1: 2, 2: 2, 3: 1, 4: 1}, edges, (3, 2))
        diagram = DynkinDiagram(family, n)
        edges = frozenset(frozenset(edge) for edge in diagram.edges())
        return cls(family, n, tuple(diagram.nodes), {i: 1 for i in diagram.nodes}, edges)

    @classmethod
    def parse(cls, label: str) -> DtlPresentation:
        match = _LABEL_RE.match(label)
        if not match:
            raise DiagramError(f"cannot parse type label {label!r}")
        return cls.for_type(match.group(1), int(match.group(2)))

    @property
    def label(self) -> str:
        return f"{self.family}{self.n}"

    def adjacent(self, i: int, j: int) -> bool:
        return frozenset((i, j)) in self.edges

    def _simple_edges(self) -> Iterator[Tuple[int, int]]:
        """Ordered pairs of adjacent nodes joined by a single edge."""
        double = frozenset(self.double_edge) if self.double_edge else None
        for i in self.nodes:
            for j in self.nodes:
                if i != j and self.adjacent(i, j) and frozenset((i, j)) != double:
                    yield i, j

    def _far_pairs(self) -> Iterator[Tuple[int, int]]:
        for i in self.nodes:
            for j in self.nodes:
                if i < j and not self.adjacent(i, j):
                    yield i, j

    def relations(self) -> List[Relation]:
        """The DTL relations: weighted squares, commutation, simple and double edges."""
        result = [_relation(f"e{i} e{i}", f"δ^{self.kappa[i]} e{i}") for i in self.nodes]
        result += [_relation(f"e{i} e{j}", f"e{j} e{i}") for i, j in self._far_pairs()]
        result += [_relation(f"e{i} e{j} e{i}", f"e{i}") for i, j in self._simple_edges()]
        if self.double_edge:
            i, j = self.double_edge
            result.append(_relation(f"e{j} e{i} e{j}", f"δ e{j}"))
        return result

    def brauer_relations(self) -> List[Relation]:
        """The Brauer relations in r_i and e_i, including the double-edge ones."""
        result = [Relation("δ δ^-1 = 1", GenWord.parse("δ δ^-1"), GenWord())]
        for i in self.nodes:
            result += [
                _relation(f"r{i} r{i}", "1"),
                _relation(f"r{i} e{i}", f"e{i}"),
                _relation(f"e{i} r{i}", f"e{i}"),
                _relation(f"e{i} e{i}", f"δ^{self.kappa[i]} e{i}"),
            ]
        for i, j in self._far_pairs():
            result += [
                _relation(f"r{i} r{j}", f"r{j} r{i}"),
                _relation(f"e{i} r{j}", f"r{j} e{i}"),
                _relation(f"e{j} r{i}", f"r{i} e{j}"),
                _relation(f"e{i} e{j}", f"e{j} e{i}"),
            ]
        for i, j in self._simple_edges():
            if i < j:
                result.append(_relation(f"r{i} r{j} r{i}", f"r{j} r{i} r{j}"))
                result.append(_relation(f"r{i} e{j} r{i}", f"r{j} e{i} r{j}"))
            result.append(_relation(f"r{j} r{i} e{j}", f"e{i} e{j}"))
        if self.double_edge:
            i, j = self.double_edge
            result += [
                _relation(f"r{j} r{i} r{j} r{i}", f"r{i} r{j} r{i} r{j}"),
                _relation(f"r{j} r{i} e{j}", f"r{i} e{j}"),
                _relation(f"r{j} e{i} r{j} e{i}", f"e{i} e{j} e{i}"),
                _relation(f"r{j} r{i} r{j} e{i}", f"e{i} r{j} r{i} r{j}"),
                _relation(f"e{j} r{i} e{j}", f"δ e{j}"),
                _relation(f"e{j} e{i} e{j}", f"δ e{j}"),
                _relation(f"e{j} r{i} r{j}", f"e{j} r{i}"),
                _relation(f"e{j} e{i} r{j}", f"e{j} e{i}"),
            ]
        return result

    def derived_relations(self) -> List[Relation]:
        """Consequences of the Brauer relations for i~j and for paths i~j~k."""
        result = []
        for i, j in self._simple_edges():
            result += [
                _relation(f"e{i} r{j} r{i}", f"e{i} e{j}"),
                _relation(f"r{j} e{i} e{j}", f"r{i} e{j}"),
                _relation(f"e{i} r{j} e{i}", f"e{i}"),
                _relation(f"e{j} e{i} r{j}", f"e{j} r{i}"),
                _relation(f"e{i} e{j} e{i}", f"e{i}"),
            ]
        for i, j in self._simple_edges():
            for k in self.nodes:
                if k != i and self.adjacent(j, k) and not self.adjacent(i, k):
                    result += [
                        _relation(f"e{j} e{i} r{k} e{j}", f"e{j} r{i} e{k} e{j}"),
                        _relation(f"e{j} r{i} r{k} e{j}", f"e{j} e{i} e{k} e{j}"),
                    ]
        return result


# -- hat elements and normal forms -----------------------------------------


@lru_cache(maxsize=None)
def hat_e(i: int, n: int) -> GenWord:
    """ê_0 = e_0 and ê_i = e_i ê_{i-1} e_i, as a word in the e generators."""
    if not 0 <= i <= n - 1:
        raise DiagramError(f"ê{i} is undefined for n = {n}")
    if i == 0:
        return GenWord.of(e(0))
    inner = hat_e(i - 1, n)
    return GenWord.of(e(i)) * inner * GenWord.of(e(i))


def jones_normal_form_words(m: int, letter: Callable[[int], Generator]) -> List[GenWord]:
    """Reduced TL(A_m) words in g_1..g_m (C_{m+1} of them).

    A word is a product of blocks g_j g_{j-1} ... g_k with k <= j, where both
    the j and the k of successive blocks strictly increase.
    """

    def blocks(last_j: int, last_k: int) -> Iterator[List[Tuple[int, int]]]:
        yield []
        for j in range(last_j + 1, m + 1):
            for k in range(last_k + 1, j + 1):
                for rest in blocks(j, k):
                    yield [(j, k)] + rest

    words = []
    for shape in blocks(0, 0):
        letters = [letter(t) for j, k in shape for t in range(j, k - 1, -1)]
        words.append(GenWord(tuple(letters)))
    return words


def spanning_sets(n: int) -> Tuple[List[GenWord], List[GenWord]]:
    """K1 in e_1..e_{n-1} (C_n words) and K2 in ê_0..ê_{n-1} (C_{n+1} words)."""
    k1 = jones_normal_form_words(n - 1, e)
    k2 = jones_normal_form_words(n, lambda t: he(t - 1))
    return k1, k2


# -- diagram realizations ----------------------------------------------------


@lru_cache(maxsize=None)
def _note_e0_normalization() -> None:
    logger.info(
        "e0 is realized as theta*delta^-1*U12; this is the exponent forced by e0^2 = delta^2 e0 "
        "and e0 e1 e0 = delta e0 (the source text writes theta*delta)"
    )


def _index_check(letter: Generator, n: int) -> None:
    if not 0 <= letter.index <= n - 1:
        raise DiagramError(f"generator {letter} is out of range for n = {n}")


@lru_cache(maxsize=None)
def phi_c_image(letter: Generator, n: int) -> ScaledDiagramA:
    """Image of a DTL(C_n) / Br(C_n) generator in Br(A_{2n-1})."""
    _index_check(letter, n)
    strands, i = 2 * n, letter.index
    if letter.kind == "he":
        return phi_c(hat_e(i, n), n)
    make = gen_e if letter.kind == "e" else gen_r
    if i == 0:
        return make(n, strands)
    return make(n - i, strands) * make(n + i, strands)


@lru_cache(maxsize=None)
def phi_b_image(letter: Generator, n: int) -> ScaledDiagramD:
    """Image of a DTL(B_n) / Br(B_n) generator in Br(D_{n+1})."""
    _index_check(letter, n)
    i = letter.index
    if letter.kind == "he":
        return phi_b(hat_e(i, n), n)
    if i >= 1:
        return psi_gen("E" if letter.kind == "e" else "R", i + 2, n)
    strands = n + 1
    if letter.kind == "e":
        _note_e0_normalization()
        cap = Connector.with_caps(strands, [(0, 1)], [(0, 1)])
        return ScaledDiagramD(HScalar.theta(-1), cap)
    marked = frozenset({(0, strands), (1, strands + 1)})
    return ScaledDiagramD(HScalar(), Connector.identity(strands), marked)


def _dtl_only(word: GenWord) -> None:
    for letter in word.letters:
        if letter.kind == "r":
            raise DiagramError(f"{letter} is not a DTL generator")


def phi_c(word: GenWord, n: int) -> ScaledDiagramA:
    _dtl_only(word)
    return evaluate(word, lambda g: phi_c_image(g, n), identity(2 * n))


def phi_b(word: GenWord, n: int) -> ScaledDiagramD:
    _dtl_only(word)
    return evaluate(word, lambda g: phi_b_image(g, n), identity_d(n))


def phi_c_double_laced(word: GenWord, n: int) -> ScaledDiagramA:
    """Br(C_n) words: r_0 -> R_n, r_i -> R_{n-i} R_{n+i}; e letters as in phi_c."""
    return evaluate(word, lambda g: phi_c_image(g, n), identity(2 * n))


def phi_b_double_laced(word: GenWord, n: int) -> ScaledDiagramD:
    """Br(B_n) words: r_0 marks strands 1 and 2, r_i crosses strands i+1 and i+2."""
    return evaluate(word, lambda g: phi_b_image(g, n), identity_d(n))


def verify_identity(lhs: GenWord, rhs: GenWord, rep: Callable[[GenWord], Any]) -> bool:
    """Exact comparison of both sides, scalar and connector, under ``rep``."""
    return bool(rep(lhs) == rep(rhs))


def reverse(word: GenWord) -> GenWord:
    return word.reverse()


def check_brauer_double_laced(family: str, n: int) -> List[Tuple[Relation, bool]]:
    """Evaluate every Br(B_n) or Br(C_n) relation on its diagram images."""
    presentation = DtlPresentation.for_type(family, n)
    if presentation.family not in ("B", "C"):
        raise DiagramError(f"double-laced check needs type B or C, not {presentation.label}")
    rep: Callable[[GenWord], Any]
    if presentation.family == "B":
        rep = lambda w: phi_b_double_laced(w, n)  # noqa: E731
    else:
        rep = lambda w: phi_c_double_laced(w, n)  # noqa: E731
    return [(rel, verify_identity(rel.lhs, rel.rhs, rep)) for rel in presentation.brauer_relations()]


# -- ranks ---------------------------------------------------------------------


def catalan(k: int) -> int:
    result = 1
    for t in range(k):
        result = result * 2 * (2 * t + 1) // (t + 2)
    return result


class RankComparison(NamedTuple):
    by_spanning_set: int
    by_enumeration: int


def dtl_b_rank_methods(n: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> RankComparison:
    start = time.perf_counter()
    log_operation_start(logger, "rank DTL(B)", n=n)
    k1, k2 = spanning_sets(n)
    images = {phi_b(word, n).basis_key for word in k1 + k2}
    generators = [phi_b_image(e(i), n) for i in range(n)]
    monoid = enumerate_monoid(identity_d(n), generators, max_elements=max_elements, label=f"DTL(B{n})")
    result = RankComparison(len(images), len(monoid))
    log_operation_success(logger, "rank DTL(B)", time.perf_counter() - start, n=n, **result._asdict())
    return result


def rank_dtl_b(n: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> int:
    """Rank of DTL(B_n), computed twice.

    Raises:
        VerificationError: the spanning-set image count and the monoid size differ
    """
    comparison = dtl_b_rank_methods(n, max_elements)
    if comparison.by_spanning_set != comparison.by_enumeration:
        raise VerificationError(
            f"DTL(B{n}) rank mismatch: {comparison.by_spanning_set} spanning images, "
            f"{comparison.by_enumeration} monoid elements",
            details=comparison._asdict(),
        )
    return comparison.by_enumeration


def stl_basis(n: int) -> List[Connector]:
    """Planar connectors on 2n strands that are symmetric about the middle axis."""
    return [c for c in planar_connectors(2 * n) if c.mirror() == c]


def dtl_c_rank_methods(n: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> RankComparison:
    start = time.perf_counter()
    log_operation_start(logger, "rank DTL(C)", n=n)
    generators = [phi_c_image(e(i), n) for i in range(n)]
    monoid = enumerate_monoid(identity(2 * n), generators, max_elements=max_elements, label=f"DTL(C{n})")
    result = RankComparison(len(stl_basis(n)), len(monoid))
    log_operation_success(logger, "rank DTL(C)", time.perf_counter() - start, n=n, **result._asdict())
    return result


def rank_dtl_c(n: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> int:
    """Rank of DTL(C_n) by enumeration, checked against the STL basis size.

    Raises:
        VerificationError: the two counts differ
    """
    comparison = dtl_c_rank_methods(n, max_elements)
    if comparison.by_spanning_set != comparison.by_enumeration:
        raise VerificationError(
            f"DTL(C{n}) rank mismatch: |STL basis| = {comparison.by_spanning_set}, "
            f"monoid has {comparison.by_enumeration} elements",
            details=comparison._asdict(),
        )
    return comparison.by_enumeration


# -- surjectivity of phi_C onto STL -----------------------------------------


def y_nodes(i: int, n: int) -> Tuple[int, ...]:
    """Nodes of A_{2n-1}: {n, n+-2, ...} for odd i, {n+-1, n+-3, ...} for even i; i of them."""
    if not 0 <= i <= n:
        raise DiagramError(f"Y_{i} is undefined for n = {n}")
    offsets = range(0, i, 2) if i % 2 else range(1, i, 2)
    nodes = set()
    for offset in offsets:
        nodes.update((n - offset, n + offset))
    return tuple(sorted(nodes))


@dataclass
class SurjectivityReport:
    """Witness words ``w`` with ``phi_c(w) B_{Y_i} = B`` per size ``i``."""

    n: int
    starts: Dict[int, FrozenSet[Root]] = field(default_factory=dict)
    witnesses: Dict[int, Dict[FrozenSet[Root], GenWord]] = field(default_factory=dict)
    unreachable: List[FrozenSet[Root]] = field(default_factory=list)

    @property
    def reached(self) -> int:
        return sum(len(found) for found in self.witnesses.values())

    def to_json(self) -> Dict[str, Any]:
        from ..roots.admissible import format_set

        system = root_system(f"A{2 * self.n - 1}")
        return {
            "n": self.n,
            "sizes": {
                str(i): {
                    "start": format_set(system, self.starts[i]),
                    "witnesses": [
                        {"set": format_set(system, target), "word": str(word)}
                        for target, word in sorted(found.items(), key=lambda item: sorted(item[0]))
                    ],
                }
                for i, found in sorted(self.witnesses.items())
            },
            "unreachable": [format_set(system, target) for target in self.unreachable],
        }


def surjectivity_bfs(n: int) -> SurjectivityReport:
    """Reach every sigma-invariant height-0 admissible set of A_{2n-1} from B_{Y_i}.

    Raises:
        VerificationError: some target set is not reachable
    """
    from ..roots.poset import sigma_fixed_height0

    start_time = time.perf_counter()
    log_operation_start(logger, "surjectivity", n=n)
    system = root_system(f"A{2 * n - 1}")
    targets = sigma_fixed_height0(n)
    actions = [(GenWord.of(e(j)), phi_c_image(e(j), n)) for j in range(n)]
    report = SurjectivityReport(n)

    for size in range(n + 1):
        start = frozenset(system.simple(k) for k in y_nodes(size, n))
        report.starts[size] = start
        words: Dict[FrozenSet[Root], GenWord] = {start: GenWord()}
        frontier = [start]
        while frontier:
            following = []
            for current in frontier:
                for letter, image in actions:
                    moved = diagram_action(image, current)
                    if moved not in words:
                        words[moved] = letter * words[current]
                        following.append(moved)
            frontier = following
        found = {}
        for target in targets.get(size, []):
            if target in words:
                found[target] = words[target]
            else:
                report.unreachable.append(target)
        report.witnesses[size] = found

    log_operation_success(
        logger, "surjectivity", time.perf_counter() - start_time, n=n, reached=report.reached
    )
    if report.unreachable:
        raise VerificationError(
            f"{len(report.unreachable)} sigma-invariant height-0 sets of A{2 * n - 1} are unreachable",
            details=report.to_json(),
        )
    return report

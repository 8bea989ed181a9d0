"""Brauer diagrams of type D_{n+1}.

A ``ScaledDiagramD`` is an element ``kappa * c`` with ``kappa`` in H and
``c`` a decorated (n+1)-connector: a connector together with an even set of
pairs carrying a decoration mark.

Two multiplication layers exist:

* ``compose_l1`` only accepts undecorated operands. It is enough for every
  DTL(B_n) computation, since all generator images are undecorated.
* ``compose_l2`` carries marks along strands. Marks cancel in pairs, a mark
  carried around a cap or cup is worth xi*delta^-1, a plain closed loop is
  worth delta, two decorated loops are worth theta, and a lone decorated loop
  undecorates the smallest decorated pair and is worth theta*delta^-1. Once
  theta is a factor all marks are removed.
"""
from __future__ import annotations

from collections.abc import Hashable
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, FrozenSet, Iterator, List, NamedTuple, Tuple

from ..exceptions import DiagramError, ReductionError
from ..roots.rootsys import Root, RootSystem, root_word
from .connector import Connector, all_connectors
from .scalars import HScalar, Tag

Pair = Tuple[int, int]


@dataclass(frozen=True)
class ScaledDiagramD:
    """Scalar in H times a decorated connector.

    Attributes:
        scalar: canonical H element
        connector: matching on ``2 * (n + 1)`` endpoints
        decorations: decorated pairs as sorted 0-based endpoint pairs
    """

    scalar: HScalar
    connector: Connector
    decorations: FrozenSet[Pair] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        pairs = {(p, q) for p, q in enumerate(self.connector.partner) if p < q}
        if not set(self.decorations) <= pairs:
            raise DiagramError(f"decorations {sorted(self.decorations)} are not pairs of the connector")
        if len(self.decorations) % 2:
            raise DiagramError("a decorated connector needs an even number of decorated pairs")
        if self.scalar.tag is Tag.THETA and self.decorations:
            raise DiagramError("theta-tagged diagrams carry no decorations")
        if self.scalar.tag is not Tag.ONE and not self.connector.has_horizontal:
            raise DiagramError(f"{self.scalar.tag.value}-tagged diagrams need a horizontal strand")

    @classmethod
    def plain(cls, connector: Connector, scalar: HScalar = HScalar()) -> ScaledDiagramD:
        return cls(scalar, connector)

    @property
    def strands(self) -> int:
        return self.connector.strands

    @property
    def decorated(self) -> bool:
        return bool(self.decorations)

    @property
    def basis_key(self) -> Hashable:
        return (self.scalar.tag, self.connector, self.decorations)

    def __mul__(self, other: ScaledDiagramD) -> ScaledDiagramD:
        if not isinstance(other, ScaledDiagramD):
            return NotImplemented
        if self.decorated or other.decorated:
            return compose_l2(self, other)
        return compose_l1(self, other)

    def scaled(self, k: int) -> ScaledDiagramD:
        return ScaledDiagramD(self.scalar.scaled(k), self.connector, self.decorations)

    def transpose(self) -> ScaledDiagramD:
        """Vertical flip, carrying the marks along."""
        n = self.strands

        def flip(p: int) -> int:
            return p + n if p < n else p - n

        marks = frozenset(tuple(sorted((flip(p), flip(q)))) for p, q in self.decorations)
        return ScaledDiagramD(self.scalar, self.connector.transpose(), marks)  # type: ignore[arg-type]

    def to_json(self) -> Dict[str, Any]:
        payload = self.connector.to_json()
        payload.update(self.scalar.to_json())
        payload["decorated"] = [[p + 1, q + 1] for p, q in sorted(self.decorations)]
        return payload

    def __str__(self) -> str:
        marks = "".join(f" *{p + 1}-{q + 1}" for p, q in sorted(self.decorations))
        prefix = "" if self.scalar == HScalar() else f"{self.scalar}·"
        return f"{prefix}[{self.connector}{marks}]"


def compose_l1(a: ScaledDiagramD, b: ScaledDiagramD) -> ScaledDiagramD:
    """Undecorated product: concatenate, one delta per closed loop, scalars in H."""
    if a.decorated or b.decorated:
        raise DiagramError("compose_l1 only accepts undecorated diagrams")
    connector, loops = a.connector.compose(b.connector)
    return ScaledDiagramD((a.scalar * b.scalar).scaled(loops), connector)


def _marks(d: ScaledDiagramD) -> List[int]:
    marks = [0] * (2 * d.strands)
    for p, q in d.decorations:
        marks[p] = marks[q] = 1
    return marks


def _sign_exponent(flips: List[int], turns: int, forward: bool) -> int:
    """Turns a set of marks crosses on its way to the canonical end of a path."""
    return sum(flips) if forward else sum(turns - t for t in flips)


def compose_l2(a: ScaledDiagramD, b: ScaledDiagramD) -> ScaledDiagramD:
    """Decorated product of ``a`` on top of ``b``.

    Each mark sits at the smaller endpoint of its pair. Walking a strand of
    the stacked picture, marks are carried to the smaller endpoint of the
    resulting pair; every cap or cup a mark is carried around contributes
    xi*delta^-1, and two marks meeting on a strand cancel.

    Raises:
        ReductionError: the resulting configuration is outside the rule table
    """
    if a.strands != b.strands:
        raise DiagramError(f"cannot compose {a.strands}-strand and {b.strands}-strand diagrams")
    n = a.strands
    layers = ((a.connector.partner, _marks(a)), (b.connector.partner, _marks(b)))
    visited = [False] * n

    def walk(layer: int, p: int, stop: int = -1) -> Tuple[int, List[int], int]:
        """Follow a strand entering ``layer`` at endpoint ``p``.

        Returns the result endpoint reached (or ``stop``), the number of turns
        before each mark met on the way, and the total number of turns.
        """
        flips: List[int] = []
        turns = 0
        while True:
            partner, marks = layers[layer]
            q = partner[p]
            horizontal = (p < n) == (q < n)
            if marks[p]:
                flips.append(turns + int(horizontal and q < p))
            turns += horizontal
            if layer == 0:
                if q < n:
                    return q, flips, turns
                if q - n == stop:
                    return stop, flips, turns
                visited[q - n] = True
                layer, p = 1, q - n
            else:
                if q >= n:
                    return q, flips, turns
                visited[q] = True
                layer, p = 0, n + q

    result = [-1] * (2 * n)
    decorations = set()
    signs = 0
    for start in range(2 * n):
        if result[start] >= 0:
            continue
        end, flips, turns = walk(0 if start < n else 1, start)
        result[start], result[end] = end, start
        if len(flips) % 2:
            decorations.add((min(start, end), max(start, end)))
        signs += _sign_exponent(flips, turns, start < end)

    plain_loops = decorated_loops = 0
    for m in range(n):
        if visited[m]:
            continue
        visited[m] = True
        _, flips, _ = walk(1, m, stop=m)
        if len(flips) % 2:
            decorated_loops += 1
        else:
            plain_loops += 1
            signs += sum(flips)

    connector = Connector(n, tuple(result))
    scalar = (a.scalar * b.scalar).scaled(plain_loops)
    if signs % 2:
        scalar = scalar * HScalar.xi(-1)
    for _ in range(decorated_loops // 2):
        scalar = scalar * HScalar.theta()
    if decorated_loops % 2:
        if not decorations:
            raise ReductionError(
                "lone decorated loop without a decorated pair",
                dump={"left": a.to_json(), "right": b.to_json(), "connector": connector.to_json()},
            )
        decorations.discard(min(decorations))
        scalar = scalar * HScalar.theta(-1)
    if scalar.tag is Tag.THETA:
        decorations = set()
    try:
        return ScaledDiagramD(scalar, connector, frozenset(decorations))
    except DiagramError as exc:
        raise ReductionError(
            f"product leaves the basis: {exc}",
            dump={"left": a.to_json(), "right": b.to_json(), "scalar": scalar.to_json()},
        ) from exc


def identity_d(n: int) -> ScaledDiagramD:
    return ScaledDiagramD.plain(Connector.identity(n + 1))


def _cap_connector(strands: int, column: int) -> Connector:
    cap = (column, column + 1)
    return Connector.with_caps(strands, [cap], [cap])


def _cross_connector(strands: int, column: int) -> Connector:
    n = strands
    pairs = [(p, n + p) for p in range(n) if p not in (column, column + 1)]
    pairs += [(column, n + column + 1), (column + 1, n + column)]
    return Connector.from_zero_based(n, pairs)


def psi_gen(kind: str, i: int, n: int) -> ScaledDiagramD:
    """Image of R_i or E_i of Br(D_{n+1}) on n+1 strands.

    Node i >= 2 acts on strands {i-1, i}; node 1 is the decorated twin of
    node 2, with both of its non-vertical strands marked.
    """
    strands = n + 1
    if not 1 <= i <= strands:
        raise DiagramError(f"node {i} out of range 1..{strands} for D{strands}")
    kind = kind.upper()
    column = max(i - 2, 0)
    if kind == "E":
        connector = _cap_connector(strands, column)
    elif kind == "R":
        connector = _cross_connector(strands, column)
    else:
        raise DiagramError(f"unknown generator kind {kind!r}")
    if i >= 2:
        return ScaledDiagramD.plain(connector)
    marked = frozenset(
        (p, q) for p, q in enumerate(connector.partner)
        if p < q and (p % strands in (0, 1) or q % strands in (0, 1))
    )
    return ScaledDiagramD(HScalar(), connector, marked)


def psi_generators(n: int) -> List[ScaledDiagramD]:
    nodes = range(1, n + 2)
    return [psi_gen("R", i, n) for i in nodes] + [psi_gen("E", i, n) for i in nodes]


def e_root_d(system: RootSystem, beta: Root) -> ScaledDiagramD:
    """E_beta = w E_i w^-1 for beta = w(alpha_i), built from psi images."""
    if system.family != "D":
        raise DiagramError(f"e_root_d needs a type D root system, not {system.label}")
    n = system.rank - 1
    word, i = root_word(system, beta)
    result = psi_gen("E", i, n)
    for node in reversed(word):
        reflection = psi_gen("R", node, n)
        result = reflection * result * reflection
    return result


def e_set_d(system: RootSystem, roots: FrozenSet[Root]) -> ScaledDiagramD:
    result = identity_d(system.rank - 1)
    for beta in sorted(roots):
        result = result * e_root_d(system, beta)
    return result


def all_decorated_connectors(n: int) -> Iterator[ScaledDiagramD]:
    """Every decorated (n+1)-connector with scalar 1."""
    for connector in all_connectors(n + 1):
        pairs = [(p, q) for p, q in enumerate(connector.partner) if p < q]
        for size in range(0, len(pairs) + 1, 2):
            for marked in combinations(pairs, size):
                yield ScaledDiagramD(HScalar(), connector, frozenset(marked))


class BasisCensus(NamedTuple):
    decorated: int
    undecorated: int
    xi_sector: int
    theta_sector: int


def _double_factorial(k: int) -> int:
    result = 1
    while k > 1:
        result *= k
        k -= 2
    return result


def expected_census(n: int) -> BasisCensus:
    matchings = _double_factorial(2 * n + 1)
    permutations = 1
    for k in range(2, n + 2):
        permutations *= k
    return BasisCensus(
        decorated=matchings * 2**n,
        undecorated=matchings,
        xi_sector=(matchings - permutations) * 2**n,
        theta_sector=matchings - permutations,
    )


def basis_census(n: int) -> BasisCensus:
    """Sizes of T, T^0, xi*T^= and theta*(T^0 and T^=) by brute enumeration."""
    if not 1 <= n <= 4:
        raise DiagramError(f"basis census supports 1 <= n <= 4, got {n}")
    decorated = undecorated = xi_sector = theta_sector = 0
    for d in all_decorated_connectors(n):
        decorated += 1
        horizontal = d.connector.has_horizontal
        if not d.decorated:
            undecorated += 1
            theta_sector += horizontal
        xi_sector += horizontal
    return BasisCensus(decorated, undecorated, xi_sector, theta_sector)

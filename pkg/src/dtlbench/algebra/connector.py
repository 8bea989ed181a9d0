"""Perfect matchings on two rows of points, and their concatenation.

Endpoints are stored 0-based: ``0..N-1`` is the top row left to right and
``N..2N-1`` the bottom row left to right. The JSON form and ``pairs()`` use
the 1-based labels ``1..N`` (top) and ``N+1..2N`` (bottom).
"""
from __future__ import annotations

from collections.abc import Hashable, Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, List, Sequence, Tuple

from ..exceptions import DiagramError


class UnionFind:
    """Union-Find (Disjoint Set Union) with path compression and union by rank."""

    def __init__(self, elements: Iterable[Hashable]) -> None:
        self.parent = {el: el for el in elements}
        self.rank = dict.fromkeys(self.parent, 0)

    def find(self, i: Hashable) -> Hashable:
        if self.parent[i] != i:
            self.parent[i] = self.find(self.parent[i])
        return self.parent[i]

    def union(self, i: Hashable, j: Hashable) -> None:
        root_i = self.find(i)
        root_j = self.find(j)
        if root_i == root_j:
            return
        if self.rank[root_i] < self.rank[root_j]:
            self.parent[root_i] = root_j
        elif self.rank[root_i] > self.rank[root_j]:
            self.parent[root_j] = root_i
        else:
            self.parent[root_j] = root_i
            self.rank[root_i] += 1

    def component_count(self) -> int:
        return len({self.find(el) for el in self.parent})


@dataclass(frozen=True)
class Connector:
    """A perfect matching on ``2 * strands`` endpoints.

    Attributes:
        strands: number of points per row (N)
        partner: ``partner[p]`` is the endpoint matched with ``p``
    """

    strands: int
    partner: Tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.strands
        if n < 0 or len(self.partner) != 2 * n:
            raise DiagramError(f"connector on {n} strands needs {2 * n} endpoints, got {len(self.partner)}")
        for p, q in enumerate(self.partner):
            if not 0 <= q < 2 * n or q == p or self.partner[q] != p:
                raise DiagramError(f"endpoint {p} is not part of a valid pair")

    @classmethod
    def identity(cls, strands: int) -> Connector:
        return cls(strands, tuple(range(strands, 2 * strands)) + tuple(range(strands)))

    @classmethod
    def from_zero_based(cls, strands: int, pairs: Iterable[Tuple[int, int]]) -> Connector:
        partner = [-1] * (2 * strands)
        for p, q in pairs:
            if partner[p] != -1 or partner[q] != -1:
                raise DiagramError(f"endpoint used twice in pair ({p}, {q})")
            partner[p], partner[q] = q, p
        if -1 in partner:
            raise DiagramError("pairs do not cover every endpoint")
        return cls(strands, tuple(partner))

    @classmethod
    def from_pairs(cls, strands: int, pairs: Iterable[Sequence[int]]) -> Connector:
        """Build from 1-based endpoint labels (top 1..N, bottom N+1..2N)."""
        zero_based = []
        for pair in pairs:
            p, q = int(pair[0]) - 1, int(pair[1]) - 1
            if not (0 <= p < 2 * strands and 0 <= q < 2 * strands):
                raise DiagramError(f"pair {tuple(pair)} out of range for {strands} strands")
            zero_based.append((p, q))
        return cls.from_zero_based(strands, zero_based)

    @classmethod
    def with_caps(cls, strands: int, top: Iterable[Tuple[int, int]], bottom: Iterable[Tuple[int, int]]) -> Connector:
        """Caps given as 0-based positions within their row.

        Unused positions are joined left to right by vertical strands, which
        keeps the result planar whenever the caps are.
        """
        n = strands
        pairs: List[Tuple[int, int]] = []
        used_top: set = set()
        used_bottom: set = set()
        for i, j in top:
            pairs.append((i, j))
            used_top.update((i, j))
        for i, j in bottom:
            pairs.append((n + i, n + j))
            used_bottom.update((i, j))
        free_top = [i for i in range(n) if i not in used_top]
        free_bottom = [i for i in range(n) if i not in used_bottom]
        if len(free_top) != len(free_bottom):
            raise DiagramError("top and bottom rows leave different numbers of free points")
        pairs.extend((i, n + j) for i, j in zip(free_top, free_bottom))
        return cls.from_zero_based(n, pairs)

    def pairs(self) -> List[Tuple[int, int]]:
        """Sorted 1-based pairs, smaller endpoint first."""
        return sorted((p + 1, q + 1) for p, q in enumerate(self.partner) if p < q)

    def to_json(self) -> Dict[str, Any]:
        return {"strands": self.strands, "pairs": [list(pair) for pair in self.pairs()]}

    @cached_property
    def top_caps(self) -> Tuple[Tuple[int, int], ...]:
        """Horizontal strands on the top row, as 0-based column pairs."""
        n = self.strands
        return tuple((p, q) for p, q in enumerate(self.partner[:n]) if p < q < n)

    @cached_property
    def bottom_caps(self) -> Tuple[Tuple[int, int], ...]:
        n = self.strands
        return tuple(
            (p - n, q - n) for p, q in enumerate(self.partner) if n <= p < q
        )

    @property
    def has_horizontal(self) -> bool:
        return bool(self.top_caps)

    def transpose(self) -> Connector:
        """Flip top and bottom rows."""
        n = self.strands

        def flip(p: int) -> int:
            return p + n if p < n else p - n

        partner = [0] * (2 * n)
        for p, q in enumerate(self.partner):
            partner[flip(p)] = flip(q)
        return Connector(n, tuple(partner))

    def mirror(self) -> Connector:
        """Reflect through the vertical middle axis: column i becomes N+1-i."""
        n = self.strands

        def reflect(p: int) -> int:
            return n - 1 - p if p < n else 3 * n - 1 - p

        partner = [0] * (2 * n)
        for p, q in enumerate(self.partner):
            partner[reflect(p)] = reflect(q)
        return Connector(n, tuple(partner))

    def _boundary_position(self, p: int) -> int:
        # boundary cycle: top 1..N, then bottom N..1
        n = self.strands
        return p if p < n else 3 * n - 1 - p

    def is_planar(self) -> bool:
        """True iff the matching can be drawn inside the rectangle without crossings."""
        n = self.strands
        at_position = [0] * (2 * n)
        for p in range(2 * n):
            at_position[self._boundary_position(p)] = p
        stack: List[int] = []
        for position, p in enumerate(at_position):
            if self._boundary_position(self.partner[p]) > position:
                stack.append(p)
            elif not stack or stack.pop() != self.partner[p]:
                return False
        return True

    def compose(self, other: Connector) -> Tuple[Connector, int]:
        """Stack ``self`` above ``other``.

        Returns the resulting connector and the number of closed loops formed
        in the middle row.
        """
        if self.strands != other.strands:
            raise DiagramError(f"cannot compose {self.strands}-strand and {other.strands}-strand diagrams")
        n = self.strands
        upper, lower = self.partner, other.partner
        result = [-1] * (2 * n)
        visited = [False] * n

        for start in range(2 * n):
            if result[start] >= 0:
                continue
            in_upper = start < n
            p = start
            while True:
                if in_upper:
                    q = upper[p]
                    if q < n:
                        end = q
                        break
                    m = q - n
                    visited[m] = True
                    in_upper, p = False, m
                else:
                    q = lower[p]
                    if q >= n:
                        end = q
                        break
                    visited[q] = True
                    in_upper, p = True, n + q
            result[start] = end
            result[end] = start

        closed = [m for m in range(n) if not visited[m]]
        loops = 0
        if closed:
            uf = UnionFind(closed)
            for m in closed:
                uf.union(m, upper[n + m] - n)
                uf.union(m, lower[m])
            loops = uf.component_count()
        return Connector(n, tuple(result)), loops

    def __str__(self) -> str:
        return " ".join(f"{p}-{q}" for p, q in self.pairs())


def _non_crossing_matchings(positions: Sequence[int]) -> Iterator[List[Tuple[int, int]]]:
    if not positions:
        yield []
        return
    first = positions[0]
    for k in range(1, len(positions), 2):
        inside, outside = positions[1:k], positions[k + 1:]
        for inner in _non_crossing_matchings(inside):
            for outer in _non_crossing_matchings(outside):
                yield [(first, positions[k])] + inner + outer


def _all_pairings(items: Sequence[int]) -> Iterator[List[Tuple[int, int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], list(items[1:])
    for i, item in enumerate(rest):
        for pairing in _all_pairings(rest[:i] + rest[i + 1:]):
            yield [(first, item)] + pairing


def planar_connectors(strands: int) -> Iterator[Connector]:
    """Yield every non-crossing connector on ``strands`` strands (Catalan many)."""
    n = strands

    def endpoint(position: int) -> int:
        return position if position < n else 3 * n - 1 - position

    for matching in _non_crossing_matchings(list(range(2 * n))):
        yield Connector.from_zero_based(n, ((endpoint(a), endpoint(b)) for a, b in matching))


def all_connectors(strands: int) -> Iterator[Connector]:
    """Yield every perfect matching on ``2 * strands`` endpoints."""
    for pairing in _all_pairings(list(range(2 * strands))):
        yield Connector.from_zero_based(strands, pairing)

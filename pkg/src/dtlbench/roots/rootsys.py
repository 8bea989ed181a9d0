"""Simply-laced root systems of types A, D and E.

Roots are integer coefficient tuples over the simple roots alpha_1..alpha_n.
The epsilon realization is a derived view for types A and D:

* A_n: alpha_k = e_k - e_{k+1} in R^{n+1}
* D_n: alpha_1 = e_2 - e_1, alpha_2 = e_2 + e_1, alpha_k = e_k - e_{k-1} (k >= 3)

Node numbering: A_n is the path 1..n; D_n has fork nodes 1 and 2 attached to
node 3 followed by the path 3..n; E_n uses Bourbaki numbering.
"""
from __future__ import annotations

import re
from collections import deque
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx
import numpy as np

from ..exceptions import RootSystemError

Root = Tuple[int, ...]

_LABEL_RE = re.compile(r"^\s*([ADEade])_?(\d+)\s*$")
_TERM_RE = re.compile(r"([+-]?)\s*(\d*)\s*[aα]_?(\d+)")


def _ade_edges(family: str, rank: int) -> List[Tuple[int, int]]:
    if family == "A" and rank >= 1:
        return [(i, i + 1) for i in range(1, rank)]
    if family == "D" and rank >= 3:
        return [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, rank)]
    if family == "E" and rank in (6, 7, 8):
        return [(1, 3), (2, 4)] + [(i, i + 1) for i in range(3, rank)]
    raise RootSystemError(f"{family}{rank} is not a supported simply-laced diagram")


class DynkinDiagram:
    """A simply-laced Coxeter diagram on nodes 1..n."""

    def __init__(self, family: str, rank: int):
        family = family.upper()
        self.family = family
        self.rank = rank
        self.graph = nx.Graph()
        self.graph.add_nodes_from(range(1, rank + 1))
        self.graph.add_edges_from(_ade_edges(family, rank))

    @classmethod
    def parse(cls, label: str) -> DynkinDiagram:
        match = _LABEL_RE.match(label)
        if not match:
            raise RootSystemError(f"cannot parse diagram label {label!r}")
        return cls(match.group(1), int(match.group(2)))

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def nodes(self) -> List[int]:
        return list(range(1, self.rank + 1))

    def adjacent(self, i: int, j: int) -> bool:
        return self.graph.has_edge(i, j)

    def edges(self) -> List[Tuple[int, int]]:
        return sorted(tuple(sorted(edge)) for edge in self.graph.edges())

    def __repr__(self) -> str:
        return f"DynkinDiagram({self.label})"


def positive_roots(diagram: DynkinDiagram) -> FrozenSet[Root]:
    """Close the simple roots under adding alpha_i whenever (beta, alpha_i) < 0."""
    return frozenset(RootSystem(diagram).positive_roots)


class RootSystem:
    """Root system of a simply-laced diagram with its inner-product table."""

    def __init__(self, diagram: DynkinDiagram):
        self.diagram = diagram
        n = diagram.rank
        self.rank = n
        self.cartan = 2 * np.eye(n, dtype=np.int64)
        for i, j in diagram.edges():
            self.cartan[i - 1, j - 1] = self.cartan[j - 1, i - 1] = -1

        self.simple_roots: Tuple[Root, ...] = tuple(
            tuple(int(i == k) for k in range(n)) for i in range(n)
        )
        self.positive_roots: Tuple[Root, ...] = self._close_simple_roots()
        self._positive = frozenset(self.positive_roots)

        all_roots = list(self.positive_roots) + [self.negate(r) for r in self.positive_roots]
        self._index: Dict[Root, int] = {root: k for k, root in enumerate(all_roots)}
        matrix = np.array(all_roots, dtype=np.int64)
        self._gram: List[List[int]] = (matrix @ self.cartan @ matrix.T).tolist()
        # orbit-form verdicts of admissibility, filled one W-orbit at a time
        self.orbit_verdicts: Dict[FrozenSet[Root], bool] = {}

    def _close_simple_roots(self) -> Tuple[Root, ...]:
        found = set(self.simple_roots)
        queue = deque(self.simple_roots)
        while queue:
            beta = queue.popleft()
            row = np.array(beta, dtype=np.int64) @ self.cartan
            for i in range(self.rank):
                if row[i] < 0:
                    gamma = tuple(c + (k == i) for k, c in enumerate(beta))
                    if gamma not in found:
                        found.add(gamma)
                        queue.append(gamma)
        return tuple(sorted(found, key=lambda r: (sum(r), r)))

    @property
    def label(self) -> str:
        return self.diagram.label

    @property
    def family(self) -> str:
        return self.diagram.family

    # -- basic queries -------------------------------------------------

    def is_root(self, beta: Root) -> bool:
        return beta in self._index

    def is_positive(self, beta: Root) -> bool:
        return beta in self._positive

    @staticmethod
    def negate(beta: Root) -> Root:
        return tuple(-c for c in beta)

    def fold(self, beta: Root) -> Root:
        """The positive root among +beta and -beta."""
        return beta if beta in self._positive else self.negate(beta)

    def inner(self, a: Root, b: Root) -> int:
        ia, ib = self._index.get(a), self._index.get(b)
        if ia is not None and ib is not None:
            return self._gram[ia][ib]
        return int(np.array(a, dtype=np.int64) @ self.cartan @ np.array(b, dtype=np.int64))

    def simple(self, i: int) -> Root:
        if not 1 <= i <= self.rank:
            raise RootSystemError(f"node {i} is not in {self.label}")
        return self.simple_roots[i - 1]

    def reflect(self, beta: Root, alpha: Root) -> Root:
        """s_alpha(beta) = beta - (beta, alpha) alpha."""
        if alpha not in self._index:
            raise RootSystemError(f"{self.format_root(alpha)} is not a root of {self.label}")
        if beta not in self._index:
            raise RootSystemError(f"{self.format_root(beta)} is not a root of {self.label}")
        c = self.inner(beta, alpha)
        return tuple(b - c * a for b, a in zip(beta, alpha))

    def simple_reflection(self, i: int, beta: Root) -> Root:
        return self.reflect(beta, self.simple(i))

    def height(self, beta: Root) -> int:
        if beta not in self._positive:
            raise RootSystemError(f"{self.format_root(beta)} is not a positive root of {self.label}")
        return sum(beta)

    # -- epsilon view --------------------------------------------------

    def _require_classical(self) -> None:
        if self.family not in ("A", "D"):
            raise RootSystemError(f"no epsilon realization is implemented for {self.label}")

    def to_epsilon(self, beta: Root) -> Tuple[int, ...]:
        self._require_classical()
        n = self.rank
        if self.family == "A":
            vec = [0] * (n + 1)
            for k, c in enumerate(beta):
                vec[k] += c
                vec[k + 1] -= c
            return tuple(vec)
        vec = [0] * n
        vec[1] += beta[0] + beta[1]
        vec[0] += beta[1] - beta[0]
        for k in range(2, n):
            vec[k] += beta[k]
            vec[k - 1] -= beta[k]
        return tuple(vec)

    def from_epsilon(self, vec: Iterable[int]) -> Root:
        self._require_classical()
        v = list(vec)
        n = self.rank
        if self.family == "A":
            if len(v) != n + 1 or sum(v) != 0:
                raise RootSystemError(f"{v} is not in the A_{n} root lattice")
            coeffs, running = [], 0
            for k in range(n):
                running += v[k]
                coeffs.append(running)
            return tuple(coeffs)
        if len(v) != n:
            raise RootSystemError(f"{v} has the wrong length for {self.label}")
        c = [0] * n
        c[n - 1] = v[n - 1]
        for k in range(n - 2, 1, -1):
            c[k] = v[k] + c[k + 1]
        third = c[2] if n > 2 else 0
        twice_c2 = v[1] + third + v[0]
        twice_c1 = v[1] + third - v[0]
        if twice_c1 % 2 or twice_c2 % 2:
            raise RootSystemError(f"{v} is not in the {self.label} root lattice")
        c[0], c[1] = twice_c1 // 2, twice_c2 // 2
        return tuple(c)

    def star(self, beta: Root) -> Root:
        """(e_j +- e_i)* = e_j -+ e_i for type D."""
        if self.family != "D":
            raise RootSystemError(f"star is only defined for type D, not {self.label}")
        if beta not in self._positive:
            raise RootSystemError(f"{self.format_root(beta)} is not a positive root of {self.label}")
        vec = list(self.to_epsilon(beta))
        lower = min(k for k, c in enumerate(vec) if c)
        vec[lower] = -vec[lower]
        return self.from_epsilon(vec)

    # -- text ----------------------------------------------------------

    @staticmethod
    def format_root(beta: Root) -> str:
        terms = []
        for k, c in enumerate(beta, start=1):
            if c == 0:
                continue
            magnitude = "" if abs(c) == 1 else str(abs(c))
            sign = "-" if c < 0 else "+"
            terms.append(f"{sign}{magnitude}a{k}")
        if not terms:
            return "0"
        text = "".join(terms)
        return text[1:] if text.startswith("+") else text

    def format_epsilon(self, beta: Root) -> str:
        vec = self.to_epsilon(beta)
        order = range(len(vec) - 1, -1, -1) if self.family == "D" else range(len(vec))
        text = ""
        for k in order:
            c = vec[k]
            if c == 0:
                continue
            magnitude = "" if abs(c) == 1 else str(abs(c))
            text += f"{'-' if c < 0 else '+'}{magnitude}ε{k + 1}"
        return text[1:] if text.startswith("+") else text or "0"

    def parse_root(self, text: str) -> Root:
        """Parse a literal such as ``a1+a2+2a3+a4``."""
        compact = text.replace(" ", "")
        coeffs = [0] * self.rank
        position = 0
        for match in _TERM_RE.finditer(compact):
            if match.start() != position:
                break
            sign = -1 if match.group(1) == "-" else 1
            factor = int(match.group(2)) if match.group(2) else 1
            node = int(match.group(3))
            if not 1 <= node <= self.rank:
                raise RootSystemError(f"node {node} in {text!r} is not in {self.label}")
            coeffs[node - 1] += sign * factor
            position = match.end()
        if position != len(compact) or not compact:
            raise RootSystemError(f"cannot parse root literal {text!r}")
        root = tuple(coeffs)
        if root not in self._index:
            raise RootSystemError(f"{text!r} is not a root of {self.label}")
        return root

    def parse_root_set(self, text: Optional[str]) -> FrozenSet[Root]:
        """Parse a comma separated list of root literals; empty means the empty set."""
        if text is None or text.strip() in ("", "{}", "∅"):
            return frozenset()
        return frozenset(self.parse_root(part) for part in text.split(",") if part.strip())

    def __repr__(self) -> str:
        return f"RootSystem({self.label})"


@lru_cache(maxsize=32)
def root_system(label: str) -> RootSystem:
    """Shared root system for a diagram label such as ``D4``."""
    return RootSystem(DynkinDiagram.parse(label))


def weyl_group_order(system: RootSystem) -> int:
    """Order of W by breadth-first search over images of the simple roots.

    An element of W is determined by where it sends the simple roots, so the
    number of distinct image tuples reachable by simple reflections is |W|.
    """
    start = system.simple_roots
    seen = {start}
    queue = deque([start])
    while queue:
        images = queue.popleft()
        for i in range(1, system.rank + 1):
            moved = tuple(system.simple_reflection(i, beta) for beta in images)
            if moved not in seen:
                seen.add(moved)
                queue.append(moved)
    return len(seen)


def root_word(system: RootSystem, beta: Root) -> Tuple[Tuple[int, ...], int]:
    """Find ``(w, i)`` with beta = w(alpha_i).

    ``w`` is a sequence of nodes read as the product s_{w[0]} s_{w[1]} ...
    """
    if not system.is_root(beta):
        raise RootSystemError(f"{system.format_root(beta)} is not a root of {system.label}")
    origin: Dict[Root, Tuple[Tuple[int, ...], int]] = {}
    queue: deque = deque()
    for i in range(1, system.rank + 1):
        alpha = system.simple(i)
        if alpha not in origin:
            origin[alpha] = ((), i)
            queue.append(alpha)
    while queue:
        gamma = queue.popleft()
        if gamma == beta:
            return origin[gamma]
        word, i = origin[gamma]
        for j in range(1, system.rank + 1):
            image = system.simple_reflection(j, gamma)
            if image not in origin:
                origin[image] = ((j,) + word, i)
                queue.append(image)
    raise RootSystemError(f"{system.format_root(beta)} is not in the W-orbit of a simple root")

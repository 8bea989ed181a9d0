"""Monoidal posets on W-orbits of admissible sets, their heights and DOT output."""
from __future__ import annotations

from typing import Dict, Iterable, Iterator, List, Optional

import networkx as nx

from ..core.logging_config import get_logger
from ..exceptions import AdmissibilityError
from .admissible import RootSet, canonical, format_set, sigma_fixed_sets, weyl_action, weyl_orbit
from .rootsys import Root, RootSystem, root_system

logger = get_logger("roots.poset")

RAISE = "raise"
LOWER = "lower"


def classify_move(system: RootSystem, roots: RootSet, i: int) -> Optional[str]:
    """Whether R_i raises or lowers ``roots``; ``None`` when R_i fixes it.

    The roots of least height in the symmetric difference of B and R_i B
    decide: all of them in R_i B means R_i lowers B, all of them in B means
    R_i raises B.
    """
    moved = weyl_action(system, [i], roots)
    if moved == roots:
        return None
    difference = roots ^ moved
    lowest = min(sum(beta) for beta in difference)
    witnesses = [beta for beta in difference if sum(beta) == lowest]
    if all(beta in moved for beta in witnesses):
        return LOWER
    if all(beta in roots for beta in witnesses):
        return RAISE
    raise AdmissibilityError(
        f"R{i} neither raises nor lowers {format_set(system, roots)}",
        roots=list(canonical(roots)),
    )


class OrbitPoset:
    """A W-orbit of admissible sets ordered by raising reflections.

    Edges of ``graph`` run from the lower set to the higher one and carry the
    node of the reflection as ``node``.
    """

    def __init__(self, system: RootSystem, seed: Iterable[Root]):
        self.system = system
        self.seed = frozenset(seed)
        self.graph = nx.DiGraph()
        self.members: List[RootSet] = sorted(weyl_orbit(system, self.seed), key=canonical)
        self.graph.add_nodes_from(self.members)

        for member in self.members:
            for i in system.diagram.nodes:
                verdict = classify_move(system, member, i)
                if verdict is None:
                    continue
                other = weyl_action(system, [i], member)
                low, high = (member, other) if verdict == RAISE else (other, member)
                if self.graph.has_edge(high, low):
                    raise AdmissibilityError(
                        f"R{i} is classified both ways between {format_set(system, low)} "
                        f"and {format_set(system, high)}",
                        roots=list(canonical(member)),
                    )
                self.graph.add_edge(low, high, node=i)

        maximal = [m for m in self.members if self.graph.out_degree(m) == 0]
        if len(maximal) != 1:
            raise AdmissibilityError(
                f"orbit of {format_set(system, self.seed)} has {len(maximal)} maximal elements",
                roots=list(canonical(self.seed)),
            )
        self.maximal: RootSet = maximal[0]

        distances = nx.single_source_shortest_path_length(self.graph.to_undirected(), self.maximal)
        self.depth = max(distances.values())
        self._heights: Dict[RootSet, int] = {m: self.depth - distances[m] for m in self.members}
        logger.debug(
            "orbit poset built",
            extra={"context": {"system": system.label, "size": len(self.members), "depth": self.depth}},
        )

    def __contains__(self, roots: object) -> bool:
        return roots in self._heights

    def __len__(self) -> int:
        return len(self.members)

    def height(self, roots: Iterable[Root]) -> int:
        key = frozenset(roots)
        if key not in self._heights:
            raise AdmissibilityError(
                f"{format_set(self.system, key)} is not in this orbit", roots=list(canonical(key))
            )
        return self._heights[key]

    @property
    def minimal(self) -> List[RootSet]:
        return [m for m in self.members if self.graph.in_degree(m) == 0]

    def by_height(self) -> Dict[int, List[RootSet]]:
        layers: Dict[int, List[RootSet]] = {}
        for member in self.members:
            layers.setdefault(self._heights[member], []).append(member)
        return dict(sorted(layers.items()))

    def to_dot(self, name: str = "orbit") -> str:
        return "\n".join(self._dot_lines(name)) + "\n"

    def _dot_lines(self, name: str) -> Iterator[str]:
        ids = {member: f"n{k}" for k, member in enumerate(self.members)}
        yield f"digraph {name} {{"
        yield "  rankdir=BT;"
        yield "  node [shape=box, fontname=monospace];"
        for height, layer in self.by_height().items():
            yield f"  // height {height}"
            yield "  {rank=same"
            for member in layer:
                label = format_set(self.system, member)
                yield f'    {ids[member]} [label="{label}\\nh={height}"];'
            yield "  }"
        for low, high, data in sorted(
            self.graph.edges(data=True), key=lambda e: (ids[e[0]], ids[e[1]])
        ):
            yield f'  {ids[low]} -> {ids[high]} [label="R{data["node"]}"];'
        yield "}"


def orbit(system: RootSystem, roots: Iterable[Root]) -> OrbitPoset:
    return OrbitPoset(system, roots)


def set_height(roots: Iterable[Root], poset: OrbitPoset) -> int:
    return poset.height(roots)


def sigma_fixed_height0(n: int) -> Dict[int, List[RootSet]]:
    """sigma-invariant admissible sets of A_{2n-1} of height 0, grouped by size."""
    system = root_system(f"A{2 * n - 1}")
    posets: List[OrbitPoset] = []
    grouped: Dict[int, List[RootSet]] = {}
    for members in sigma_fixed_sets(n):
        poset = next((p for p in posets if members in p), None)
        if poset is None:
            poset = OrbitPoset(system, members)
            posets.append(poset)
        if poset.height(members) == 0:
            grouped.setdefault(len(members), []).append(members)
    return grouped

"""Brauer and Temperley-Lieb diagrams of type A.

A ``ScaledDiagramA`` is a power of delta times a connector on N strands; it
realizes the Brauer monoid of type A_{N-1}. Generators use 1-based node
indices ``1..N-1``.

Roots of A_{N-1} are coefficient tuples of length N-1. The root
e_i - e_j (i < j, 1-based) corresponds to a horizontal strand between top
points i and j and has coefficients 1 exactly at positions i..j-1.
"""
from __future__ import annotations

from collections.abc import Hashable
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, FrozenSet, Iterable, List, Tuple, Union

from ..constants import DEFAULT_MAX_ELEMENTS, WORD_HEIGHT_MAX_STRANDS
from ..exceptions import DiagramError, EnumerationLimitError
from .connector import Connector, all_connectors, planar_connectors
from .monoid import cayley_distances, enumerate_monoid
from .scalars import DeltaPower

Root = Tuple[int, ...]


@dataclass(frozen=True)
class ScaledDiagramA:
    """delta^k times a connector."""

    scalar: DeltaPower
    connector: Connector

    @classmethod
    def of(cls, connector: Connector, k: int = 0) -> ScaledDiagramA:
        return cls(DeltaPower(k), connector)

    @property
    def strands(self) -> int:
        return self.connector.strands

    @property
    def basis_key(self) -> Hashable:
        return self.connector

    def __mul__(self, other: ScaledDiagramA) -> ScaledDiagramA:
        if not isinstance(other, ScaledDiagramA):
            return NotImplemented
        return compose(self, other)

    def scaled(self, k: int) -> ScaledDiagramA:
        return ScaledDiagramA(self.scalar.scaled(k), self.connector)

    def to_json(self) -> Dict[str, Any]:
        payload = self.connector.to_json()
        payload["delta"] = self.scalar.k
        return payload

    @classmethod
    def from_json(cls, payload: Dict[str, Any]) -> ScaledDiagramA:
        connector = Connector.from_pairs(int(payload["strands"]), payload["pairs"])
        return cls(DeltaPower(int(payload.get("delta", 0))), connector)

    def __str__(self) -> str:
        prefix = "" if self.scalar.k == 0 else f"{self.scalar}·"
        return f"{prefix}[{self.connector}]"


def compose(a: ScaledDiagramA, b: ScaledDiagramA) -> ScaledDiagramA:
    """The product ab: ``a`` stacked on top of ``b``, each closed loop worth delta."""
    connector, loops = a.connector.compose(b.connector)
    return ScaledDiagramA((a.scalar * b.scalar).scaled(loops), connector)


def identity(strands: int) -> ScaledDiagramA:
    return ScaledDiagramA.of(Connector.identity(strands))


def _check_node(i: int, strands: int) -> None:
    if not 1 <= i <= strands - 1:
        raise DiagramError(f"generator index {i} out of range 1..{strands - 1}")


def gen_e(i: int, strands: int) -> ScaledDiagramA:
    """Cup-cap joining top points i, i+1 and bottom points i, i+1."""
    _check_node(i, strands)
    cap = (i - 1, i)
    return ScaledDiagramA.of(Connector.with_caps(strands, [cap], [cap]))


def gen_r(i: int, strands: int) -> ScaledDiagramA:
    """Crossing of strands i and i+1."""
    _check_node(i, strands)
    n = strands
    pairs = [(p, n + p) for p in range(n) if p not in (i - 1, i)]
    pairs += [(i - 1, n + i), (i, n + i - 1)]
    return ScaledDiagramA.of(Connector.from_zero_based(n, pairs))


def _connector(d: Union[ScaledDiagramA, Connector]) -> Connector:
    return d.connector if isinstance(d, ScaledDiagramA) else d


def is_planar(d: Union[ScaledDiagramA, Connector]) -> bool:
    return _connector(d).is_planar()


def mirror(d: ScaledDiagramA) -> ScaledDiagramA:
    """Reflection through the vertical middle axis, a monoid automorphism."""
    return ScaledDiagramA(d.scalar, d.connector.mirror())


def transpose(d: ScaledDiagramA) -> ScaledDiagramA:
    """Vertical flip, an anti-automorphism."""
    return ScaledDiagramA(d.scalar, d.connector.transpose())


def brauer_generators(strands: int) -> List[ScaledDiagramA]:
    nodes = range(1, strands)
    return [gen_r(i, strands) for i in nodes] + [gen_e(i, strands) for i in nodes]


def tl_generators(strands: int) -> List[ScaledDiagramA]:
    return [gen_e(i, strands) for i in range(1, strands)]


def enumerate_brauer(
    strands: int, gens: str = "full", max_elements: int = DEFAULT_MAX_ELEMENTS
) -> Dict[Hashable, ScaledDiagramA]:
    """Br(A_{N-1}) (``gens="full"``) or TL(A_{N-1}) (``gens="tl"``) modulo delta."""
    if gens not in ("full", "tl"):
        raise DiagramError(f"unknown generator set {gens!r}")
    generators = brauer_generators(strands) if gens == "full" else tl_generators(strands)
    label = f"{'Br' if gens == 'full' else 'TL'}(A{strands - 1})"
    return enumerate_monoid(identity(strands), generators, max_elements=max_elements, label=label)


def brauer_rank_by_matchings(strands: int) -> int:
    return sum(1 for _ in all_connectors(strands))


def tl_rank_by_planarity(strands: int) -> int:
    return sum(1 for _ in planar_connectors(strands))


@lru_cache(maxsize=None)
def word_heights(strands: int) -> Dict[Connector, int]:
    """Height of every Br(A_{N-1}) basis element.

    The height is the least number of R generators in any expression, found
    as a 0-1 shortest path in the left Cayley graph (R edges cost 1, E edges
    cost 0).
    """
    if strands > WORD_HEIGHT_MAX_STRANDS:
        raise EnumerationLimitError(
            f"word heights are only computed for at most {WORD_HEIGHT_MAX_STRANDS} strands",
            limit=WORD_HEIGHT_MAX_STRANDS,
        )
    nodes = strands - 1
    distances = cayley_distances(
        identity(strands), brauer_generators(strands), [1] * nodes + [0] * nodes
    )
    return {key: value for key, value in distances.items()}  # type: ignore[misc]


def word_height(d: ScaledDiagramA) -> int:
    return word_heights(d.strands)[d.connector]


# -- diagram tops and admissible sets --------------------------------------


def root_of_cap(i: int, j: int, strands: int) -> Root:
    """Root e_{i+1} - e_{j+1} for the 0-based cap (i, j), i < j."""
    lo, hi = min(i, j), max(i, j)
    return tuple(int(lo <= k < hi) for k in range(strands - 1))


def cap_of_root(beta: Root) -> Tuple[int, int]:
    """Inverse of :func:`root_of_cap` for positive type-A roots."""
    support = [k for k, c in enumerate(beta) if c]
    if not support or any(c not in (0, 1) for c in beta) or support != list(range(support[0], support[-1] + 1)):
        raise DiagramError(f"{beta} is not a positive root of type A")
    return support[0], support[-1] + 1


def top_of(d: Union[ScaledDiagramA, Connector]) -> FrozenSet[Root]:
    connector = _connector(d)
    return frozenset(root_of_cap(i, j, connector.strands) for i, j in connector.top_caps)


def completion(roots: Iterable[Root], strands: int) -> Connector:
    """A connector whose top is ``roots``, with no further horizontal strands."""
    caps = [cap_of_root(beta) for beta in roots]
    return Connector.with_caps(strands, caps, caps)


def diagram_action(a: ScaledDiagramA, roots: Iterable[Root]) -> FrozenSet[Root]:
    """Top of ``a·b`` where ``b`` completes the diagram top of ``roots``."""
    b = completion(roots, a.strands)
    product, _ = a.connector.compose(b)
    return top_of(product)


def e_beta(beta: Root, strands: int) -> ScaledDiagramA:
    cap = cap_of_root(beta)
    if cap[1] >= strands:
        raise DiagramError(f"{beta} does not fit on {strands} strands")
    return ScaledDiagramA.of(Connector.with_caps(strands, [cap], [cap]))


def e_set(roots: Iterable[Root], strands: int) -> ScaledDiagramA:
    """E_B, the product of E_beta over B."""
    result = identity(strands)
    for beta in sorted(roots):
        result = result * e_beta(beta, strands)
    return result

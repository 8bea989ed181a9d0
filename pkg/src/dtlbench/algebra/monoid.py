"""Breadth-first enumeration of finitely generated diagram monoids modulo delta."""
from __future__ import annotations

import time
from collections import deque
from collections.abc import Hashable
from typing import Dict, Protocol, Sequence, TypeVar

from ..constants import DEFAULT_MAX_ELEMENTS
from ..core.logging_config import get_logger, log_operation_start, log_operation_success
from ..exceptions import EnumerationLimitError

logger = get_logger("algebra.monoid")


class MonoidElement(Protocol):
    """What the enumerator needs from a diagram type."""

    @property
    def basis_key(self) -> Hashable: ...

    def __mul__(self, other: "MonoidElement") -> "MonoidElement": ...


T = TypeVar("T", bound=MonoidElement)


def enumerate_monoid(
    identity: T,
    generators: Sequence[T],
    max_elements: int = DEFAULT_MAX_ELEMENTS,
    label: str = "monoid",
) -> Dict[Hashable, T]:
    """Close ``{identity}`` under left multiplication by ``generators``.

    Elements are deduplicated by ``basis_key``, which forgets the delta power.
    The first representative found for each key is kept, so the mapping is in
    BFS order and deterministic.

    Raises:
        EnumerationLimitError: more than ``max_elements`` distinct elements
    """
    start = time.perf_counter()
    log_operation_start(logger, f"enumerate {label}", generators=len(generators), cap=max_elements)

    seen: Dict[Hashable, T] = {identity.basis_key: identity}
    queue = deque([identity])
    while queue:
        element = queue.popleft()
        for generator in generators:
            product = generator * element
            key = product.basis_key
            if key in seen:
                continue
            if len(seen) >= max_elements:
                raise EnumerationLimitError(
                    f"{label} has more than {max_elements} elements", limit=max_elements
                )
            seen[key] = product  # type: ignore[assignment]
            queue.append(product)  # type: ignore[arg-type]

    log_operation_success(logger, f"enumerate {label}", time.perf_counter() - start, elements=len(seen))
    return seen


def cayley_distances(
    identity: T,
    generators: Sequence[T],
    weights: Sequence[int],
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> Dict[Hashable, int]:
    """0-1 shortest paths from the identity in the left Cayley graph mod delta.

    ``weights[g]`` must be 0 or 1 and is charged for every use of
    ``generators[g]``.
    """
    distances: Dict[Hashable, int] = {identity.basis_key: 0}
    elements: Dict[Hashable, T] = {identity.basis_key: identity}
    queue = deque([identity.basis_key])
    settled: set = set()
    while queue:
        key = queue.popleft()
        if key in settled:
            continue
        settled.add(key)
        element = elements[key]
        for generator, weight in zip(generators, weights):
            product = generator * element
            target = product.basis_key
            candidate = distances[key] + weight
            if target in distances and distances[target] <= candidate:
                continue
            if target not in elements:
                if len(elements) >= max_elements:
                    raise EnumerationLimitError(
                        f"Cayley graph has more than {max_elements} vertices", limit=max_elements
                    )
                elements[target] = product  # type: ignore[assignment]
            distances[target] = candidate
            if weight == 0:
                queue.appendleft(target)
            else:
                queue.append(target)
    return distances

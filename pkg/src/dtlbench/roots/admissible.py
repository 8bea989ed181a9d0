"""Admissible sets of mutually orthogonal positive roots.

Two characterizations are implemented and cross-checked:

* orbit form: a W-orbit of orthogonal sets is admissible when for every
  member B, non-adjacent nodes i != j and roots gamma, gamma - alpha_i + alpha_j
  in B, the reflections R_i and R_j move B to the same set;
* closure rule: whenever distinct gamma_1, gamma_2, gamma_3 in B and a root
  gamma satisfy (gamma, gamma_k) = -1 for all k, the positive root
  +-(2 gamma + gamma_1 + gamma_2 + gamma_3) lies in B.

Sets are ``frozenset`` values of coefficient tuples; anything that needs a
deterministic order uses :func:`canonical`.
"""
from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from ..algebra.words import GenWord
from ..core.logging_config import get_logger
from ..exceptions import AdmissibilityError
from .rootsys import Root, RootSystem, root_system

RootSet = FrozenSet[Root]

logger = get_logger("roots.admissible")


def canonical(roots: Iterable[Root]) -> Tuple[Root, ...]:
    return tuple(sorted(roots))


def format_set(system: RootSystem, roots: Iterable[Root]) -> str:
    items = canonical(roots)
    if not items:
        return "∅"
    return "{" + ", ".join(system.format_root(beta) for beta in items) + "}"


def is_orthogonal_set(system: RootSystem, roots: Iterable[Root]) -> bool:
    items = list(roots)
    if not all(system.is_positive(beta) for beta in items):
        return False
    return all(system.inner(a, b) == 0 for a, b in combinations(items, 2))


def require_orthogonal(system: RootSystem, roots: Iterable[Root]) -> RootSet:
    result = frozenset(roots)
    if not is_orthogonal_set(system, result):
        raise AdmissibilityError(
            f"{format_set(system, result)} is not a set of mutually orthogonal positive roots",
            roots=list(canonical(result)),
        )
    return result


def weyl_action(system: RootSystem, word: Sequence[int], roots: Iterable[Root]) -> RootSet:
    """Apply s_{word[0]} ... s_{word[-1]} (rightmost first), folding into positive roots."""
    current = frozenset(roots)
    for i in reversed(word):
        alpha = system.simple(i)
        current = frozenset(system.fold(system.reflect(beta, alpha)) for beta in current)
    return current


def reflect_set(system: RootSystem, alpha: Root, roots: Iterable[Root]) -> RootSet:
    return frozenset(system.fold(system.reflect(beta, alpha)) for beta in roots)


def weyl_orbit(system: RootSystem, roots: Iterable[Root]) -> List[RootSet]:
    """All sets W(roots), in breadth-first order from ``roots``."""
    start = frozenset(roots)
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for i in system.diagram.nodes:
            image = weyl_action(system, [i], current)
            if image not in seen:
                seen.add(image)
                order.append(image)
                queue.append(image)
    return order


# -- the two characterizations ---------------------------------------------


def closure_rule_violations(system: RootSystem, roots: Iterable[Root]) -> RootSet:
    """Roots demanded by the closure rule that are missing from ``roots``."""
    members = frozenset(roots)
    if len(members) < 3:
        return frozenset()
    all_roots = list(system.positive_roots) + [system.negate(b) for b in system.positive_roots]
    missing: Set[Root] = set()
    for gamma in all_roots:
        touching = [beta for beta in members if system.inner(gamma, beta) == -1]
        if len(touching) < 3:
            continue
        for triple in combinations(touching, 3):
            vector = tuple(2 * g + sum(c) for g, *c in zip(gamma, *triple))
            target = system.fold(vector)
            if not system.is_root(target):
                raise AdmissibilityError(
                    f"closure rule produced a non-root from {format_set(system, triple)}",
                    roots=list(triple),
                )
            if target not in members:
                missing.add(target)
    return frozenset(missing)


def is_admissible_by_closure_rule(system: RootSystem, roots: Iterable[Root]) -> bool:
    members = require_orthogonal(system, roots)
    return not closure_rule_violations(system, members)


def _orbit_condition_holds(system: RootSystem, member: RootSet) -> bool:
    nodes = system.diagram.nodes
    for i, j in combinations(nodes, 2):
        if system.diagram.adjacent(i, j):
            continue
        ai, aj = system.simple(i), system.simple(j)
        for first, second in ((ai, aj), (aj, ai)):
            for gamma in member:
                shifted = tuple(g - a + b for g, a, b in zip(gamma, first, second))
                if shifted in member:
                    if reflect_set(system, ai, member) != reflect_set(system, aj, member):
                        return False
                    break
    return True


def is_admissible_by_orbit(system: RootSystem, roots: Iterable[Root]) -> bool:
    members = require_orthogonal(system, roots)
    verdicts = system.orbit_verdicts
    if members not in verdicts:
        orbit = weyl_orbit(system, members)
        verdict = all(_orbit_condition_holds(system, member) for member in orbit)
        for member in orbit:
            verdicts[member] = verdict
    return verdicts[members]


def is_admissible(system: RootSystem, roots: Iterable[Root]) -> bool:
    """Common verdict of both characterizations.

    Raises:
        AdmissibilityError: input not orthogonal, or the two verdicts differ
    """
    members = require_orthogonal(system, roots)
    by_orbit = is_admissible_by_orbit(system, members)
    by_rule = is_admissible_by_closure_rule(system, members)
    if by_orbit != by_rule:
        raise AdmissibilityError(
            f"admissibility verdicts disagree for {format_set(system, members)}: "
            f"orbit form {by_orbit}, closure rule {by_rule}",
            roots=list(canonical(members)),
        )
    return by_rule


def closure(system: RootSystem, roots: Iterable[Root]) -> RootSet:
    """Smallest admissible set containing ``roots``."""
    current = require_orthogonal(system, roots)
    while True:
        missing = closure_rule_violations(system, current)
        if not missing:
            return current
        current = current | missing
        if not is_orthogonal_set(system, current):
            raise AdmissibilityError(
                f"closure left orthogonality at {format_set(system, current)}",
                roots=list(canonical(current)),
            )


# -- Brauer monoid action ----------------------------------------------------


def _case_three_candidates(system: RootSystem, i: int, roots: RootSet) -> List[Root]:
    alpha = system.simple(i)
    candidates = [beta for beta in roots if system.inner(beta, alpha) != 0]
    return sorted(candidates, key=lambda beta: (sum(beta), beta))


def ei_action(
    system: RootSystem,
    i: int,
    roots: Iterable[Root],
    beta: Optional[Root] = None,
    check_choices: bool = False,
) -> RootSet:
    """E_i B.

    B itself when alpha_i is in B, the closure of B and alpha_i when alpha_i is
    orthogonal to B, and R_beta R_i B otherwise. ``beta`` defaults to the
    non-orthogonal member of least height.
    """
    members = frozenset(roots)
    alpha = system.simple(i)
    if alpha in members:
        return members
    candidates = _case_three_candidates(system, i, members)
    if not candidates:
        return closure(system, members | {alpha})
    if beta is None:
        beta = candidates[0]
    elif beta not in candidates:
        raise AdmissibilityError(
            f"{system.format_root(beta)} is not a member of B that is non-orthogonal to a{i}",
            roots=[beta],
        )
    result = reflect_set(system, beta, reflect_set(system, alpha, members))
    if check_choices:
        outcomes = {reflect_set(system, other, reflect_set(system, alpha, members)) for other in candidates}
        if len(outcomes) > 1:
            raise AdmissibilityError(
                f"E{i} on {format_set(system, members)} depends on the choice of beta",
                roots=list(canonical(members)),
            )
    return result


def apply_brauer_word(system: RootSystem, word: GenWord, roots: Iterable[Root]) -> RootSet:
    """Act with a word of ``r``/``e`` letters, rightmost letter first. delta acts trivially."""
    current = frozenset(roots)
    for letter in reversed(word.letters):
        if letter.kind == "r":
            current = weyl_action(system, [letter.index], current)
        elif letter.kind == "e":
            current = ei_action(system, letter.index, current)
        else:
            raise AdmissibilityError(f"letter {letter} does not act on admissible sets")
    return current


# -- classification ------------------------------------------------------------


def orthogonal_sets(system: RootSystem) -> List[RootSet]:
    """Every set of mutually orthogonal positive roots, the empty set first."""
    graph = nx.Graph()
    graph.add_nodes_from(system.positive_roots)
    graph.add_edges_from(
        (a, b) for a, b in combinations(system.positive_roots, 2) if system.inner(a, b) == 0
    )
    sets = [frozenset()] + [frozenset(clique) for clique in nx.enumerate_all_cliques(graph)]
    return sorted(sets, key=lambda s: (len(s), canonical(s)))


def admissible_sets(system: RootSystem) -> List[RootSet]:
    return [members for members in orthogonal_sets(system) if is_admissible(system, members)]


def orbit_partition(system: RootSystem) -> List[List[RootSet]]:
    """Admissible sets grouped into W-orbits, each orbit in canonical order."""
    remaining = set(admissible_sets(system))
    orbits = []
    while remaining:
        seed = min(remaining, key=lambda s: (len(s), canonical(s)))
        orbit = sorted(weyl_orbit(system, seed), key=lambda s: canonical(s))
        remaining.difference_update(orbit)
        orbits.append(orbit)
    return orbits


def orbit_representatives(system: RootSystem) -> List[RootSet]:
    return [min(orbit, key=lambda s: (len(s), canonical(s))) for orbit in orbit_partition(system)]


# -- sigma-invariant sets of A_{2n-1} --------------------------------------


def sigma(roots: Iterable[Root]) -> RootSet:
    """Mirror automorphism of A_{2n-1}: alpha_i <-> alpha_{2n-i}."""
    return frozenset(tuple(reversed(beta)) for beta in roots)


def sigma_fixed_sets(n: int) -> List[RootSet]:
    system = root_system(f"A{2 * n - 1}")
    return [members for members in admissible_sets(system) if sigma(members) == members]



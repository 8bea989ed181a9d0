"""Built-in relation and property suites.

Every relation instance is checked by exact equality of both sides under a
diagram representation, scalar included. Property suites report either one
verdict per instance or, for exhaustive sweeps, one verdict per property with
the number of instances that satisfied it.
"""

from math import factorial
from typing import Any, Callable, Dict, Iterable, Iterator, List

from ..algebra.diagrams_a import (
    completion,
    diagram_action,
    enumerate_brauer,
    gen_e,
    gen_r,
    identity,
    is_planar,
    mirror,
    transpose,
    word_height,
)
from ..algebra.diagrams_d import e_set_d, identity_d, psi_gen
from ..algebra.dtl import (
    DtlPresentation,
    Relation,
    check_brauer_double_laced,
    phi_b,
    phi_b_image,
    phi_c,
    phi_c_image,
    spanning_sets,
)
from ..algebra.words import GenWord, e, evaluate
from ..config.models import CheckVerdict
from ..exceptions import AdmissibilityError
from ..roots.admissible import (
    admissible_sets,
    closure,
    ei_action,
    format_set,
    is_admissible_by_closure_rule,
    is_admissible_by_orbit,
    orbit_partition,
    orthogonal_sets,
    weyl_action,
)
from ..roots.poset import OrbitPoset
from ..roots.rootsys import RootSystem, root_system, weyl_group_order
from .base import RelationSuite, SuiteContext, parse_type, require_int
from .registry import register

Representation = Callable[[GenWord], Any]


def type_a_representation(m: int) -> Representation:
    """Br(A_m) generators as diagrams on m+1 strands."""
    strands = m + 1

    def image(letter: Any) -> Any:
        make = gen_r if letter.kind == "r" else gen_e
        return make(letter.index, strands)

    return lambda word: evaluate(word, image, identity(strands))


def type_d_representation(rank: int) -> Representation:
    """Br(D_rank) generators as decorated diagrams on rank strands."""
    n = rank - 1
    return lambda word: evaluate(word, lambda g: psi_gen(g.kind.upper(), g.index, n), identity_d(n))


def relation_verdicts(relations: Iterable[Relation], rep: Representation) -> Iterator[CheckVerdict]:
    """One verdict per relation: the image of the left side against the right side."""
    for relation in relations:
        lhs, rhs = rep(relation.lhs), rep(relation.rhs)
        yield CheckVerdict.compare(relation.label, expected=str(rhs), actual=str(lhs))


@register
class BrauerSuite(RelationSuite):
    """Brauer monoid presentation of a simply laced type on its diagram realization."""

    name = "brauer"
    aliases = ("def11",)
    description = "Brauer monoid relations for A_m (m <= 6) or D_{n+1} (3 <= n+1 <= 5)"

    def validate_parameters(self, parameters: Dict[str, Any]) -> Dict[str, Any]:
        family, rank = parse_type(parameters.get("type"), "AD")
        if family == "A" and not 1 <= rank <= 6:
            raise ValueError(f"brauer supports A1..A6, got A{rank}")
        if family == "D" and not 3 <= rank <= 5:
            raise ValueError(f"brauer supports D3..D5, got D{rank}")
        return {"type": f"{family}{rank}"}

    def run_checks(self, parameters: Dict[str, Any], context: SuiteContext) -> Iterable[CheckVerdict]:
        presentation = DtlPresentation.parse(parameters["type"])
        if presentation.family == "A":
            rep = type_a_representation(presentation.n)
        else:
            rep = type_d_representation(presentation.n)
        yield from relation_verdicts(presentation.brauer_relations(), rep)


@register
class BrauerDerivedSuite(RelationSuite):
    """Identities that follow from the Brauer relations, checked on type A diagrams."""

    name = "brauer-derived"
    aliases = ("rem31",)
    description = "derived Brauer identities for i~j and i~j~k in A_m (2 <= m <= 6)"

    def validate_parameters(self, parameters: Dict[str, Any]) -> Dict[str, Any]:
        _, rank = parse_type(parameters.get("type"), "A")
        if not 2 <= rank <= 6:
            raise ValueError(f"brauer-derived supports A2..A6, got A{rank}")
        return {"type": f"A{rank}"}

    def run_checks(self, parameters: Dict[str, Any], context: SuiteContext) -> Iterable[CheckVerdict]:
        presentation = DtlPresentation.parse(parameters["type"])
        yield from relation_verdicts(presentation.derived_relations(), type_a_representation(presentation.n))


def _double_laced_type(parameters: Dict[str, Any], suite: str, low: int, high: int) -> Dict[str, Any]:
    family, n = parse_type(parameters.get("type"), "BC")
    if not low <= n <= high:
        raise ValueError(f"{suite} supports {family}{low}..{family}{high}, got {family}{n}")
    return {"type": f"{family}{n}"}


@register
class DtlSuite(RelationSuite):
    """DTL presentation of B_n or C_n under its diagram realization."""

    name = "dtl"
    aliases = ("def01",)
    description = "DTL relations under phi_B (B2..B6) or phi_C (C2..C5), plus transpose/reverse"

    def validate_parameters(self, parameters: Dict[str, Any]) -> Dict[str, Any]:
        family, _ = parse_type(parameters.get("type"), "BC")
        return _double_laced_type(parameters, self.name, 2, 6 if family == "B" else 5)

    def run_checks(self, parameters: Dict[str, Any], context: SuiteContext) -> Iterable[CheckVerdict]:
        presentation = DtlPresentation.parse(parameters["type"])
        n = presentation.n
        rep: Representation
        if presentation.family == "B":
            rep = lambda w: phi_b(w, n)  # noqa: E731
            flip = lambda d: d.transpose()  # noqa: E731
        else:
            rep = lambda w: phi_c(w, n)  # noqa: E731
            flip = transpose
        yield from relation_verdicts(presentation.relations(), rep)

        k1, k2 = spanning_sets(n)
        words = k1 + k2
        agreeing = sum(flip(rep(word)) == rep(word.reverse()) for word in words)
        yield CheckVerdict.compare(
            f"transpose(φ(w)) = φ(reverse(w)) on K1 ∪ K2 of {presentation.label}",
            expected=len(words),
            actual=agreeing,
        )

        if presentation.family == "C":
            for i in range(n):
                image = phi_c_image(e(i), n)
                yield CheckVerdict.holds(
                    f"φ_C(e{i}) is planar and mirror-symmetric",
                    is_planar(image) and mirror(image) == image,
                    detail=str(image),
                )
        else:
            for i in range(n):
                image = phi_b_image(e(i), n)
                yield CheckVerdict.holds(
                    f"φ_B(e{i}) is undecorated", not image.decorated, detail=str(image)
                )


@register
class DoubleLacedSuite(RelationSuite):
    """Brauer relations of B_n and C_n, double edge included, on their diagram images."""

    name = "double-laced"
    aliases = ("def02",)
    description = "Br(B_n) / Br(C_n) relations including the double edge, n = 2, 3"

    def validate_parameters(self, parameters: Dict[str, Any]) -> Dict[str, Any]:
        return _double_laced_type(parameters, self.name, 2, 3)

    def run_checks(self, parameters: Dict[str, Any], context: SuiteContext) -> Iterable[CheckVerdict]:
        family, n = parse_type(parameters["type"], "BC")
        for relation, holds in check_brauer_double_laced(family, n):
            yield CheckVerdict.holds(relation.label, holds)


def hat_relations(n: int) -> List[Relation]:
    """The ê identities, instantiated exactly on the index ranges where they hold."""

    def rel(lhs: str, rhs: str) -> Relation:
        left, right = GenWord.parse(lhs), GenWord.parse(rhs)
        return Relation(f"{left} = {right}", left, right)

    result = []
    result += [rel(f"ê{i} ê{i + 1}", f"δ ê{i} e{i + 1}") for i in range(0, n - 1)]
    result += [rel(f"ê{i} ê{i + 1}", f"δ e{i} ê{i + 1}") for i in range(1, n - 1)]
    result += [rel(f"ê{i} e{i + 1} ê{i}", f"δ ê{i}") for i in range(0, n - 1)]
    result += [rel(f"ê{i + 1} e{i} ê{i + 1}", f"δ ê{i + 1}") for i in range(1, n - 1)]
    result += [rel(f"ê{i} ê{i}", f"δ^2 ê{i}") for i in range(n)]
    for i in range(n):
        for j in range(n):
            if abs(i - j) > 1:
                if i < j:
                    result.append(rel(f"ê{i} ê{j}", f"ê{j} ê{i}"))
                result.append(rel(f"ê{i} e{j}", f"e{j} ê{i}"))
                if i >= 1:
                    result.append(rel(f"ê{i} ê{j}", f"δ e{i} ê{j}"))
            elif abs(i - j) == 1:
                result.append(rel(f"ê{i} ê{j} ê{i}", f"δ^2 ê{i}"))
    return result


@register
class HatSuite(RelationSuite):
    """Identities of the telescoped elements ê_i under phi_B."""

    name = "hat"
    aliases = ("newrel",)
    description = "ê identities of DTL(B_n) under phi_B, 2 <= n <= 8"

    def validate_parameters(self, parameters: Dict[str, Any]) -> Dict[str, Any]:
        return {"n": require_int(parameters, "n", 2, 8)}

    def run_checks(self, parameters: Dict[str, Any], context: SuiteContext) -> Iterable[CheckVerdict]:
        n = parameters["n"]
        yield from relation_verdicts(hat_relations(n), lambda w: phi_b(w, n))


@register
class HeightSuite(RelationSuite):
    """Height of a monomial is unchanged by the mirror automorphism."""

    name = "height"
    aliases = ("heightinv",)
    description = "ht(a) = ht(mirror(a)) over Br(A_m), m <= 3"

    def validate_parameters(self, parameters: Dict[str, Any]) -> Dict[str, Any]:
        _, rank = parse_type(parameters.get("type"), "A")
        if not 1 <= rank <= 3:
            raise ValueError(f"height supports A1..A3, got A{rank}")
        return {"type": f"A{rank}"}

    def run_checks(self, parameters: Dict[str, Any], context: SuiteContext) -> Iterable[CheckVerdict]:
        _, m = parse_type(parameters["type"], "A")
        elements = enumerate_brauer(m + 1, "full", max_elements=context.max_elements)
        for element in elements.values():
            yield CheckVerdict.compare(
                f"ht([{element.connector}]) = ht(mirror)",
                expected=word_height(element),
                actual=word_height(mirror(element)),
            )


def _expected_weyl_order(system: RootSystem) -> int:
    n = system.rank
    if system.family == "A":
        return factorial(n + 1)
    return 2 ** (n - 1) * factorial(n)


@register
class AdmissibleSuite(RelationSuite):
    """Admissible-set machinery swept exhaustively over one root system."""

    name = "admissible"
    description = "admissible sets, closure, orbit posets and the E_i action on A_n (n <= 7) or D_n (4 <= n <= 6)"

    def validate_parameters(self, parameters: Dict[str, Any]) -> Dict[str, Any]:
        family, rank = parse_type(parameters.get("type"), "AD")
        if family == "A" and not 1 <= rank <= 7:
            raise ValueError(f"admissible supports A1..A7, got A{rank}")
        if family == "D" and not 4 <= rank <= 6:
            raise ValueError(f"admissible supports D4..D6, got D{rank}")
        return {"type": f"{family}{rank}"}

    def run_checks(self, parameters: Dict[str, Any], context: SuiteContext) -> Iterable[CheckVerdict]:
        system = root_system(parameters["type"])
        label = system.label

        yield CheckVerdict.compare(
            f"|W({label})|", expected=_expected_weyl_order(system), actual=weyl_group_order(system)
        )

        orthogonal = orthogonal_sets(system)
        agreeing = sum(
            is_admissible_by_orbit(system, s) == is_admissible_by_closure_rule(system, s) for s in orthogonal
        )
        yield CheckVerdict.compare(
            f"orbit form and closure rule agree on orthogonal sets of {label}",
            expected=len(orthogonal),
            actual=agreeing,
        )

        yield from self._closure_laws(system, orthogonal)

        admissible = admissible_sets(system)
        orbits = orbit_partition(system)
        posets = []
        for members in orbits:
            try:
                posets.append(OrbitPoset(system, members[0]))
            except AdmissibilityError as exc:
                self.logger.warning(f"orbit of {format_set(system, members[0])}: {exc.message}")
        yield CheckVerdict.compare(
            f"orbit posets of {label} with a unique maximal element",
            expected=len(orbits),
            actual=len(posets),
        )

        independent = 0
        for members in admissible:
            for i in system.diagram.nodes:
                ei_action(system, i, members, check_choices=True)
                independent += 1
        yield CheckVerdict.compare(
            f"E_i action on {label} independent of the choice of beta",
            expected=len(admissible) * system.rank,
            actual=independent,
        )

        if system.family == "A":
            yield from self._type_a_checks(system, admissible, posets)
        else:
            yield from self._type_d_checks(system)

    def _closure_laws(self, system: RootSystem, orthogonal: List[frozenset]) -> Iterator[CheckVerdict]:
        extensive = idempotent = monotone = pairs = 0
        closures = {s: closure(system, s) for s in orthogonal}
        for s, closed in closures.items():
            extensive += s <= closed
            idempotent += closure(system, closed) == closed
        for s in orthogonal:
            for beta in system.positive_roots:
                bigger = s | {beta}
                if beta in s or bigger not in closures:
                    continue
                pairs += 1
                monotone += closures[s] <= closures[bigger]
        yield CheckVerdict.compare(f"X ⊆ cl(X) on {system.label}", expected=len(orthogonal), actual=extensive)
        yield CheckVerdict.compare(f"cl(cl(X)) = cl(X) on {system.label}", expected=len(orthogonal), actual=idempotent)
        yield CheckVerdict.compare(
            f"X ⊆ Y implies cl(X) ⊆ cl(Y) on {system.label}", expected=pairs, actual=monotone
        )

    def _type_a_checks(
        self, system: RootSystem, admissible: List[frozenset], posets: List[OrbitPoset]
    ) -> Iterator[CheckVerdict]:
        label, strands = system.label, system.rank + 1

        yield CheckVerdict.compare(
            f"W-orbits of admissible sets of {label}", expected=strands // 2 + 1, actual=len(posets)
        )

        agree_e = agree_r = 0
        for members in admissible:
            for i in system.diagram.nodes:
                agree_e += ei_action(system, i, members) == diagram_action(gen_e(i, strands), members)
                agree_r += weyl_action(system, [i], members) == diagram_action(gen_r(i, strands), members)
        instances = len(admissible) * system.rank
        yield CheckVerdict.compare(f"E_i action matches diagram tops on {label}", expected=instances, actual=agree_e)
        yield CheckVerdict.compare(f"R_i action matches diagram tops on {label}", expected=instances, actual=agree_r)

        total = matching = 0
        for poset in posets:
            for members in poset.members:
                total += 1
                matching += (poset.height(members) == 0) == is_planar(completion(members, strands))
        yield CheckVerdict.compare(
            f"height 0 exactly when the diagram top is crossing-free on {label}", expected=total, actual=matching
        )

        if label == "A4":
            seed = system.parse_root_set("a1,a3")
            poset = next(p for p in posets if seed in p)
            yield CheckVerdict.compare(f"size of the orbit of {format_set(system, seed)}", expected=15, actual=len(poset))
            yield CheckVerdict.compare(
                f"maximal element of the orbit of {format_set(system, seed)}",
                expected=format_set(system, system.parse_root_set("a1+a2+a3,a2+a3+a4")),
                actual=format_set(system, poset.maximal),
            )

    def _type_d_checks(self, system: RootSystem) -> Iterator[CheckVerdict]:
        label = system.label
        positive = system.positive_roots

        holding = 0
        for beta in positive:
            partner = system.star(beta)
            others = [g for g in positive if g != partner and system.inner(g, beta) == 0]
            holding += system.inner(partner, beta) == 0 and all(system.inner(partner, g) == 0 for g in others)
        yield CheckVerdict.compare(
            f"star(β) is orthogonal to β and to every other root orthogonal to β on {label}",
            expected=len(positive),
            actual=holding,
        )

        if system.rank > 4:
            unique = 0
            for beta in positive:
                perp = [g for g in positive if system.inner(g, beta) == 0]
                candidates = [g for g in perp if all(system.inner(g, h) == 0 for h in perp if h != g)]
                unique += candidates == [system.star(beta)]
            yield CheckVerdict.compare(f"star(β) is unique on {label}", expected=len(positive), actual=unique)

        if label == "D4":
            seed = system.parse_root_set("a1,a2,a4")
            closed = closure(system, seed)
            yield CheckVerdict.compare(
                f"closure of {format_set(system, seed)}",
                expected=format_set(system, system.parse_root_set("a1,a2,a4,a1+a2+2a3+a4")),
                actual=format_set(system, closed),
            )
            lhs = e_set_d(system, closed)
            rhs = e_set_d(system, seed).scaled(len(closed - seed))
            yield CheckVerdict.compare(
                f"E of the closure = δ^{len(closed - seed)} E of {format_set(system, seed)}",
                expected=str(rhs),
                actual=str(lhs),
            )

"""Unit tests for type-A Brauer and Temperley-Lieb diagrams."""

import pytest

from dtlbench.algebra.diagrams_a import (
    ScaledDiagramA,
    brauer_generators,
    brauer_rank_by_matchings,
    cap_of_root,
    completion,
    diagram_action,
    e_beta,
    e_set,
    enumerate_brauer,
    gen_e,
    gen_r,
    identity,
    is_planar,
    mirror,
    root_of_cap,
    tl_rank_by_planarity,
    top_of,
    transpose,
    word_height,
)
from dtlbench.exceptions import DiagramError, EnumerationLimitError


class TestGenerators:
    """The Brauer relations hold on the generator diagrams."""

    def test_e_squared(self):
        assert gen_e(1, 3) * gen_e(1, 3) == gen_e(1, 3).scaled(1)

    def test_r_squared(self):
        assert gen_r(2, 3) * gen_r(2, 3) == identity(3)

    def test_r_absorbs_e(self):
        assert gen_r(1, 3) * gen_e(1, 3) == gen_e(1, 3)
        assert gen_e(1, 3) * gen_r(1, 3) == gen_e(1, 3)

    def test_braid_relation(self):
        r1, r2 = gen_r(1, 3), gen_r(2, 3)
        assert r1 * r2 * r1 == r2 * r1 * r2

    def test_far_generators_commute(self):
        assert gen_e(1, 4) * gen_r(3, 4) == gen_r(3, 4) * gen_e(1, 4)

    def test_index_range(self):
        with pytest.raises(DiagramError):
            gen_e(0, 3)
        with pytest.raises(DiagramError):
            gen_r(3, 3)

    def test_planarity_and_symmetries(self):
        assert is_planar(gen_e(2, 4))
        assert not is_planar(gen_r(1, 2))
        assert mirror(gen_e(1, 3)) == gen_e(2, 3)
        assert transpose(gen_r(1, 3)) == gen_r(1, 3)

    def test_json_round_trip(self):
        d = gen_e(1, 3).scaled(-2)
        assert ScaledDiagramA.from_json(d.to_json()) == d

    def test_str(self):
        assert str(identity(2)) == "[1-3 2-4]"
        assert str(gen_e(1, 2).scaled(1)) == "δ·[1-2 3-4]"


class TestEnumeration:

    @pytest.mark.parametrize("strands,expected", [(2, 3), (3, 15), (4, 105)])
    def test_brauer_monoid_sizes(self, strands, expected):
        assert len(enumerate_brauer(strands, "full")) == expected
        assert brauer_rank_by_matchings(strands) == expected

    @pytest.mark.parametrize("strands,expected", [(2, 2), (3, 5), (4, 14), (5, 42)])
    def test_temperley_lieb_sizes(self, strands, expected):
        assert len(enumerate_brauer(strands, "tl")) == expected
        assert tl_rank_by_planarity(strands) == expected

    def test_unknown_generator_set(self):
        with pytest.raises(DiagramError):
            enumerate_brauer(3, "hat")

    def test_cap_is_enforced(self):
        with pytest.raises(EnumerationLimitError) as exc_info:
            enumerate_brauer(4, "full", max_elements=10)
        assert exc_info.value.limit == 10


class TestWordHeight:

    def test_heights_of_generators(self):
        assert word_height(identity(3)) == 0
        assert word_height(gen_e(1, 3)) == 0
        assert word_height(gen_r(1, 3)) == 1

    def test_delta_power_is_ignored(self):
        assert word_height(gen_r(2, 3).scaled(3)) == 1


class TestDiagramTops:
    """Roots e_i - e_j correspond to caps (i, j) on the top row."""

    def test_root_of_cap(self):
        assert root_of_cap(1, 3, 4) == (0, 1, 1)
        assert root_of_cap(0, 1, 3) == (1, 0)

    def test_cap_of_root(self):
        assert cap_of_root((0, 1, 1)) == (1, 3)
        with pytest.raises(DiagramError):
            cap_of_root((1, 0, 1))

    def test_top_of(self):
        assert top_of(gen_e(1, 3)) == {(1, 0)}
        assert top_of(identity(3)) == frozenset()

    def test_completion_has_the_given_top(self):
        roots = {(1, 1, 1, 0), (0, 1, 1, 1)}
        assert top_of(completion(roots, 5)) == roots
        assert not is_planar(completion(roots, 5))

    def test_diagram_action(self):
        # E2 on {a1} of A2
        assert diagram_action(gen_e(2, 3), {(1, 0)}) == {(0, 1)}
        # E2 on {a1, a3} of A3
        assert diagram_action(gen_e(2, 4), {(1, 0, 0), (0, 0, 1)}) == {(0, 1, 0), (1, 1, 1)}

    def test_e_set_of_orthogonal_roots(self):
        roots = {(1, 0, 0), (0, 0, 1)}
        assert e_set(roots, 4) == gen_e(1, 4) * gen_e(3, 4)
        assert e_beta((1, 1), 3) == gen_r(2, 3) * gen_e(1, 3) * gen_r(2, 3)


class TestMirror:

    def test_mirror_is_an_automorphism_of_br_a3(self):
        generators = [identity(4)] + brauer_generators(4)
        for a in generators:
            for b in generators:
                assert mirror(a * b) == mirror(a) * mirror(b)

    def test_mirror_is_an_involution(self):
        for d in brauer_generators(5):
            assert mirror(mirror(d)) == d

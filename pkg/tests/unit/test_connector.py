"""Unit tests for connectors."""

import pytest

from dtlbench.algebra.connector import Connector, UnionFind, all_connectors, planar_connectors
from dtlbench.algebra.diagrams_a import brauer_generators
from dtlbench.exceptions import DiagramError


def cup_cap(strands: int, column: int) -> Connector:
    cap = (column, column + 1)
    return Connector.with_caps(strands, [cap], [cap])


class TestConnector:

    def test_identity_pairs(self):
        assert Connector.identity(2).pairs() == [(1, 3), (2, 4)]

    def test_from_pairs_uses_one_based_labels(self):
        c = Connector.from_pairs(2, [(1, 2), (3, 4)])
        assert c.top_caps == ((0, 1),)
        assert c.bottom_caps == ((0, 1),)
        assert c.has_horizontal

    def test_invalid_pairs_are_rejected(self):
        with pytest.raises(DiagramError):
            Connector.from_pairs(2, [(1, 2), (1, 3)])
        with pytest.raises(DiagramError):
            Connector.from_pairs(2, [(1, 2)])
        with pytest.raises(DiagramError):
            Connector.from_pairs(2, [(1, 5), (2, 3)])
        with pytest.raises(DiagramError):
            Connector(2, (1, 0, 3))

    def test_compose_with_identity(self):
        c = cup_cap(3, 1)
        assert c.compose(Connector.identity(3)) == (c, 0)
        assert Connector.identity(3).compose(c) == (c, 0)

    def test_cup_cap_squared_closes_one_loop(self):
        c = cup_cap(3, 0)
        assert c.compose(c) == (c, 1)

    def test_temperley_lieb_relation(self):
        e1, e2 = cup_cap(3, 0), cup_cap(3, 1)
        product, loops = e1.compose(e2)
        product, more = product.compose(e1)
        assert product == e1
        assert loops + more == 0

    def test_compose_requires_equal_sizes(self):
        with pytest.raises(DiagramError):
            Connector.identity(2).compose(Connector.identity(3))

    def test_transpose_and_mirror(self):
        c = Connector.with_caps(3, [(0, 1)], [(1, 2)])
        assert c.transpose().top_caps == ((1, 2),)
        assert c.mirror().top_caps == ((1, 2),)
        assert c.mirror().bottom_caps == ((0, 1),)
        assert c.transpose().transpose() == c

    def test_planarity(self):
        crossing = Connector.from_zero_based(2, [(0, 3), (1, 2)])
        assert not crossing.is_planar()
        assert cup_cap(4, 1).is_planar()
        nested = Connector.with_caps(4, [(0, 3), (1, 2)], [(0, 1), (2, 3)])
        assert nested.is_planar()

    def test_counts(self):
        assert sum(1 for _ in planar_connectors(3)) == 5
        assert sum(1 for _ in planar_connectors(4)) == 14
        assert sum(1 for _ in all_connectors(3)) == 15
        assert all(c.is_planar() for c in planar_connectors(4))

    def test_json(self):
        assert cup_cap(2, 0).to_json() == {"strands": 2, "pairs": [[1, 2], [3, 4]]}


class TestUnionFind:

    def test_components(self):
        uf = UnionFind(range(5))
        uf.union(0, 1)
        uf.union(3, 4)
        uf.union(1, 0)
        assert uf.component_count() == 3
        assert uf.find(0) == uf.find(1)


def compose_three(a: Connector, b: Connector, c: Connector, left_first: bool):
    if left_first:
        ab, first = a.compose(b)
        result, second = ab.compose(c)
    else:
        bc, first = b.compose(c)
        result, second = a.compose(bc)
    return result, first + second


def generator_connectors(strands: int):
    return [Connector.identity(strands)] + [d.connector for d in brauer_generators(strands)]


class TestCompositionLaws:

    @pytest.mark.parametrize("strands", [2, 3, 4])
    def test_associative_on_generator_triples(self, strands):
        generators = generator_connectors(strands)
        for a in generators:
            for b in generators:
                for c in generators:
                    assert compose_three(a, b, c, True) == compose_three(a, b, c, False)

    def test_associative_on_all_triples_of_three_strands(self):
        connectors = list(all_connectors(3))
        for a in connectors:
            for b in connectors:
                for c in connectors:
                    assert compose_three(a, b, c, True) == compose_three(a, b, c, False)

    @pytest.mark.parametrize("strands", [1, 2, 3, 4, 5])
    def test_planar_products_are_planar(self, strands):
        planar = list(planar_connectors(strands))
        for a in planar:
            for b in planar:
                product, _ = a.compose(b)
                assert product.is_planar()

"""Unit tests for generator words."""

import pytest

from dtlbench.algebra.words import GenWord, e, evaluate, he, r
from dtlbench.algebra.scalars import DeltaPower
from dtlbench.exceptions import DiagramError


class TestGenWord:

    def test_parse_letters_and_delta(self):
        word = GenWord.parse("e1 e0 ê1 he2 r3 δ^-1")
        assert word.letters == (e(1), e(0), he(1), he(2), r(3))
        assert word.delta == -1

    def test_parse_accepts_upper_case_and_identity(self):
        assert GenWord.parse("E1 R2") == GenWord.of(e(1), r(2))
        assert GenWord.parse("1") == GenWord()
        assert GenWord.parse("δ δ") == GenWord((), 2)

    def test_parse_rejects_unknown_symbols(self):
        with pytest.raises(DiagramError):
            GenWord.parse("x1")

    def test_str(self):
        assert str(GenWord()) == "1"
        assert str(GenWord.parse("δ^2 e1 ê0")) == "δ^2 e1 ê0"
        assert str(GenWord.of(e(0), delta=1)) == "δ e0"

    def test_product_concatenates(self):
        word = GenWord.of(e(1), delta=1) * GenWord.of(e(2), delta=-2)
        assert word == GenWord((e(1), e(2)), -1)
        assert len(word) == 2

    def test_reverse_keeps_delta(self):
        word = GenWord.parse("δ e0 e1 e2")
        assert word.reverse() == GenWord.parse("δ e2 e1 e0")
        assert word.reverse().reverse() == word

    def test_evaluate_multiplies_images(self):
        image = {e(0): DeltaPower(1), e(1): DeltaPower(2)}
        assert evaluate(GenWord.parse("e0 e1 e1 δ^-1"), image.__getitem__, DeltaPower(0)) == DeltaPower(4)

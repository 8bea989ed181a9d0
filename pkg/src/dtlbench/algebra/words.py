"""Words in abstract generators, the free side of every presentation check."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, NamedTuple, Tuple, TypeVar

from ..exceptions import DiagramError

_KINDS = {"r": "r", "e": "e", "ê": "he", "he": "he", "R": "r", "E": "e"}
_LETTER_RE = re.compile(r"^(he|ê|r|e|R|E)_?(\d+)$")
_DELTA_RE = re.compile(r"^(?:δ|d|delta)(?:\^?\(?(-?\d+)\)?)?$")


class Generator(NamedTuple):
    """A generator symbol: ``kind`` is ``r``, ``e`` or ``he`` (for ê)."""

    kind: str
    index: int

    def __str__(self) -> str:
        symbol = "ê" if self.kind == "he" else self.kind
        return f"{symbol}{self.index}"


def r(i: int) -> Generator:
    return Generator("r", i)


def e(i: int) -> Generator:
    return Generator("e", i)


def he(i: int) -> Generator:
    return Generator("he", i)


@dataclass(frozen=True)
class GenWord:
    """delta^delta times the product of ``letters`` read left to right."""

    letters: Tuple[Generator, ...] = ()
    delta: int = 0

    @classmethod
    def of(cls, *letters: Generator, delta: int = 0) -> GenWord:
        return cls(tuple(letters), delta)

    @classmethod
    def parse(cls, text: str) -> GenWord:
        """Parse whitespace separated symbols such as ``e1 e0 ê1 he2 δ^-1``."""
        letters = []
        delta = 0
        for token in text.split():
            if token == "1":
                continue
            delta_match = _DELTA_RE.match(token)
            if delta_match:
                delta += int(delta_match.group(1) or 1)
                continue
            match = _LETTER_RE.match(token)
            if not match:
                raise DiagramError(f"cannot parse generator {token!r}")
            letters.append(Generator(_KINDS[match.group(1)], int(match.group(2))))
        return cls(tuple(letters), delta)

    def __mul__(self, other: GenWord) -> GenWord:
        if not isinstance(other, GenWord):
            return NotImplemented
        return GenWord(self.letters + other.letters, self.delta + other.delta)

    def __len__(self) -> int:
        return len(self.letters)

    def reverse(self) -> GenWord:
        """The anti-involution x1 x2 ... xk -> xk ... x2 x1."""
        return GenWord(tuple(reversed(self.letters)), self.delta)

    def scaled(self, k: int) -> GenWord:
        return GenWord(self.letters, self.delta + k)

    def __str__(self) -> str:
        parts = [] if self.delta == 0 else ["δ" if self.delta == 1 else f"δ^{self.delta}"]
        parts.extend(str(letter) for letter in self.letters)
        return " ".join(parts) or "1"


def reverse(word: GenWord) -> GenWord:
    return word.reverse()


T = TypeVar("T")


def evaluate(word: GenWord, image: Callable[[Generator], T], identity: T) -> T:
    """Multiply the images of the letters left to right and scale by delta."""
    result = identity
    for letter in word.letters:
        result = result * image(letter)  # type: ignore[operator]
    return result.scaled(word.delta)  # type: ignore[attr-defined]

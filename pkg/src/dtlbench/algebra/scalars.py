"""Scalar monoids for diagram arithmetic.

Two monoids occur as scalar parts of diagrams:

* ``DeltaPower``: the infinite cyclic group generated by the loop value delta.
  Type-A Brauer and Temperley-Lieb diagrams only ever carry these.
* ``HScalar``: the commutative monoid H generated by delta, delta^-1, xi and
  theta subject to xi^2 = delta^2, xi*theta = delta*theta and
  theta^2 = delta^2*theta. Every element has exactly one canonical form
  delta^k, delta^k*xi or delta^k*theta, which is the only form stored.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Tuple

from ..constants import DELTA_EXPONENT_BOUND
from ..exceptions import ScalarOverflowError


def checked_exponent(k: int) -> int:
    """Return ``k`` unchanged, or raise if it leaves the supported range."""
    if abs(k) > DELTA_EXPONENT_BOUND:
        raise ScalarOverflowError(
            f"delta exponent {k} exceeds the supported bound {DELTA_EXPONENT_BOUND}"
        )
    return k


def _superscript(k: int) -> str:
    return "" if k == 1 else f"^{k}"


class Tag(str, Enum):
    """Non-delta part of an H element."""
    ONE = "one"
    XI = "xi"
    THETA = "theta"


# (extra delta exponent, resulting tag) for a product of two tags
_TAG_PRODUCTS: Dict[Tuple[Tag, Tag], Tuple[int, Tag]] = {
    (Tag.ONE, Tag.ONE): (0, Tag.ONE),
    (Tag.ONE, Tag.XI): (0, Tag.XI),
    (Tag.ONE, Tag.THETA): (0, Tag.THETA),
    (Tag.XI, Tag.XI): (2, Tag.ONE),
    (Tag.XI, Tag.THETA): (1, Tag.THETA),
    (Tag.THETA, Tag.THETA): (2, Tag.THETA),
}


def _tag_product(a: Tag, b: Tag) -> Tuple[int, Tag]:
    try:
        return _TAG_PRODUCTS[(a, b)]
    except KeyError:
        return _TAG_PRODUCTS[(b, a)]


@dataclass(frozen=True, order=True)
class DeltaPower:
    """The monomial delta^k."""

    k: int = 0

    def __post_init__(self) -> None:
        checked_exponent(self.k)

    def __mul__(self, other: DeltaPower) -> DeltaPower:
        if not isinstance(other, DeltaPower):
            return NotImplemented
        return DeltaPower(checked_exponent(self.k + other.k))

    def inverse(self) -> DeltaPower:
        return DeltaPower(-self.k)

    def scaled(self, k: int) -> DeltaPower:
        """Multiply by delta^k."""
        return DeltaPower(checked_exponent(self.k + k))

    def to_h(self) -> HScalar:
        return HScalar(self.k, Tag.ONE)

    def __str__(self) -> str:
        return "1" if self.k == 0 else f"δ{_superscript(self.k)}"


@dataclass(frozen=True)
class HScalar:
    """Canonical element delta^k * tag of the monoid H."""

    k: int = 0
    tag: Tag = Tag.ONE

    def __post_init__(self) -> None:
        checked_exponent(self.k)
        if not isinstance(self.tag, Tag):
            object.__setattr__(self, "tag", Tag(self.tag))

    @classmethod
    def one(cls) -> HScalar:
        return cls(0, Tag.ONE)

    @classmethod
    def delta(cls, k: int = 1) -> HScalar:
        return cls(k, Tag.ONE)

    @classmethod
    def xi(cls, k: int = 0) -> HScalar:
        return cls(k, Tag.XI)

    @classmethod
    def theta(cls, k: int = 0) -> HScalar:
        return cls(k, Tag.THETA)

    def __mul__(self, other: HScalar) -> HScalar:
        if not isinstance(other, HScalar):
            return NotImplemented
        return h_mul(self, other)

    def scaled(self, k: int) -> HScalar:
        """Multiply by delta^k."""
        return HScalar(checked_exponent(self.k + k), self.tag)

    def to_json(self) -> Dict[str, Any]:
        return {"delta": self.k, "tag": self.tag.value}

    @classmethod
    def from_json(cls, payload: Dict[str, Any]) -> HScalar:
        return cls(int(payload["delta"]), Tag(payload.get("tag", "one")))

    def __str__(self) -> str:
        symbol = {Tag.ONE: "", Tag.XI: "ξ", Tag.THETA: "θ"}[self.tag]
        if self.k == 0:
            return symbol or "1"
        power = f"δ{_superscript(self.k)}"
        return f"{power}·{symbol}" if symbol else power


def h_mul(a: HScalar, b: HScalar) -> HScalar:
    """Canonical product in H."""
    extra, tag = _tag_product(a.tag, b.tag)
    return HScalar(checked_exponent(a.k + b.k + extra), tag)


def h_eq_mod_delta(a: HScalar, b: HScalar) -> bool:
    """True iff ``a`` and ``b`` differ by a power of delta."""
    return a.tag == b.tag

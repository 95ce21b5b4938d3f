"""Triple value type and the Pythagorean / almost-Pythagorean predicates.

All arithmetic uses Python integers, so squares never wrap regardless of
component size.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Iterator

from .errors import InvalidTripleError

__all__ = ["Triple", "TripleKind", "is_apt", "is_pythagorean", "is_ppt", "classify"]


class TripleKind(enum.Enum):
    PYTHAGOREAN = "Pythagorean"
    ALMOST_PYTHAGOREAN = "AlmostPythagorean"
    NEITHER = "Neither"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, order=True)
class Triple:
    """An ordered triple of positive integers.

    Construction rejects zero, negative and non-integer components; the
    predicates below can therefore assume a well-formed value.

    >>> Triple(3, 4, 5)
    Triple(x=3, y=4, z=5)
    >>> Triple.parse("36,127,132").z
    132
    """

    x: int
    y: int
    z: int

    def __post_init__(self) -> None:
        for name in ("x", "y", "z"):
            value = getattr(self, name)
            # bool is an int subclass; True would silently become 1
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidTripleError(f"{name} must be an integer, got {value!r}")
            if value < 1:
                raise InvalidTripleError(f"{name} must be positive, got {value}")

    def __iter__(self) -> Iterator[int]:
        return iter((self.x, self.y, self.z))

    def __str__(self) -> str:
        return f"({self.x}, {self.y}, {self.z})"

    @classmethod
    def parse(cls, text: str) -> "Triple":
        """Parse ``"x,y,z"`` (decimal, no spaces)."""
        parts = text.split(",")
        if len(parts) != 3 or not all(p.isdigit() and p.isascii() for p in parts):
            raise InvalidTripleError(f"expected x,y,z of positive decimal integers, got {text!r}")
        return cls(*(int(p) for p in parts))

    def swapped(self) -> "Triple":
        """Return the triple with the first two components exchanged."""
        return Triple(self.y, self.x, self.z)

    def sorted_legs(self) -> "Triple":
        """Return the triple with ``x <= y``."""
        return self if self.x <= self.y else self.swapped()

    def as_list(self) -> list[int]:
        return [self.x, self.y, self.z]


def _excess(t: Triple) -> int:
    """x^2 + y^2 - z^2."""
    return t.x * t.x + t.y * t.y - t.z * t.z


def is_apt(t: Triple) -> bool:
    """True iff ``x^2 + y^2 == z^2 + 1``."""
    return _excess(t) == 1


def is_pythagorean(t: Triple) -> bool:
    """True iff ``x^2 + y^2 == z^2`` (primitive or not)."""
    return _excess(t) == 0


def is_ppt(t: Triple) -> bool:
    """True iff `t` is Pythagorean with pairwise coprime components."""
    return (
        is_pythagorean(t)
        and gcd(t.x, t.y) == 1
        and gcd(t.y, t.z) == 1
        and gcd(t.x, t.z) == 1
    )


def classify(t: Triple) -> TripleKind:
    excess = _excess(t)
    if excess == 0:
        return TripleKind.PYTHAGOREAN
    if excess == 1:
        return TripleKind.ALMOST_PYTHAGOREAN
    return TripleKind.NEITHER

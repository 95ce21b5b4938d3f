"""Primitive Pythagorean triples from Euclid parameters.

Normal form throughout: ``(a, b, c)`` with ``b`` the even leg.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .core import Triple
from .errors import InvalidBoundError, InvalidIndexError, InvalidParamsError

__all__ = ["EuclidParams", "ppt_from_params", "ppt_family", "enumerate_ppts"]


@dataclass(frozen=True)
class EuclidParams:
    """Generator pair ``s > k > 0``, coprime, of opposite parity."""

    s: int
    k: int

    def __post_init__(self) -> None:
        s, k = self.s, self.k
        if not (isinstance(s, int) and isinstance(k, int)):
            raise InvalidParamsError(f"s and k must be integers, got {s!r}, {k!r}")
        if not s > k > 0:
            raise InvalidParamsError(f"need s > k > 0, got s={s}, k={k}")
        if gcd(s, k) != 1:
            raise InvalidParamsError(f"s={s} and k={k} are not coprime")
        if (s - k) % 2 == 0:
            raise InvalidParamsError(f"s={s} and k={k} have the same parity")


def ppt_from_params(params: EuclidParams | tuple[int, int]) -> Triple:
    """Return ``(s^2 - k^2, 2sk, s^2 + k^2)``.

    >>> ppt_from_params(EuclidParams(2, 1))
    Triple(x=3, y=4, z=5)
    >>> ppt_from_params((4, 1))
    Triple(x=15, y=8, z=17)
    """
    if not isinstance(params, EuclidParams):
        params = EuclidParams(*params)
    s, k = params.s, params.k
    return Triple(s * s - k * k, 2 * s * k, s * s + k * k)


def check_index(i: int) -> None:
    if isinstance(i, bool) or not isinstance(i, int) or i < 2:
        raise InvalidIndexError(f"family index i must be an integer >= 2, got {i!r}")


def ppt_family(i: int) -> Triple:
    """The one-parameter family ``(2i-1, 2i^2-2i, 2i^2-2i+1)`` for ``i >= 2``.

    Same as ``ppt_from_params((i, i - 1))``.
    """
    check_index(i)
    b = 2 * i * i - 2 * i
    return Triple(2 * i - 1, b, b + 1)


def enumerate_ppts(max_c: int) -> list[Triple]:
    """All normal-form PPTs with hypotenuse ``<= max_c``, sorted by ``(c, a)``."""
    if isinstance(max_c, bool) or not isinstance(max_c, int) or max_c < 5:
        raise InvalidBoundError(f"max_c must be >= 5, got {max_c!r}")
    found = []
    # c = s^2 + k^2 > s^2
    for s in range(2, isqrt(max_c) + 1):
        for k in range(1 + s % 2, s, 2):
            if s * s + k * k > max_c:
                break
            if gcd(s, k) == 1:
                found.append(ppt_from_params(EuclidParams(s, k)))
    found.sort(key=lambda t: (t.z, t.x))
    return found

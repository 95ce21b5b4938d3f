"""Closed-form APT pairs for the ``(2i-1, 2i^2-2i, 2i^2-2i+1)`` PPT family.

With ``(a, b, c)`` the family PPT at index ``i >= 2`` and any ``t >= 1``::

    lead   = (at + 1,    bt + 2i - 1,        ct + 2i - 1)
    colead = (at + 2i-2, bt + 2i^2 - 4i + 1, ct + 2i^2 - 4i + 2)

Setting ``t = 1`` and concatenating the lead triples over ``i = 2, 3, ...``
gives OEIS A261654.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Triple
from .errors import AptError
from .frink import AptPair, FrinkConstants, check_t, generate
from .ppt import check_index, ppt_family

__all__ = [
    "ExplicitParams",
    "family_constants",
    "apt_pair",
    "sequence_a261654",
    "emit_bfile",
    "parse_bfile",
]


@dataclass(frozen=True)
class ExplicitParams:
    i: int
    t: int

    def __post_init__(self) -> None:
        check_index(self.i)
        check_t(self.t)


def family_constants(i: int) -> FrinkConstants:
    """Offsets for ``ppt_family(i)`` in closed form (no search)."""
    ppt = ppt_family(i)
    return FrinkConstants(
        p=1,
        q=2 * i - 1,
        r=2 * i - 1,
        p_c=2 * i - 2,
        q_c=2 * i * i - 4 * i + 1,
        r_c=2 * i * i - 4 * i + 2,
        ppt=ppt,
    )


def apt_pair(i: int | ExplicitParams, t: int | None = None) -> AptPair:
    """Lead and colead APTs at family index ``i`` and scale ``t``.

    >>> pair = apt_pair(4, 5)
    >>> pair.lead, pair.colead
    (Triple(x=36, y=127, z=132), Triple(x=41, y=137, z=143))
    """
    params = i if isinstance(i, ExplicitParams) else ExplicitParams(i, t)
    return generate(family_constants(params.i), params.t)


def _lead_block(i: int) -> tuple[int, int, int]:
    # lead triple at t = 1 simplifies to (2i, 2i^2 - 1, 2i^2)
    sq = 2 * i * i
    return (2 * i, sq - 1, sq)


def sequence_a261654(n: int) -> list[int]:
    """First `n` terms of A261654 (term 1 is the x of the ``i = 2`` block)."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise AptError(f"number of terms must be a non-negative integer, got {n!r}")
    terms: list[int] = []
    i = 2
    while len(terms) < n:
        terms.extend(_lead_block(i))
        i += 1
    return terms[:n]


def emit_bfile(n: int) -> str:
    """OEIS b-file text for the first `n` terms: ``"index term\\n"`` lines."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise AptError(f"b-file needs at least one term, got {n!r}")
    return "".join(f"{idx} {term}\n" for idx, term in enumerate(sequence_a261654(n), start=1))


def parse_bfile(text: str) -> list[int]:
    """Inverse of `emit_bfile`; indices must run 1, 2, 3, ... without gaps."""
    terms = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        idx, term = line.split()
        if int(idx) != len(terms) + 1:
            raise ValueError(f"line {lineno}: expected index {len(terms) + 1}, got {idx}")
        terms.append(int(term))
    return terms

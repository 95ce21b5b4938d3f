"""Frink's offset constants for a primitive Pythagorean triple.

For a PPT ``(a, b, c)`` there are offsets ``(p, q, r)`` and ``(p', q', r')``
such that ``(at+p, bt+q, ct+r)`` and ``(at+p', bt+q', ct+r')`` are almost
Pythagorean for every ``t >= 1``.  Substituting the first family into
``x^2 + y^2 = z^2 + 1`` and using ``a^2 + b^2 = c^2`` leaves two conditions
on the offsets::

    p^2 + q^2 = r^2 + 1        ap + bq = cr

with the primed offsets being the complements ``a-p``, ``b-q``, ``c-r``.
We look for offsets inside the box ``0 <= p <= a``, ``0 <= q <= b``,
``0 <= r <= c``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Triple, is_apt, is_ppt
from .errors import (
    AmbiguousSolutionError,
    AptError,
    InvalidTError,
    NoSolutionError,
    NotAPPTError,
)

__all__ = [
    "FrinkConstants",
    "AptPair",
    "extended_gcd",
    "solve_constants",
    "box_solutions",
    "generate",
    "check_t",
]


@dataclass(frozen=True)
class FrinkConstants:
    """Offsets ``(p, q, r)`` / ``(p_c, q_c, r_c)`` attached to a PPT.

    ``p_c, q_c, r_c`` are the primed constants.  All invariants are checked
    on construction.
    """

    p: int
    q: int
    r: int
    p_c: int
    q_c: int
    r_c: int
    ppt: Triple

    def __post_init__(self) -> None:
        a, b, c = self.ppt
        lead, colead = self.lead_offsets, self.colead_offsets
        problems = []
        if lead[0] + colead[0] != a or lead[1] + colead[1] != b or lead[2] + colead[2] != c:
            problems.append("offsets do not sum to the PPT")
        for name, (p, q, r) in (("lead", lead), ("colead", colead)):
            if p * p + q * q != r * r + 1:
                problems.append(f"{name} offsets {p, q, r} are not almost Pythagorean")
            if a * p + b * q != c * r:
                problems.append(f"{name} offsets {p, q, r} violate ap + bq = cr")
            if not (0 <= p <= a and 0 <= q <= b and 0 <= r <= c):
                problems.append(f"{name} offsets {p, q, r} fall outside the box")
        if problems:
            raise AptError(f"invalid constants for {self.ppt}: " + "; ".join(problems))

    @property
    def lead_offsets(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.r)

    @property
    def colead_offsets(self) -> tuple[int, int, int]:
        return (self.p_c, self.q_c, self.r_c)


@dataclass(frozen=True)
class AptPair:
    lead: Triple
    colead: Triple
    t: int
    source: FrinkConstants


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, u, v)`` with ``a*u + b*v == g == gcd(a, b)``.

    >>> extended_gcd(3, 4)
    (1, -1, 1)
    """
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_u, u = u, old_u - quot * u
        old_v, v = v, old_v - quot * v
    return old_r, old_u, old_v


def _require_ppt(ppt: Triple, *, normal_form: bool) -> None:
    if not is_ppt(ppt):
        raise NotAPPTError(f"{ppt} is not a primitive Pythagorean triple")
    if normal_form and ppt.y % 2:
        raise NotAPPTError(f"{ppt} is not in normal form (second leg must be even)")


def _candidates(ppt: Triple):
    """Yield box offsets (p, q, r), found one r at a time.

    For fixed r, ``ap + bq = cr`` has solutions ``p = p0 + b*m``,
    ``q = q0 - a*m``; since ``gcd(a, b) = 1`` the smallest non-negative p is
    ``u*c*r mod b`` where ``a*u = 1 (mod b)``.
    """
    a, b, c = ppt
    g, u, _ = extended_gcd(a, b)
    assert g == 1
    for r in range(c + 1):
        rhs = c * r
        rr1 = r * r + 1
        p = (u * rhs) % b
        while p <= a:
            q, rem = divmod(rhs - a * p, b)
            if rem == 0 and 0 <= q <= b and p * p + q * q == rr1:
                yield (p, q, r)
            p += b


def solve_constants(ppt: Triple) -> FrinkConstants:
    """Solve for the offset constants of a normal-form PPT.

    The two box solutions are complements of each other.  Because ``a`` and
    ``c`` are odd and ``b`` is even, ``ap + bq = cr`` forces ``p = r (mod 2)``,
    so exactly one of them has odd ``p`` (and odd ``r``); that one is the
    lead.  For the ``(2i-1, 2i^2-2i, 2i^2-2i+1)`` family it is ``p = 1``.

    >>> k = solve_constants(Triple(3, 4, 5))
    >>> k.lead_offsets, k.colead_offsets
    ((1, 3, 3), (2, 1, 2))
    """
    _require_ppt(ppt, normal_form=True)
    found = sorted(_candidates(ppt))
    if not found:
        raise NoSolutionError(f"no offsets in the box for {ppt}")
    if len(found) != 2:
        raise AmbiguousSolutionError(ppt, found)
    lead, colead = found if found[0][0] % 2 else found[::-1]
    return FrinkConstants(*lead, *colead, ppt=ppt)


def box_solutions(ppt: Triple) -> list[tuple[int, int, int]]:
    """Exhaustive search of the offset box, sorted by ``(p, q)``.

    Deliberately naive: every ``(p, q)`` cell is visited and ``r`` is read
    off the linear condition, so it shares no logic with `solve_constants`.
    """
    _require_ppt(ppt, normal_form=False)
    a, b, c = ppt
    out = []
    for p in range(a + 1):
        for q in range(b + 1):
            r, rem = divmod(a * p + b * q, c)
            if rem == 0 and r <= c and p * p + q * q == r * r + 1:
                out.append((p, q, r))
    return out


def check_t(t: int) -> None:
    if isinstance(t, bool) or not isinstance(t, int) or t < 1:
        raise InvalidTError(f"t must be a positive integer, got {t!r}")


def generate(constants: FrinkConstants, t: int) -> AptPair:
    """Instantiate both parametric triples at scale ``t >= 1``."""
    check_t(t)
    a, b, c = constants.ppt
    lead = Triple(a * t + constants.p, b * t + constants.q, c * t + constants.r)
    colead = Triple(a * t + constants.p_c, b * t + constants.q_c, c * t + constants.r_c)
    if not (is_apt(lead) and is_apt(colead)):
        raise AssertionError(f"generated non-APT from {constants} at t={t}: {lead}, {colead}")
    return AptPair(lead, colead, t, constants)

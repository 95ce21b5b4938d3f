"""Exhaustive APT enumeration and coverage of the closed-form generator.

`enumerate_apts` is ground truth: every solution of ``x^2 + y^2 = z^2 + 1``
with ``x <= y`` and ``z <= max_z``.  `coverage` checks which of those the
``(i, t)`` generator in `explicit` actually produces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .core import Triple
from .errors import InvalidBoundError
from .explicit import apt_pair

__all__ = [
    "Attribution",
    "AptRecord",
    "CoverageReport",
    "enumerate_apts",
    "family_attributions",
    "coverage",
    "attributed_records",
]

MAX_UNCOVERED_SAMPLES = 10


class Attribution(NamedTuple):
    i: int
    t: int
    member: str  # "lead" or "colead"


@dataclass(frozen=True)
class AptRecord:
    triple: Triple
    covered_by: Attribution | None = None

    @property
    def trivial(self) -> bool:
        return self.triple.x == 1


@dataclass(frozen=True)
class CoverageReport:
    max_z: int
    total: int
    covered: int
    uncovered_samples: list[AptRecord] = field(default_factory=list)

    @property
    def uncovered(self) -> int:
        return self.total - self.covered


def _check_bound(max_z: int, minimum: int) -> None:
    if isinstance(max_z, bool) or not isinstance(max_z, int) or max_z < minimum:
        raise InvalidBoundError(f"max_z must be an integer >= {minimum}, got {max_z!r}")


def _two_pointer_all(max_z: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Run the per-z two-pointer scan for every z in ``[1, max_z]`` at once.

    Lane z starts at ``x = 1, y = z`` and tracks ``d = x^2 + y^2 - z^2 - 1``.
    Each step moves x up when d < 0, y down when d > 0, and both after a hit,
    exactly as the scalar scan would; lanes drop out once ``x > y``.  Only
    the difference d is stored, so int64 lanes never hold a square.
    """
    z = np.arange(1, max_z + 1, dtype=np.int64)
    x = np.ones_like(z)
    y = z.copy()
    d = np.zeros_like(z)
    hits_x, hits_y, hits_z = [], [], []
    while z.size:
        hit = d == 0
        if hit.any():
            hits_x.append(x[hit])
            hits_y.append(y[hit])
            hits_z.append(z[hit])
        below = d < 0
        above = d > 0
        d = np.where(hit, d + 2 * (x - y) + 2, np.where(below, d + 2 * x + 1, d - 2 * y + 1))
        x = x + (hit | below)
        y = y - (hit | above)
        live = x <= y
        if not live.all():
            z, x, y, d = z[live], x[live], y[live], d[live]
    return np.concatenate(hits_x), np.concatenate(hits_y), np.concatenate(hits_z)


def enumerate_apts(max_z: int, include_trivial: bool = False) -> list[AptRecord]:
    """All APTs with ``x <= y`` and ``z <= max_z``, sorted by ``(z, x)``.

    Trivial solutions ``(1, z, z)`` are only returned when asked for.

    >>> [r.triple for r in enumerate_apts(8)]
    [Triple(x=5, y=5, z=7), Triple(x=4, y=7, z=8)]
    """
    _check_bound(max_z, 1)
    xs, ys, zs = _two_pointer_all(max_z)
    order = np.lexsort((xs, zs))
    records = []
    for x, y, z in zip(xs[order].tolist(), ys[order].tolist(), zs[order].tolist()):
        if x == 1 and not include_trivial:
            continue
        records.append(AptRecord(Triple(x, y, z)))
    return records


def family_attributions(max_z: int) -> dict[Triple, Attribution]:
    """Map every generator output with ``z <= max_z`` (legs sorted) to its ``(i, t)``.

    Where two parameter choices give the same triple the smallest ``(i, t)``
    wins, lead before colead.
    """
    found: dict[Triple, Attribution] = {}
    i = 2
    # smallest z at index i is min(lead z, colead z) at t = 1; both grow with i
    while min(2 * i * i, 4 * i * i - 6 * i + 3) <= max_z:
        t = 1
        while True:
            pair = apt_pair(i, t)
            if min(pair.lead.z, pair.colead.z) > max_z:
                break
            for member, triple in (("lead", pair.lead), ("colead", pair.colead)):
                if triple.z <= max_z:
                    found.setdefault(triple.sorted_legs(), Attribution(i, t, member))
            t += 1
        i += 1
    return found


def coverage(max_z: int, use_family: bool = True) -> CoverageReport:
    """Count non-trivial APTs up to `max_z` and how many the generator hits.

    ``use_family=False`` skips attribution entirely, so nothing is covered.
    """
    _check_bound(max_z, 8)
    attributions = family_attributions(max_z) if use_family else {}
    covered = 0
    uncovered: list[AptRecord] = []
    records = enumerate_apts(max_z, include_trivial=False)
    for rec in records:
        who = attributions.get(rec.triple)
        if who is not None:
            covered += 1
        elif len(uncovered) < MAX_UNCOVERED_SAMPLES:
            uncovered.append(rec)
    return CoverageReport(max_z, len(records), covered, uncovered)


def attributed_records(max_z: int) -> list[AptRecord]:
    """Non-trivial records with ``covered_by`` filled in where applicable."""
    _check_bound(max_z, 1)
    attributions = family_attributions(max_z)
    return [
        AptRecord(rec.triple, attributions.get(rec.triple))
        for rec in enumerate_apts(max_z, include_trivial=False)
    ]

from math import gcd

import pytest


def naive_apts(max_z, include_trivial=True):
    """All (x, y, z) with x <= y, z <= max_z and x^2 + y^2 = z^2 + 1, by double loop."""
    squares = {z * z: z for z in range(1, max_z + 1)}
    found = set()
    # y <= z always holds, so y <= max_z
    for x in range(1, max_z + 1):
        for y in range(x, max_z + 1):
            z = squares.get(x * x + y * y - 1)
            if z is not None and (include_trivial or x != 1):
                found.add((x, y, z))
    return found


def naive_ppts(max_c):
    """Normal-form PPTs with c <= max_c, by scanning legs directly."""
    squares = {c * c: c for c in range(1, max_c + 1)}
    out = set()
    for a in range(1, max_c + 1, 2):
        for b in range(2, max_c + 1, 2):
            c = squares.get(a * a + b * b)
            if c and gcd(a, b) == gcd(b, c) == gcd(a, c) == 1:
                out.add((a, b, c))
    return out


def naive_box(a, b, c):
    """Literal triple loop over the offset box."""
    return [
        (p, q, r)
        for p in range(a + 1)
        for q in range(b + 1)
        for r in range(c + 1)
        if a * p + b * q == c * r and p * p + q * q == r * r + 1
    ]


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", "call") == "call" and "test_acceptance.py" in rep.nodeid:
                lines.append((rep.nodeid.split("::")[-1], outcome.upper()))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, outcome in sorted(lines):
            terminalreporter.write_line(f"{'PASS' if outcome == 'PASSED' else 'FAIL'}  {name}")


@pytest.fixture
def naive():
    class _N:
        apts = staticmethod(naive_apts)
        ppts = staticmethod(naive_ppts)
        box = staticmethod(naive_box)

    return _N

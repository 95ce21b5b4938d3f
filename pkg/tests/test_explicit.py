import pytest
from hypothesis import given
from hypothesis import strategies as st

from almost_pythagorean.core import Triple
from almost_pythagorean.errors import AptError, InvalidIndexError, InvalidTError
from almost_pythagorean.explicit import (
    ExplicitParams,
    apt_pair,
    emit_bfile,
    family_constants,
    parse_bfile,
    sequence_a261654,
)
from almost_pythagorean.frink import box_solutions, generate, solve_constants
from almost_pythagorean.ppt import ppt_family

TABLE = [
    (4, 7, 8),
    (6, 17, 18),
    (8, 31, 32),
    (10, 49, 50),
    (12, 71, 72),
    (14, 97, 98),
    (16, 127, 128),
    (18, 161, 162),
    (20, 199, 200),
    (22, 241, 242),
]


def offsets(k):
    return k.lead_offsets + k.colead_offsets


def test_family_constants_examples():
    assert offsets(family_constants(2)) == (1, 3, 3, 2, 1, 2)
    k4 = family_constants(4)
    assert offsets(k4) == (1, 7, 7, 6, 17, 18)
    assert sorted([k4.lead_offsets, k4.colead_offsets]) == box_solutions(Triple(7, 24, 25))
    k10 = family_constants(10)
    assert offsets(k10) == (1, 19, 19, 18, 161, 162)
    # worked (i=10, t=7) pair minus 7 * (19, 180, 181) recovers the offsets
    a, b, c = 19, 180, 181
    assert (134 - 7 * a, 1279 - 7 * b, 1286 - 7 * c) == k10.lead_offsets
    assert (151 - 7 * a, 1421 - 7 * b, 1429 - 7 * c) == k10.colead_offsets


@pytest.mark.parametrize("i", [1, 0, -3])
def test_family_constants_bad_index(i):
    with pytest.raises(InvalidIndexError):
        family_constants(i)


@pytest.mark.parametrize(
    "i, t, lead, colead",
    [
        (4, 5, (36, 127, 132), (41, 137, 143)),
        (4, 6, (43, 151, 157), (48, 161, 168)),
        (10, 7, (134, 1279, 1286), (151, 1421, 1429)),
        (11, 7, (148, 1561, 1568), (167, 1739, 1747)),
        (3120, 25, (155976, 486570239, 486570264), (162213, 506020321, 506020347)),
    ],
)
def test_apt_pair_worked_examples(i, t, lead, colead):
    pair = apt_pair(i, t)
    assert pair.lead == Triple(*lead)
    assert pair.colead == Triple(*colead)
    assert apt_pair(ExplicitParams(i, t)) == pair


def test_apt_pair_bad_params():
    with pytest.raises(InvalidIndexError):
        apt_pair(1, 3)
    with pytest.raises(InvalidTError):
        apt_pair(3, 0)


def test_identity_grid():
    for i in range(2, 201):
        for t in range(1, 201):
            pair = apt_pair(i, t)
            for x, y, z in (pair.lead, pair.colead):
                assert x * x + y * y == z * z + 1


def test_matches_frink_generate():
    for i in range(2, 51):
        k = family_constants(i)
        for t in range(1, 51):
            assert apt_pair(i, t) == generate(k, t)


def test_matches_solver():
    for i in range(2, 31):
        assert family_constants(i) == solve_constants(ppt_family(i))


@given(st.integers(min_value=2, max_value=2**31 - 1), st.integers(min_value=1, max_value=2**31 - 1))
def test_large_parameters_exact(i, t):
    pair = apt_pair(i, t)
    for x, y, z in (pair.lead, pair.colead):
        assert x * x + y * y == z * z + 1


def test_sequence_examples():
    assert sequence_a261654(6) == [4, 7, 8, 6, 17, 18]
    assert sequence_a261654(0) == []
    assert sequence_a261654(30) == [v for row in TABLE for v in row]
    assert sequence_a261654(7) == [4, 7, 8, 6, 17, 18, 8]


def test_sequence_is_lead_at_t1():
    terms = sequence_a261654(300)
    for n in range(100):
        i = n + 2
        block = tuple(terms[3 * n : 3 * n + 3])
        assert block == tuple(apt_pair(i, 1).lead) == (2 * i, 2 * i * i - 1, 2 * i * i)
        x, y, z = block
        assert y == z - 1
        half = z // 2
        assert z == 2 * half and int(half**0.5) ** 2 == half


def test_sequence_rejects_negative():
    with pytest.raises(AptError):
        sequence_a261654(-1)


def test_bfile_examples():
    assert emit_bfile(3) == "1 4\n2 7\n3 8\n"
    assert emit_bfile(1) == "1 4\n"
    six = emit_bfile(6)
    assert six == "1 4\n2 7\n3 8\n4 6\n5 17\n6 18\n"
    assert six.endswith("6 18\n")
    with pytest.raises(AptError):
        emit_bfile(0)


@given(st.integers(min_value=1, max_value=500))
def test_bfile_roundtrip(n):
    text = emit_bfile(n)
    assert text.isascii() and "\r" not in text
    assert parse_bfile(text) == sequence_a261654(n)

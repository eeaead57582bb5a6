"""Exact integer/rational layer: S, the centering, and the diagonal set."""

import io
from fractions import Fraction

import pytest

from collspec.collision import (
    collision_invariant,
    diagonal_set,
    diagonal_set_by_scan,
    slice_count,
    write_collision_csv,
)
from collspec.errors import WrongModulus
from collspec.unit_group import Level, build_unit_group

PRIMES_TO_97 = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
                61, 67, 71, 73, 79, 83, 89, 97]


def table(b):
    return collision_invariant(build_unit_group(b, Level.MOD_B_SQUARED))


def test_diagonal_set_b3():
    assert diagonal_set(3).members == (0, 4, 8)


def test_diagonal_set_b5():
    assert diagonal_set(5).members == (0, 6, 12, 18, 24)


@pytest.mark.parametrize("b", PRIMES_TO_97)
def test_diagonal_set_matches_digit_scan(b):
    # oracle: brute scan for n whose two base-b digits agree
    assert diagonal_set(b).members == diagonal_set_by_scan(b)


def test_slice_count_examples():
    # d_n(a) = floor((n+1)a/m) - floor(na/m)
    assert slice_count(0, 5, 9) == 0
    assert slice_count(4, 5, 9) == 25 // 9 - 20 // 9 == 0
    assert slice_count(8, 5, 9) == 45 // 9 - 40 // 9 == 1
    assert slice_count(4, 8, 9) == 1


def test_hand_table_b3():
    t = table(3)
    assert t.S == {1: 0, 2: 1, 4: 0, 5: -1, 7: -2, 8: -1}
    assert t.S_centered == {
        1: Fraction(2, 3),
        2: Fraction(4, 3),
        4: Fraction(2, 3),
        5: Fraction(-2, 3),
        7: Fraction(-4, 3),
        8: Fraction(-2, 3),
    }


def test_rejects_mod_b_group():
    with pytest.raises(WrongModulus):
        collision_invariant(build_unit_group(3, Level.MOD_B))


@pytest.mark.parametrize("b", [3, 5, 7, 11, 13])
def test_direct_sum_oracle(b):
    # definition, term by term, no vectorization
    t = table(b)
    m = b * b
    diag = diagonal_set(b).members
    for a in list(t.S)[:: max(1, len(t.S) // 10)]:
        expected = -1 - a // b + sum(
            (n + 1) * a // m - n * a // m for n in diag
        )
        assert t.S[a] == expected


@pytest.mark.parametrize("b", PRIMES_TO_97)
def test_centered_values_exact(b):
    t = table(b)
    for k in range(1, b):
        assert sum(s0 for a, s0 in t.S_centered.items() if a % b == k) == 0
    assert all(b % s0.denominator == 0 for s0 in t.S_centered.values())


@pytest.mark.parametrize("b", PRIMES_TO_97)
def test_antisymmetry_exact(b):
    t = table(b)
    for a, s0 in t.S_centered.items():
        assert t.S_centered[t.m - a] == -s0


@pytest.mark.parametrize("b", [3, 5, 13])
def test_centering_recovers_s(b):
    t = table(b)
    for a in t.S:
        assert Fraction(t.S[a]) == t.S_centered[a] + t.class_means[a % b]


def test_class_means_structure():
    t = table(5)
    assert set(t.class_means) == {1, 2, 3, 4}
    # each residue class mod b contains exactly b units
    for k in range(1, 5):
        assert sum(1 for a in t.S if a % 5 == k) == 5


def test_csv_shape():
    buf = io.StringIO()
    write_collision_csv(table(3), buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "a,S,S_centered_num,S_centered_den"
    assert lines[1] == "1,0,2,3"
    assert lines[4] == "5,-1,-2,3"
    assert len(lines) == 7

import math
from fractions import Fraction

import numpy as np
import pytest

from collspec.characters import Character, Family, enumerate_family
from collspec.collision import collision_invariant
from collspec.errors import CutoffBelowModulus
from collspec.prime_sums import (
    cross_moment_bound,
    f_trunc,
    p_trunc,
    verify_expansion,
)
from collspec.unit_group import Level, build_unit_group, sieve_primes


def primes_between(m, n):
    return [p for p in range(m + 1, n + 1)
            if p > 1 and all(p % d for d in range(2, int(p ** 0.5) + 1))]


def test_principal_sum_exact_oracle():
    # s = 2 keeps everything rational: sum of 1/p^2 over 9 < p <= 100
    g = build_unit_group(3, Level.MOD_B_SQUARED)
    chi0 = Character(g, 0)
    val = p_trunc(chi0, 2.0, 100, sieve_primes(100))
    expected = sum(Fraction(1, p * p) for p in primes_between(9, 100))
    assert val.real == pytest.approx(float(expected), rel=1e-14)
    assert val.imag == 0.0


def test_f_trunc_two_line_oracle():
    g = build_unit_group(3, Level.MOD_B_SQUARED)
    t = collision_invariant(g)
    primes = sieve_primes(1000)
    val = f_trunc(t, 2.0, 1000, primes)
    expected = math.fsum(
        float(t.S_centered[p % 9]) / p ** 2 for p in primes_between(9, 1000)
    )
    assert val == pytest.approx(expected, rel=1e-13)


def test_character_sum_matches_termwise():
    g = build_unit_group(3, Level.MOD_B_SQUARED)
    chi = Character(g, 1)
    primes = sieve_primes(5000)
    val = p_trunc(chi, 1.2, 5000, primes)
    terms = [chi.value(p) / p ** 1.2 for p in primes_between(9, 5000)]
    resummed = sum(reversed(terms))  # worst-case reassociation
    assert abs(val - resummed) < 1e-9


def test_expansion_identity_small():
    rec = verify_expansion(3, 2.0, 1000)
    assert rec.expansion_residual < 1e-11
    assert rec.restriction_residual < 1e-11
    assert rec.margin >= -1e-10


def test_expansion_identity_b5():
    rec = verify_expansion(5, 1.2, 10 ** 5)
    assert rec.expansion_residual < 1e-9
    assert rec.restriction_residual < 1e-11
    g = build_unit_group(5, Level.MOD_B_SQUARED)
    assert set(rec.P_trunc) == {
        c.index for c in enumerate_family(g, Family.PRIMITIVE_ODD)
    }


def test_no_primes_below_cutoff_gives_zeros():
    # m = 9 < cutoff = 10 but no primes in (9, 10]
    rec = verify_expansion(3, 1.2, 10)
    assert rec.F_trunc == 0.0
    assert all(v == 0 for v in rec.P_trunc.values())
    assert rec.expansion_residual == 0.0
    assert rec.margin == 0.0


def test_cutoff_guards():
    with pytest.raises(CutoffBelowModulus):
        verify_expansion(3, 1.2, 9)
    with pytest.raises(ValueError):
        verify_expansion(3, -1.0, 100)
    with pytest.raises(ValueError):
        cross_moment_bound(3, 0.5, 100)


@pytest.mark.parametrize("b", [3, 5])
@pytest.mark.parametrize("s", [0.8, 1.2, 2.0])
def test_margin_nonnegative(b, s):
    rec = cross_moment_bound(b, s, 20_000)
    assert rec.margin >= -1e-10
    assert rec.bound_lhs == abs(rec.F_trunc)

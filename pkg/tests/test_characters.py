import math

import numpy as np
import pytest

from collspec.characters import (
    Character,
    Family,
    build_group_pair,
    companion_mod_b,
    enumerate_family,
    gauss_sum,
    lift_and_twist,
)
from collspec.errors import IncompatibleGroups, WrongModulus
from collspec.unit_group import Level, build_unit_group

G9 = build_unit_group(3, Level.MOD_B_SQUARED)
G3 = build_unit_group(3, Level.MOD_B)


def test_principal_character():
    chi0 = Character(G9, 0)
    assert chi0.is_principal
    assert chi0.value(7) == 1
    assert chi0.value(6) == 0  # not a unit
    assert chi0.value(16) == 1  # reduces mod 9
    assert chi0.is_even


def test_index_out_of_range():
    with pytest.raises(ValueError):
        Character(G9, 6)
    with pytest.raises(ValueError):
        Character(G9, -1)


def test_character_values_are_phi_th_roots():
    for j in range(G9.phi):
        chi = Character(G9, j)
        for a in G9.units:
            assert abs(chi.value(a) ** G9.phi - 1) < 1e-12


def test_quadratic_character_mod_9():
    # j = 3 has order 2: values are +-1 on units
    chi = Character(G9, 3)
    assert chi.value(1) == pytest.approx(1)
    # 5 = g^5, so chi(5) = (-1)^5 = -1
    assert chi.value(5) == pytest.approx(-1)
    assert chi.is_odd


def test_parity_matches_value_at_minus_one():
    for j in range(G9.phi):
        chi = Character(G9, j)
        v = chi.value(G9.q - 1)
        assert v == pytest.approx(1 if chi.is_even else -1)


def test_conjugate_is_pointwise_conjugate():
    chi = Character(G9, 1)
    bar = chi.conjugate()
    for a in G9.units:
        assert bar.value(a) == pytest.approx(chi.value(a).conjugate())


def test_multiplicativity():
    chi = Character(G9, 1)
    for a in G9.units:
        for c in G9.units:
            assert chi.value(a * c) == pytest.approx(chi.value(a) * chi.value(c))


@pytest.mark.parametrize("b", [3, 5, 7, 11, 13])
def test_primitivity_definitions_agree(b):
    """Index test (b does not divide j) vs restriction to 1 + tb."""
    g = build_unit_group(b, Level.MOD_B_SQUARED)
    for j in range(g.phi):
        chi = Character(g, j)
        assert chi.is_primitive() == chi.is_primitive_by_subgroup()


def test_primitive_odd_count_mod_25():
    g = build_unit_group(5, Level.MOD_B_SQUARED)
    fam = enumerate_family(g, Family.PRIMITIVE_ODD)
    assert len(fam) == (5 - 1) ** 2 // 2 == 8
    assert [c.index for c in fam] == sorted(c.index for c in fam)


def test_family_partition():
    g = build_unit_group(5, Level.MOD_B_SQUARED)
    odd = enumerate_family(g, Family.ODD)
    even = enumerate_family(g, Family.EVEN)
    assert len(odd) + len(even) == g.phi
    prim = enumerate_family(g, Family.PRIMITIVE_ODD)
    imprim = enumerate_family(g, Family.IMPRIMITIVE_ODD)
    assert {c.index for c in prim} | {c.index for c in imprim} == {
        c.index for c in odd
    }


def test_primitivity_filter_needs_mod_b_squared():
    with pytest.raises(WrongModulus):
        enumerate_family(G3, Family.PRIMITIVE_ODD)
    with pytest.raises(WrongModulus):
        Character(G3, 1).is_primitive()


@pytest.mark.parametrize("b", [3, 5, 7])
@pytest.mark.parametrize("level", [Level.MOD_B, Level.MOD_B_SQUARED])
def test_gauss_sum_magnitude(b, level):
    # |tau(chi)| = sqrt(q) for primitive chi
    g = build_unit_group(b, level)
    for j in range(1, g.phi):
        chi = Character(g, j)
        if level is Level.MOD_B_SQUARED and not chi.is_primitive():
            continue
        assert abs(gauss_sum(chi)) == pytest.approx(math.sqrt(g.q), abs=1e-10)


def test_gauss_sum_principal_is_mu():
    # Ramanujan sum at 1: sum of e(a/b) over units = mu(b) = -1 for prime b
    assert gauss_sum(Character(G3, 0)) == pytest.approx(-1)


def test_gauss_sum_imprimitive_vanishes():
    chi = Character(G9, 3)  # conductor 3
    assert abs(gauss_sum(chi)) < 1e-12


def test_gauss_sum_oracle_direct():
    chi = Character(G3, 1)
    direct = sum(
        chi.value(a) * complex(math.cos(2 * math.pi * a / 3),
                               math.sin(2 * math.pi * a / 3))
        for a in (1, 2)
    )
    assert gauss_sum(chi) == pytest.approx(direct)


def test_orthogonality():
    for b in (3, 5, 7):
        g = build_unit_group(b, Level.MOD_B_SQUARED)
        for j in range(g.phi):
            total = Character(g, j).values_on_units().sum()
            expected = g.phi if j == 0 else 0.0
            assert abs(total - expected) < 1e-9


@pytest.mark.parametrize("b", [3, 5, 7, 11, 13])
def test_primitive_characters_kill_cosets(b):
    # sum of chi over a coset of 1 + tb vanishes for primitive chi
    g = build_unit_group(b, Level.MOD_B_SQUARED)
    chi = next(c for c in enumerate_family(g, Family.ALL) if c.index == 1)
    assert chi.is_primitive()
    coset = [(2 * (1 + t * b)) % g.q for t in range(b)]
    assert abs(sum(chi.value(a) for a in coset)) < 1e-10


def test_companion_and_pair():
    pair = build_group_pair(3)
    assert pair.mod_b.q == 3
    assert pair.mod_b_squared.q == 9
    assert pair.mod_b_squared.g % 3 == pair.mod_b.g
    comp = companion_mod_b(G9)
    assert comp.g == G9.g % 3
    with pytest.raises(WrongModulus):
        companion_mod_b(G3)


def test_lift_and_twist_pointwise():
    """xi * conj(chi) evaluated by index arithmetic equals the product."""
    pair = build_group_pair(3)
    gb, gb2 = pair.mod_b, pair.mod_b_squared
    for jx in range(gb.phi):
        xi = Character(gb, jx)
        for jc in range(gb2.phi):
            chi = Character(gb2, jc)
            tw = lift_and_twist(xi, chi)
            for a in gb2.units:
                assert tw.value(a) == pytest.approx(xi.value(a % 3) * chi.value(a))


def test_lift_principal_is_identity():
    pair = build_group_pair(5)
    xi0 = Character(pair.mod_b, 0)
    chi = Character(pair.mod_b_squared, 3)
    assert lift_and_twist(xi0, chi).index == chi.index


def test_lift_and_twist_rejects_wrong_moduli():
    pair3 = build_group_pair(3)
    pair5 = build_group_pair(5)
    with pytest.raises(WrongModulus):
        lift_and_twist(Character(pair5.mod_b, 1), Character(pair3.mod_b_squared, 1))
    with pytest.raises(WrongModulus):
        lift_and_twist(Character(pair3.mod_b_squared, 1),
                       Character(pair3.mod_b_squared, 1))


def test_lift_and_twist_rejects_incompatible_roots():
    from collspec.unit_group import _group_with_root

    # 3 generates (Z/5Z)* but does not match the mod-25 root 2
    g5_alt = _group_with_root(5, 5, 4, 3)
    g25 = build_unit_group(5, Level.MOD_B_SQUARED)
    assert g25.g % 5 != g5_alt.g
    with pytest.raises(IncompatibleGroups):
        lift_and_twist(Character(g5_alt, 1), Character(g25, 1))

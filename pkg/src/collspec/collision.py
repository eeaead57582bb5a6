"""The collision invariant on (Z/b^2 Z)* and its exact centering.

With m = b**2, the invariant of a unit a is assembled from floor-count
slices along the diagonal set G of residues whose two base-b digits
agree:

    G = {n in [0, m) : floor(n/b) = n mod b} = {r*(b+1) : 0 <= r < b},
    d_n(a) = floor((n+1)*a/m) - floor(n*a/m),
    S(a)   = -1 - floor(a/b) + sum_{n in G} d_n(a).

Centering subtracts the mean of S over the coset a = k (mod b).  Both
the coset means and the centered values S0 are exact rationals with
denominator dividing b, so the coset sums of S0 vanish identically and
the antisymmetry S0(m - a) = -S0(a) is asserted with no float tolerance.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import IO

import numpy as np

from .errors import WrongModulus
from .unit_group import UnitGroup


@dataclass(frozen=True)
class DiagonalSet:
    """Residues mod b**2 whose quotient and remainder base b agree."""

    b: int
    members: tuple[int, ...]


def diagonal_set(b: int) -> DiagonalSet:
    """Closed form {r*(b+1) : 0 <= r < b}; see diagonal_set_by_scan."""
    return DiagonalSet(b=b, members=tuple(r * (b + 1) for r in range(b)))


def diagonal_set_by_scan(b: int) -> tuple[int, ...]:
    """Digit-coincidence scan over all of [0, b**2); the slow twin."""
    return tuple(n for n in range(b * b) if n // b == n % b)


def slice_count(n: int, a: int, m: int) -> int:
    """d_n(a) = floor((n+1)a/m) - floor(na/m)."""
    d = (n + 1) * a // m - n * a // m
    assert 0 <= d <= a, "slice count escaped its coarse bounds"
    return d


@dataclass(frozen=True, eq=False)
class CollisionTable:
    """S and its centered companion over the units mod m = b**2.

    S is integer valued; S_centered and class_means are exact Fractions
    with denominator dividing b.  Keys of S and S_centered are the units
    ascending; class_means is keyed by the coset label k = a mod b.
    """

    m: int
    b: int
    S: dict[int, int]
    S_centered: dict[int, Fraction]
    class_means: dict[int, Fraction]

    @cached_property
    def unit_array(self) -> np.ndarray:
        arr = np.array(sorted(self.S), dtype=np.int64)
        arr.flags.writeable = False
        return arr

    @cached_property
    def s_array(self) -> np.ndarray:
        arr = np.array([self.S[a] for a in self.unit_array], dtype=np.int64)
        arr.flags.writeable = False
        return arr

    @cached_property
    def s_centered_float(self) -> np.ndarray:
        """float(S0) aligned with unit_array; the one rational-to-float step."""
        arr = np.array([float(self.S_centered[a]) for a in self.unit_array])
        arr.flags.writeable = False
        return arr

    @cached_property
    def s_centered_by_residue(self) -> np.ndarray:
        """Length-m float lookup of S0, zero off the units."""
        arr = np.zeros(self.m)
        arr[self.unit_array] = self.s_centered_float
        arr.flags.writeable = False
        return arr


def collision_invariant(group: UnitGroup) -> CollisionTable:
    """Tabulate S and S0 over the units of the mod-b**2 group."""
    if group.q != group.b**2:
        raise WrongModulus("the collision invariant lives mod b**2")
    b, m = group.b, group.q
    units = group.unit_array
    diag = np.array(diagonal_set(b).members, dtype=np.int64)

    # All slices at once: row n, column a.
    prods_hi = (diag[:, None] + 1) * units[None, :]
    prods_lo = diag[:, None] * units[None, :]
    slices = prods_hi // m - prods_lo // m
    s_vals = -1 - units // b + slices.sum(axis=0)

    class_sums = {k: 0 for k in range(1, b)}
    for a, s in zip(units.tolist(), s_vals.tolist()):
        class_sums[a % b] += s
    class_means = {k: Fraction(class_sums[k], b) for k in range(1, b)}

    S = dict(zip(units.tolist(), s_vals.tolist()))
    S_centered = {a: Fraction(b * s - class_sums[a % b], b) for a, s in S.items()}
    return CollisionTable(m=m, b=b, S=S, S_centered=S_centered, class_means=class_means)


def write_collision_csv(table: CollisionTable, fp: IO[str]) -> None:
    """Dump (a, S, S_centered_num, S_centered_den) rows, units ascending."""
    writer = csv.writer(fp, lineterminator="\n")
    writer.writerow(["a", "S", "S_centered_num", "S_centered_den"])
    for a in sorted(table.S):
        s0 = table.S_centered[a]
        writer.writerow([a, table.S[a], s0.numerator, s0.denominator])

"""Truncated prime sums and the finite spectral expansion.

Over primes m < p <= N (m = b**2) define

    P(s, chi) = sum chi(p) / p^s,
    F0(s)     = sum S0(p mod m) / p^s.

Dual-group inversion S0(a) = sum_chi s0_hat(chi) chi(a) is a finite
identity, so

    F0(s) = sum over primitive odd chi of s0_hat(chi) * P(s, chi)

holds exactly for any truncation: the even and imprimitive-odd terms
drop out because their coefficients vanish.  The triangle inequality
then gives the cross-moment bound

    |F0(s)| <= (1/phi) * sum |B1| |S_G| |P(s, chi)|,

whose margin is reported for (b, s, N) grids.  Sums run over primes in
ascending order; p^{-s} is evaluated as exp(-s ln p).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .characters import Character, roots_of_unity
from .collision import CollisionTable
from .errors import CutoffBelowModulus
from .spectrum import _table_for, verify_decomposition
from .unit_group import Level, PrimeList, build_unit_group, sieve_primes


@dataclass(frozen=True)
class PrimeSumRecord:
    b: int
    s: float
    cutoff: int
    F_trunc: float  # real by construction: S0 is real
    P_trunc: dict[int, complex]  # chi_index -> P(s, chi), primitive odd only
    expansion_residual: float
    restriction_residual: float  # all-chi sum vs primitive-odd-only sum
    bound_lhs: float
    bound_rhs: float
    margin: float


@lru_cache(maxsize=4)
def _shared_primes(limit: int) -> PrimeList:
    return sieve_primes(limit)


def _primes_in_range(primes: PrimeList, m: int, cutoff: int) -> np.ndarray:
    if cutoff <= m:
        raise CutoffBelowModulus(f"cutoff {cutoff} does not exceed modulus {m}")
    if cutoff > primes.limit:
        raise ValueError(f"cutoff {cutoff} beyond sieve limit {primes.limit}")
    arr = primes.primes
    lo, hi = np.searchsorted(arr, m, side="right"), np.searchsorted(arr, cutoff, side="right")
    return arr[lo:hi]


def p_trunc(chi: Character, s: float, cutoff: int, primes: PrimeList) -> complex:
    """P(s, chi) = sum over m < p <= cutoff of chi(p) p^{-s}."""
    group = chi.group
    p_arr = _primes_in_range(primes, group.q, cutoff)
    if p_arr.size == 0:
        return 0j
    weights = np.exp(-s * np.log(p_arr.astype(float)))
    exponents = (chi.index * group.dlog_by_residue[p_arr % group.q]) % group.phi
    vals = roots_of_unity(group.phi)[exponents]
    return complex(np.dot(weights, vals))


def f_trunc(table: CollisionTable, s: float, cutoff: int, primes: PrimeList) -> float:
    """F0(s) = sum over m < p <= cutoff of S0(p mod m) p^{-s}."""
    p_arr = _primes_in_range(primes, table.m, cutoff)
    if p_arr.size == 0:
        return 0.0
    weights = np.exp(-s * np.log(p_arr.astype(float)))
    return float(np.dot(weights, table.s_centered_by_residue[p_arr % table.m]))


def _record(b: int, s: float, cutoff: int, primes: PrimeList | None) -> PrimeSumRecord:
    if primes is None:
        primes = _shared_primes(cutoff)
    group = build_unit_group(b, Level.MOD_B_SQUARED)
    table = _table_for(b)
    f_val = f_trunc(table, s, cutoff, primes)

    p_by_index: dict[int, complex] = {}
    expansion_all = 0j
    expansion_prim_odd = 0j
    bound_terms = []
    for r in verify_decomposition(b):
        chi = Character(group, r.chi_index)
        p_val = p_trunc(chi, s, cutoff, primes)
        expansion_all += r.s_hat * p_val
        if r.parity == "odd" and r.primitive:
            p_by_index[r.chi_index] = p_val
            expansion_prim_odd += r.s_hat * p_val
            bound_terms.append(abs(r.B1) * abs(r.S_G) * abs(p_val))

    bound_rhs = math.fsum(bound_terms) / group.phi
    bound_lhs = abs(f_val)
    return PrimeSumRecord(
        b=b,
        s=s,
        cutoff=cutoff,
        F_trunc=f_val,
        P_trunc=p_by_index,
        expansion_residual=abs(f_val - expansion_prim_odd),
        restriction_residual=abs(expansion_all - expansion_prim_odd),
        bound_lhs=bound_lhs,
        bound_rhs=bound_rhs,
        margin=bound_rhs - bound_lhs,
    )


def verify_expansion(
    b: int, s: float, cutoff: int, primes: PrimeList | None = None
) -> PrimeSumRecord:
    """Check F0 = sum s0_hat * P term by term at the given truncation."""
    if s <= 0:
        raise ValueError(f"need s > 0, got {s}")
    return _record(b, s, cutoff, primes)


def cross_moment_bound(
    b: int, s: float, cutoff: int, primes: PrimeList | None = None
) -> PrimeSumRecord:
    """Triangle-inequality bound |F0| <= (1/phi) sum |B1||S_G||P|."""
    if s <= 0.5:
        raise ValueError(f"need s > 0.5, got {s}")
    return _record(b, s, cutoff, primes)

"""Cyclic unit groups of Z/qZ for q = b and q = b**2, b an odd prime.

For an odd prime b both unit groups are cyclic, so fixing a primitive
root g identifies the dual group with Z/phi(q)Z: every unit a equals
g**t for a unique exponent t = dlog(a), and character evaluation
downstream reduces to index arithmetic mod phi(q).  Residues are kept
canonical (in {0, ..., q-1}) throughout; "unit" always means
gcd(a, q) = 1.

The prime sieve shared by the truncated Dirichlet sums lives here too.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import LimitTooLarge, NotOddPrime

# Supported bases.  Trial division is a perfectly adequate primality
# check at this scale, and the dlog table enumeration stays desk-sized.
MAX_BASE = 10_000

# Sieve memory bound: one byte per candidate.
SIEVE_LIMIT = 1_000_000_000


class Level(enum.Enum):
    """Which modulus the group lives on."""

    MOD_B = "b"
    MOD_B_SQUARED = "b^2"


def is_odd_prime(n: int) -> bool:
    """Deterministic trial-division primality test; rejects 2."""
    if n < 3 or n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


def _is_primitive_root(x: int, q: int, phi: int, phi_factors: tuple[int, ...]) -> bool:
    if math.gcd(x, q) != 1:
        return False
    return all(pow(x, phi // p, q) != 1 for p in phi_factors)


@dataclass(frozen=True, eq=False)
class UnitGroup:
    """Multiplicative group of Z/qZ with a fixed primitive root.

    dlog maps each unit to its exponent: a = g**dlog[a] (mod q).
    Instances are immutable; the derived numpy views are built once on
    first use and marked read-only.
    """

    q: int
    b: int
    phi: int
    g: int
    dlog: dict[int, int]
    units: tuple[int, ...]

    @cached_property
    def unit_array(self) -> np.ndarray:
        arr = np.array(self.units, dtype=np.int64)
        arr.flags.writeable = False
        return arr

    @cached_property
    def dlog_by_unit(self) -> np.ndarray:
        """Exponents aligned with unit_array (units ascending)."""
        arr = np.array([self.dlog[a] for a in self.units], dtype=np.int64)
        arr.flags.writeable = False
        return arr

    @cached_property
    def dlog_by_residue(self) -> np.ndarray:
        """Length-q exponent lookup; -1 marks non-units."""
        arr = np.full(self.q, -1, dtype=np.int64)
        arr[self.unit_array] = self.dlog_by_unit
        arr.flags.writeable = False
        return arr


def _group_with_root(q: int, b: int, phi: int, g: int) -> UnitGroup:
    dlog: dict[int, int] = {}
    x = 1
    for t in range(phi):
        dlog[x] = t
        x = x * g % q
    if x != 1 or len(dlog) != phi:
        raise ValueError(f"{g} is not a primitive root mod {q}")
    return UnitGroup(q=q, b=b, phi=phi, g=g, dlog=dlog, units=tuple(sorted(dlog)))


def build_unit_group(b: int, level: Level = Level.MOD_B_SQUARED) -> UnitGroup:
    """Build the unit group mod b or mod b**2 with the least primitive root."""
    if not isinstance(b, int) or isinstance(b, bool) or not is_odd_prime(b):
        raise NotOddPrime(f"base must be an odd prime, got {b!r}")
    if b > MAX_BASE:
        raise ValueError(f"base {b} exceeds the supported bound {MAX_BASE}")
    if level is Level.MOD_B:
        q, phi = b, b - 1
    else:
        q, phi = b * b, b * (b - 1)
    factors = _prime_factors(phi)
    g = next(x for x in range(2, q) if _is_primitive_root(x, q, phi, factors))
    return _group_with_root(q, b, phi, g)


@dataclass(frozen=True, eq=False)
class PrimeList:
    """Ascending primes up to limit, as an int64 array."""

    limit: int
    primes: np.ndarray

    def __len__(self) -> int:
        return int(self.primes.size)


def sieve_primes(limit: int) -> PrimeList:
    """Sieve of Eratosthenes up to limit inclusive."""
    if limit < 2:
        raise ValueError(f"sieve limit must be at least 2, got {limit}")
    if limit > SIEVE_LIMIT:
        raise LimitTooLarge(f"sieve limit {limit} exceeds bound {SIEVE_LIMIT}")
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    primes = np.flatnonzero(mask).astype(np.int64)
    primes.flags.writeable = False
    return PrimeList(limit=limit, primes=primes)

"""Special values L(1, chi) for odd primitive Dirichlet characters.

Closed form (odd primitive chi mod q):

    L(1, chi) = i * pi * tau(chi) * B1(conj chi) / q,

so with |tau(chi)| = sqrt(q) the magnitudes obey
|B1| = (sqrt(q)/pi) * |L(1, chi)|; on modulus b**2 that reads
|B1| = (b/pi) * |L|.  The independent oracle is the truncated series

    sum_{n <= N} chi(n) / n,

summed over whole periods of chi so that partial summation gives the
tail bound M_chi / N with M_chi the exact one-period maximum of
|sum_{n <= t} chi(n)|.  The series is an oracle only; no identity
verification consumes it.

For a prime b = 3 (mod 4), b > 3, the Legendre character mod b is odd
with fundamental discriminant D = -b and |L(1, chi_D)| = pi*h(D)/sqrt(b)
ties the closed form to the class number h(D).  h is recomputed
independently by counting reduced primitive binary quadratic forms
(a, b', c) of discriminant D: b'^2 - 4ac = D, |b'| <= a <= c, and
b' >= 0 whenever |b'| = a or a = c.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .characters import Character, Family, enumerate_family, gauss_sum
from .errors import BadDiscriminant, PrincipalCharacter
from .spectrum import _require_primitive_odd, bernoulli_b1, verify_decomposition
from .unit_group import Level, build_unit_group, is_odd_prime


class LMethod(enum.Enum):
    CLOSED_FORM = "closed-form"
    SERIES = "series"


@dataclass(frozen=True)
class LValue:
    chi_index: int
    value: complex
    method: LMethod
    series_truncation: int  # 0 for the closed form
    tail_bound: float  # 0.0 for the closed form


def l_value_closed(chi: Character) -> LValue:
    """L(1, chi) = i pi tau(chi) B1(conj chi) / q for odd primitive chi."""
    _require_primitive_odd(chi)
    value = 1j * math.pi * gauss_sum(chi) * bernoulli_b1(chi) / chi.group.q
    return LValue(chi.index, value, LMethod.CLOSED_FORM, 0, 0.0)


@lru_cache(maxsize=8)
def _harmonic_by_residue(q: int, n_eff: int) -> np.ndarray:
    """H[r] = sum of 1/n over n <= n_eff with n = r (mod q)."""
    inv = 1.0 / np.arange(1.0, n_eff + 1.0)
    # Row i holds n = i*q + 1 .. i*q + q, so column c is residue (c+1) mod q.
    cols = inv.reshape(n_eff // q, q).sum(axis=0)
    out = np.empty(q)
    out[(np.arange(q) + 1) % q] = cols
    out.flags.writeable = False
    return out


@lru_cache(maxsize=None)
def max_partial_sum(chi: Character) -> float:
    """M_chi: exact one-period maximum of |sum_{n <= t} chi(n)|."""
    running = np.cumsum(chi.values_by_residue()[1:])  # t = 1 .. q-1; t = 0 gives 0
    return float(np.max(np.abs(running)))


def l_value_series(chi: Character, cutoff: int) -> LValue:
    """Truncated Dirichlet series oracle with a valid tail bound.

    The truncation is rounded up to a whole number of periods, which is
    what makes the partial-summation bound M_chi / N correct (the
    running character sum returns to zero at the truncation point).
    """
    if chi.is_principal:
        raise PrincipalCharacter("the series needs a non-principal character")
    q = chi.group.q
    if cutoff < q * q:
        raise ValueError(f"truncation {cutoff} too short; need at least q^2 = {q * q}")
    n_eff = -(-cutoff // q) * q
    harmonic = _harmonic_by_residue(q, n_eff)
    value = complex(np.dot(chi.values_by_residue(), harmonic))
    return LValue(
        chi.index,
        value,
        LMethod.SERIES,
        series_truncation=n_eff,
        tail_bound=max_partial_sum(chi) / n_eff,
    )


# ====== L-encoding of the spectrum ======


@dataclass(frozen=True)
class EncodingRow:
    chi_index: int
    s_hat_abs: float
    predicted: float  # (b / (pi * phi)) * |L(1, chi)| * |S_G(chi)|
    residual: float


def verify_encoding(b: int) -> list[EncodingRow]:
    """|s0_hat| = (b/(pi*phi)) |L(1,chi)| |S_G(chi)| per primitive odd chi."""
    group = build_unit_group(b, Level.MOD_B_SQUARED)
    rows = []
    for r in verify_decomposition(b):
        if not (r.parity == "odd" and r.primitive):
            continue
        l_val = l_value_closed(Character(group, r.chi_index)).value
        predicted = b / (math.pi * group.phi) * abs(l_val) * abs(r.S_G)
        rows.append(
            EncodingRow(
                chi_index=r.chi_index,
                s_hat_abs=abs(r.s_hat),
                predicted=predicted,
                residual=abs(abs(r.s_hat) - predicted),
            )
        )
    return rows


# ====== class numbers via reduced forms ======


@dataclass(frozen=True)
class ClassNumberRecord:
    b: int
    discriminant: int
    h_from_L: int
    h_from_forms: int
    pre_rounding: float  # sqrt(b) * |L| / pi before the integer snap


def reduced_forms(d: int) -> list[tuple[int, int, int]]:
    """All reduced primitive forms (a, b', c) of discriminant d < 0."""
    if d >= 0 or d % 4 not in (0, 1):
        raise BadDiscriminant(f"{d} is not a negative discriminant")
    out = []
    for a in range(1, math.isqrt(-d // 3) + 1):
        for bb in range(-a, a + 1):
            num = bb * bb - d
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if bb < 0 and (abs(bb) == a or a == c):
                continue
            if math.gcd(math.gcd(a, abs(bb)), c) != 1:
                continue
            out.append((a, bb, c))
    return out


# Rounding guard: the closed form lands this close to an integer or the
# pipeline is broken and we refuse to round silently.
ROUNDING_GUARD = 1e-3


def class_number_check(b: int) -> ClassNumberRecord:
    """h(-b) from the Legendre L-value against the reduced-forms count."""
    if not is_odd_prime(b) or b % 4 != 3 or b <= 3:
        raise BadDiscriminant(f"need a prime b = 3 (mod 4), b > 3; got {b}")
    group = build_unit_group(b, Level.MOD_B)
    legendre = Character(group, (b - 1) // 2)
    l_val = l_value_closed(legendre).value
    raw = math.sqrt(b) * abs(l_val) / math.pi
    h = round(raw)
    if abs(raw - h) > ROUNDING_GUARD:
        raise ArithmeticError(f"class number estimate {raw} too far from an integer")
    return ClassNumberRecord(
        b=b,
        discriminant=-b,
        h_from_L=h,
        h_from_forms=len(reduced_forms(-b)),
        pre_rounding=raw,
    )


def series_family(b: int, cutoff: int) -> list[tuple[LValue, LValue]]:
    """(closed, series) pairs for every primitive odd chi mod b**2."""
    group = build_unit_group(b, Level.MOD_B_SQUARED)
    out = []
    for chi in enumerate_family(group, Family.PRIMITIVE_ODD):
        out.append((l_value_closed(chi), l_value_series(chi, cutoff)))
    return out

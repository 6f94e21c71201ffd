"""Abelian base fields and rational-prime splitting data.

Three field families are supported: the rationals, quadratic fields
Q(sqrt(d)) for squarefree d, and cyclotomic fields Q(zeta_m).  Each is
abelian over Q, so a rational prime p splits into g primes of common
residue degree f and ramification index e with e * f * g equal to the
field degree, and (e, f, g) depends only on p through congruence data.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .arith import euler_phi, is_squarefree, kronecker, multiplicative_order, valuation, factorize

RATIONAL = "rational"
QUADRATIC = "quadratic"
CYCLOTOMIC = "cyclotomic"

_FIELD_RE = re.compile(r"^(Q|quad:(-?\d+)|cyclo:(\d+))$")


@dataclass(frozen=True)
class FieldSpec:
    """Immutable descriptor of one supported base field.

    Attributes:
        variant: one of "rational", "quadratic", "cyclotomic".
        parameter: squarefree d for quadratic, canonical m for cyclotomic,
            None for the rationals.
        degree: field degree over Q.
        discriminant: field discriminant.
        conductor: smallest m with the field inside Q(zeta_m).
    """

    variant: str
    parameter: Optional[int]
    degree: int
    discriminant: int
    conductor: int

    def label(self) -> str:
        """Canonical parseable name: Q, quad:<d>, or cyclo:<m>."""
        if self.variant == RATIONAL:
            return "Q"
        if self.variant == QUADRATIC:
            return f"quad:{self.parameter}"
        return f"cyclo:{self.parameter}"

    def as_dict(self) -> dict:
        return {
            "variant": self.variant,
            "parameter": self.parameter,
            "degree": self.degree,
            "discriminant": self.discriminant,
            "conductor": self.conductor,
        }


@dataclass(frozen=True)
class SplitData:
    """Ramification index e, residue degree f, split count g for one prime."""

    e: int
    f: int
    g: int


def rational_field() -> FieldSpec:
    return FieldSpec(RATIONAL, None, 1, 1, 1)


def quadratic_field(d: int) -> FieldSpec:
    """Q(sqrt(d)) for squarefree d not in {0, 1}."""
    if d in (0, 1):
        raise ValueError(f"quadratic parameter must not be 0 or 1, got {d}")
    if not is_squarefree(d):
        raise ValueError(f"quadratic parameter must be squarefree, got {d}")
    disc = d if d % 4 == 1 else 4 * d
    return FieldSpec(QUADRATIC, d, 2, disc, abs(disc))


def cyclotomic_field(m: int) -> FieldSpec:
    """Q(zeta_m) with m canonicalized: m = 2m' for odd m' names Q(zeta_m').

    Degenerate m in {1, 2} gives the rationals.
    """
    if m < 1:
        raise ValueError(f"cyclotomic parameter must be >= 1, got {m}")
    if m % 4 == 2:
        m //= 2
    if m <= 2:
        return rational_field()
    deg = euler_phi(m)
    # |disc| = m^deg / prod_{p | m} p^(deg / (p-1)); sign is (-1)^(deg/2)
    disc = m**deg
    for p in factorize(m):
        disc //= p ** (deg // (p - 1))
    sign = -1 if (deg // 2) % 2 == 1 else 1
    return FieldSpec(CYCLOTOMIC, m, deg, sign * disc, m)


def parse_field(text: str) -> FieldSpec:
    """Parse a field name: `Q`, `quad:<d>`, or `cyclo:<m>`."""
    match = _FIELD_RE.match(text)
    if match is None:
        raise ValueError(f"malformed field name: {text!r}")
    if match.group(1) == "Q":
        return rational_field()
    if match.group(2) is not None:
        return quadratic_field(int(match.group(2)))
    return cyclotomic_field(int(match.group(3)))


def split_type(field: FieldSpec, p: int) -> SplitData:
    """Splitting data (e, f, g) of the rational prime p in the field.

    For quadratic fields this is read off the Kronecker symbol of the
    discriminant; for Q(zeta_m) with m = p^a * m', the residue degree is
    the order of p modulo m' and e = phi(p^a).
    """
    if p < 2:
        raise ValueError(f"p must be a prime >= 2, got {p}")
    if field.variant == RATIONAL:
        return SplitData(1, 1, 1)
    if field.variant == QUADRATIC:
        if field.discriminant % p == 0:
            return SplitData(2, 1, 1)
        if kronecker(field.discriminant, p) == 1:
            return SplitData(1, 1, 2)
        return SplitData(1, 2, 1)
    m = field.parameter
    a = valuation(m, p) if m % p == 0 else 0
    m_prime = m // p**a
    e = euler_phi(p**a)
    f = multiplicative_order(p, m_prime) if m_prime > 1 else 1
    g = euler_phi(m_prime) // f
    return SplitData(e, f, g)

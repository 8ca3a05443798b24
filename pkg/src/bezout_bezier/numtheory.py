"""Exact integer arithmetic on coprime pairs.

Normalized Bezout coefficients, the flip and extension identities that
relate a pair to its mirror image, and enumeration of coprime lattice
pairs inside a Euclidean disk.  All identities here are exact; nothing
is allowed to round.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._backend import kernels
from .errors import DomainError

# Inputs are capped so products such as a*q stay well inside signed
# 64-bit range in the compiled kernels.
INT_RANGE = 2**31


def _check_magnitude(name: str, value: int) -> None:
    if value > INT_RANGE:
        raise DomainError(f"{name} = {value} exceeds the supported range 2**31")


@dataclass(frozen=True, slots=True)
class CoprimePair:
    """A validated pair of positive coprime integers (r, s)."""

    r: int
    s: int

    def __post_init__(self):
        if self.r < 1 or self.s < 1:
            raise DomainError(
                f"coprime pair entries must be positive integers "
                f"(got ({self.r}, {self.s}))"
            )
        _check_magnitude("r", self.r)
        _check_magnitude("s", self.s)
        g = math.gcd(self.r, self.s)
        if g != 1:
            raise DomainError(f"({self.r}, {self.s}) is not coprime: gcd = {g}")

    def as_tuple(self) -> tuple[int, int]:
        return (self.r, self.s)

    def flipped(self) -> "CoprimePair":
        return CoprimePair(self.s, self.r)


@dataclass(frozen=True, slots=True)
class BezoutCoeffs:
    """Normalized Bezout coefficients (a, b) of a coprime pair (p, q).

    Satisfies a*q - b*p = 1 with 0 < a <= p and 0 <= b < q; those box
    constraints make the solution unique.
    """

    a: int
    b: int
    pair: CoprimePair

    def __post_init__(self):
        p, q = self.pair.r, self.pair.s
        if self.a * q - self.b * p != 1:
            raise DomainError(
                f"({self.a}, {self.b}) does not satisfy the identity for "
                f"({p}, {q}): {self.a}*{q} - {self.b}*{p} != 1"
            )
        if not (0 < self.a <= p and 0 <= self.b < q):
            raise DomainError(
                f"({self.a}, {self.b}) lies outside the normalization box "
                f"0 < a <= {p}, 0 <= b < {q}"
            )

    def as_tuple(self) -> tuple[int, int]:
        return (self.a, self.b)


@dataclass(frozen=True, slots=True)
class Center:
    """Enumeration center (p, q).  Coprimality is not required."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1:
            raise DomainError(f"center needs p >= 1 (got p = {self.p})")
        if self.q < 0:
            raise DomainError(f"center needs q >= 0 (got q = {self.q})")
        _check_magnitude("p", self.p)
        _check_magnitude("q", self.q)


def gcd(x: int, y: int) -> int:
    """Greatest common divisor of two nonnegative integers, not both zero."""
    if x < 0 or y < 0:
        raise DomainError(f"gcd expects nonnegative integers (got {x}, {y})")
    if x == 0 and y == 0:
        raise DomainError("gcd(0, 0) is undefined")
    return math.gcd(x, y)


def bezout_coefficients(pair: CoprimePair) -> BezoutCoeffs:
    """The unique (a, b) with a*s - b*r = 1, 0 < a <= r, 0 <= b < s."""
    a, b = kernels.bezout_normalized(pair.r, pair.s)
    return BezoutCoeffs(a, b, pair)


def flip_bezout(coeffs: BezoutCoeffs) -> BezoutCoeffs:
    """Coefficients of the flipped pair, via B(q,p) = (q-b, p-a).

    No second Euclid run: the identity transfers the solution directly.
    """
    p, q = coeffs.pair.r, coeffs.pair.s
    return BezoutCoeffs(q - coeffs.b, p - coeffs.a, CoprimePair(q, p))


def extend_pair(coeffs: BezoutCoeffs) -> CoprimePair:
    """The coprime pair (b+q, a+p), whose coefficients are exactly (q, p)."""
    p, q = coeffs.pair.r, coeffs.pair.s
    r, s = coeffs.b + q, coeffs.a + p
    if r > INT_RANGE or s > INT_RANGE:
        raise OverflowError(
            f"extended pair ({r}, {s}) exceeds the supported range 2**31"
        )
    return CoprimePair(r, s)


def coprime_neighbors(center: Center, radius: float) -> list[CoprimePair]:
    """All coprime pairs (r, s), r, s >= 1, within `radius` of the center.

    Sorted lexicographically by (r, s).  The center itself is included
    when it qualifies.  An empty list is a valid result.
    """
    radius = float(radius)
    if math.isnan(radius):
        raise DomainError("radius must be a number")
    if radius < 0:
        raise DomainError(f"radius must be nonnegative (got {radius})")
    if center.p + radius > INT_RANGE or center.q + radius > INT_RANGE:
        raise DomainError("neighborhood extends beyond the supported range 2**31")
    pairs = kernels.coprime_pairs_in_disk(center.p, center.q, radius)
    return [CoprimePair(r, s) for r, s in pairs]

"""Exact mass-formula certificates for self-dual code classifications.

All arithmetic is on Python integers and ``fractions.Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

from .errors import NonDivisible


def sigma_product(m: int) -> int:
    """prod_{i=1}^{m} (2^i + 1); the empty product is 1."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    out = 1
    for i in range(1, m + 1):
        out *= (1 << i) + 1
    return out


@dataclass(frozen=True)
class MassPolynomial:
    coefficients: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, w: int) -> int:
        return self.coefficients[w]


def thompson_rhs(n: int) -> MassPolynomial:
    """Sum of the weight enumerators of all self-dual codes of length n."""
    if n < 2 or n % 2:
        raise ValueError("n must be even and at least 2")
    h = n // 2
    coeffs = [0] * (n + 1)
    coeffs[0] = coeffs[n] = sigma_product(h - 1)
    if h >= 2:
        inner = sigma_product(h - 2)
        for j in range(1, h):
            coeffs[2 * j] = comb(n, 2 * j) * inner
    return MassPolynomial(tuple(coeffs))


def _orbit_size(n: int, aut_order: int) -> int:
    q, r = divmod(factorial(n), aut_order)
    if r:
        raise NonDivisible(f"automorphism group order {aut_order} does not divide {n}!")
    return q


@dataclass(frozen=True)
class Certificate:
    kind: str
    n: int
    d: int | None
    lhs: int
    rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def __bool__(self) -> bool:
        return self.ok

    def render(self) -> str:
        d = "any" if self.d is None else str(self.d)
        return f"cert {self.kind} n={self.n} d={d} lhs={self.lhs} rhs={self.rhs} ok={int(self.ok)}"


def completeness_check(family: Iterable[tuple[int, Sequence[int]]], n: int, d: int) -> Certificate:
    """Weight-d coefficient test over classes of minimum weight at most d.

    ``family`` yields (automorphism group order, weight distribution) per class.
    """
    lhs = 0
    for aut, dist in family:
        lhs += _orbit_size(n, aut) * dist[d]
    return Certificate("weight", n, d, lhs, thompson_rhs(n)[d])


def total_mass_check(family: Iterable[int], n: int) -> Certificate:
    lhs = sum(_orbit_size(n, aut) for aut in family)
    return Certificate("mass", n, None, lhs, sigma_product(n // 2 - 1))


def enumerator_sum(family: Iterable[tuple[int, Sequence[int]]], n: int) -> MassPolynomial:
    acc = [0] * (n + 1)
    for aut, dist in family:
        m = _orbit_size(n, aut)
        for w in range(n + 1):
            acc[w] += m * dist[w]
    return MassPolynomial(tuple(acc))


def thompson_check(family: Iterable[tuple[int, Sequence[int]]], n: int) -> bool:
    """Full polynomial identity, coefficient by coefficient."""
    return enumerator_sum(family, n) == thompson_rhs(n)


def lower_bound_next_length(n: int) -> tuple[Fraction, int]:
    """Mass divided by n!: a lower bound on the number of classes, and its ceiling."""
    if n < 2 or n % 2:
        raise ValueError("n must be even and at least 2")
    frac = Fraction(sigma_product(n // 2 - 1), factorial(n))
    ceiling = -((-frac.numerator) // frac.denominator)
    return frac, ceiling


def render_decimal(frac: Fraction, places: int = 3) -> str:
    """Decimal expansion truncated (not rounded) to ``places`` digits."""
    scaled = frac.numerator * 10**places // frac.denominator
    whole, part = divmod(scaled, 10**places)
    return f"{whole}.{part:0{places}d}"

"""Code-level predicates and analytics."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from . import kernels
from .errors import DoublyEvenInput, InconsistentEnumerator, LengthMismatch, TooLarge
from .gf2 import GenMatrix, dot, dual_basis, in_span, rref, word_from_string

ENUMERATION_BUDGET = 28
SYNDROME_BUDGET = 22


class Parity(enum.Enum):
    DOUBLY_EVEN = "doubly-even"
    SINGLY_EVEN = "singly-even"


class Code:
    """A binary linear code given by a generator matrix."""

    def __init__(self, gen: GenMatrix):
        self.gen = gen

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "Code":
        return cls(GenMatrix.from_strings(lines))

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[int]) -> "Code":
        return cls(GenMatrix(n, tuple(rows)))

    @property
    def n(self) -> int:
        return self.gen.n

    @property
    def k(self) -> int:
        return self.gen.k

    @property
    def rows(self) -> tuple[int, ...]:
        return self.gen.rows

    @cached_property
    def weight_dist(self) -> list[int]:
        return weight_distribution(self)

    @cached_property
    def min_weight(self) -> int:
        return min_weight(self)

    def contains(self, word: int) -> bool:
        return in_span(self.rows, self.n, word)

    def permuted(self, images: Sequence[int]) -> "Code":
        """Move coordinate i to position images[i] (0-based)."""
        return Code(GenMatrix(self.n, tuple(permute_word(r, images) for r in self.rows)))

    def __repr__(self) -> str:
        return f"Code(n={self.n}, k={self.k})"


def permute_word(x: int, images: Sequence[int]) -> int:
    y = 0
    i = 0
    while x:
        if x & 1:
            y |= 1 << images[i]
        x >>= 1
        i += 1
    return y


def direct_sum(a: Code, b: Code) -> Code:
    rows = list(a.rows) + [r << a.n for r in b.rows]
    return Code(GenMatrix(a.n + b.n, tuple(rows)))


def i2() -> Code:
    return Code.from_strings(["11"])


def extended_hamming() -> Code:
    return Code.from_strings(["11110000", "00111100", "00001111", "10101010"])


def is_self_orthogonal(c: Code) -> bool:
    rows = c.rows
    return all(dot(rows[i], rows[j]) == 0 for i in range(len(rows)) for j in range(i, len(rows)))


def is_self_dual(c: Code) -> bool:
    return 2 * c.k == c.n and c.gen.rank == c.k and is_self_orthogonal(c)


def classify_parity(c: Code) -> Parity:
    """Doubly even iff every row weight is 0 mod 4 (rows are pairwise even-meeting)."""
    if all(r.bit_count() % 4 == 0 for r in c.rows):
        return Parity.DOUBLY_EVEN
    return Parity.SINGLY_EVEN


def weight_distribution(c: Code) -> list[int]:
    if c.k > ENUMERATION_BUDGET:
        raise TooLarge(f"k = {c.k} exceeds enumeration budget 2^{ENUMERATION_BUDGET}")
    return kernels.weight_distribution(list(c.rows), c.n)


def min_weight(c: Code) -> int:
    dist = c.weight_dist
    for w in range(1, c.n + 1):
        if dist[w]:
            return w
    return 0


# Coefficients of y^0, y^2, ..., y^18 for length-36 self-dual codes, each as
# (constant, alpha, beta, gamma, delta); the rest follows from A_w = A_{36-w}.
WE36_TABLE = (
    (1, 0, 0, 0, 0),
    (0, 1, 0, 0, 0),
    (0, 12, 1, 0, 0),
    (0, 64, 6, 1, 0),
    (33, 196, 11, 0, 64),
    (3168, 364, -4, -6, -384),
    (7059, 364, -39, 0, 832),
    (30336, 0, -38, 15, -512),
    (58443, -572, 27, 0, -896),
    (64064, -858, 72, -20, 1792),
)


@dataclass(frozen=True)
class WE36Params:
    alpha: int
    beta: int
    gamma: int
    delta: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def weight_dist(self) -> list[int]:
        """Full length-36 weight distribution these parameters determine."""
        dist = [0] * 37
        p = (1,) + self.as_tuple()
        for j, coeffs in enumerate(WE36_TABLE):
            value = sum(a * b for a, b in zip(coeffs, p))
            dist[2 * j] = value
            dist[36 - 2 * j] = value
        return dist


def we36_params(c: Code) -> WE36Params:
    if c.n != 36:
        raise LengthMismatch(f"expected length 36, got {c.n}")
    a = c.weight_dist
    alpha = a[2]
    beta = a[4] - 12 * alpha
    gamma = a[6] - 64 * alpha - 6 * beta
    num = a[8] - 33 - 196 * alpha - 11 * beta
    if num % 64:
        raise InconsistentEnumerator(f"A_8 gives non-integral delta ({num}/64)")
    params = WE36Params(alpha, beta, gamma, num // 64)
    expected = params.weight_dist()
    if expected != list(a):
        bad = [w for w in range(37) if expected[w] != a[w]]
        raise InconsistentEnumerator(f"weight distribution disagrees at weights {bad}")
    return params


@dataclass(frozen=True)
class ShadowInfo:
    min_weight: int
    weight_dist: list[int]

    @property
    def size(self) -> int:
        return sum(self.weight_dist)


def doubly_even_subcode(c: Code) -> GenMatrix:
    """Basis of the codewords of weight 0 mod 4 (codimension 1 when singly even)."""
    rows = list(c.rows)
    odd = [r for r in rows if r.bit_count() % 4 == 2]
    if not odd:
        return c.gen
    pivot = odd[0]
    out = [r ^ pivot if r.bit_count() % 4 == 2 else r for r in rows if r != pivot]
    return GenMatrix(c.n, tuple(out))


def shadow(c: Code) -> ShadowInfo:
    if classify_parity(c) is Parity.DOUBLY_EVEN:
        raise DoublyEvenInput("a doubly even code has no shadow")
    c0 = doubly_even_subcode(c)
    # C_0^perp = C + <y> for any y in C_0^perp outside C
    y = next(r for r in dual_basis(c0).rows if not c.contains(r))
    dist = kernels.weight_distribution(list(c.rows), c.n, y)
    s = next(w for w in range(c.n + 1) if dist[w])
    return ShadowInfo(s, dist)


def syndrome_columns(c: Code) -> tuple[list[int], int]:
    """Per-coordinate syndromes under a parity-check basis, and its size n - k."""
    h = dual_basis(c.gen).rows
    cols = []
    for j in range(c.n):
        s = 0
        for i, row in enumerate(h):
            if (row >> j) & 1:
                s |= 1 << i
        cols.append(s)
    return cols, len(h)


def covering_radius(c: Code) -> int:
    cols, r = syndrome_columns(c)
    if r > SYNDROME_BUDGET:
        raise TooLarge(f"n - k = {r} exceeds syndrome budget 2^{SYNDROME_BUDGET}")
    if r == 0:
        return 0
    return kernels.covering_radius(cols, r)


def canonical_rows(c: Code) -> tuple[int, ...]:
    return rref(c.gen)[0].rows


def code_from_identity_and(m_rows: Sequence[str]) -> Code:
    """Generator matrix (I_k | M) from the rows of M."""
    k = len(m_rows)
    rows = []
    for i, s in enumerate(m_rows):
        rows.append((1 << i) | (word_from_string(s) << k))
    return Code(GenMatrix(k + len("".join(m_rows[0].split())), tuple(rows)))

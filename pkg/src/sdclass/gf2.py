"""Bit-packed linear algebra over GF(2).

A vector of length n <= 64 is one Python int; coordinate 1 is the least
significant bit.  All external I/O uses 1-based coordinates and strings
with coordinate 1 first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import kernels
from .errors import RankDeficient

MAX_LENGTH = 64


def parity(x: int) -> int:
    return x.bit_count() & 1


def dot(x: int, y: int) -> int:
    """Standard inner product of two packed words."""
    return (x & y).bit_count() & 1


def word_from_string(s: str) -> int:
    s = "".join(s.split())
    if any(ch not in "01" for ch in s):
        raise ValueError(f"not a binary string: {s!r}")
    x = 0
    for i, ch in enumerate(s):
        if ch == "1":
            x |= 1 << i
    return x


def word_to_string(x: int, n: int) -> str:
    return "".join("1" if (x >> i) & 1 else "0" for i in range(n))


def support(x: int) -> list[int]:
    """0-based positions of the set bits, ascending."""
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


@dataclass(frozen=True)
class BitVector:
    length: int
    bits: int

    def __post_init__(self):
        if not 1 <= self.length <= MAX_LENGTH:
            raise ValueError(f"length must be in 1..{MAX_LENGTH}, got {self.length}")
        if self.bits >> self.length:
            raise ValueError("bits set beyond the vector length")

    @classmethod
    def from_string(cls, s: str) -> "BitVector":
        s = "".join(s.split())
        return cls(len(s), word_from_string(s))

    @classmethod
    def from_coords(cls, length: int, coords: Iterable[int]) -> "BitVector":
        """Vector with ones at the given 1-based coordinates."""
        x = 0
        for c in coords:
            x |= 1 << (c - 1)
        return cls(length, x)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def __getitem__(self, coord: int) -> int:
        """Entry at 1-based coordinate."""
        if not 1 <= coord <= self.length:
            raise IndexError(coord)
        return (self.bits >> (coord - 1)) & 1

    def dot(self, other: "BitVector") -> int:
        return dot(self.bits, other.bits)

    def __xor__(self, other: "BitVector") -> "BitVector":
        if other.length != self.length:
            raise ValueError("length mismatch")
        return BitVector(self.length, self.bits ^ other.bits)

    def __str__(self) -> str:
        return word_to_string(self.bits, self.length)


@dataclass(frozen=True)
class GenMatrix:
    """k rows of length n.  The row space is the code."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_LENGTH:
            raise ValueError(f"length must be at most {MAX_LENGTH}")
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        limit = 1 << self.n
        for r in self.rows:
            if r < 0 or r >= limit:
                raise ValueError("row has bits beyond the matrix width")

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "GenMatrix":
        lines = ["".join(s.split()) for s in lines]
        lines = [s for s in lines if s]
        if not lines:
            raise ValueError("no rows")
        n = len(lines[0])
        if any(len(s) != n for s in lines):
            raise ValueError("rows of unequal length")
        return cls(n, tuple(word_from_string(s) for s in lines))

    @classmethod
    def from_vectors(cls, vectors: Sequence[BitVector]) -> "GenMatrix":
        n = vectors[0].length
        if any(v.length != n for v in vectors):
            raise ValueError("rows of unequal length")
        return cls(n, tuple(v.bits for v in vectors))

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(kernels.rref_words(list(self.rows), self.n)[0])

    def vectors(self) -> list[BitVector]:
        return [BitVector(self.n, r) for r in self.rows]

    def to_strings(self) -> list[str]:
        return [word_to_string(r, self.n) for r in self.rows]

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


def rref(m: GenMatrix) -> tuple[GenMatrix, list[int]]:
    """Reduced row-echelon form and its 1-based pivot columns."""
    rows, piv = kernels.rref_words(list(m.rows), m.n)
    return GenMatrix(m.n, tuple(rows)), [p + 1 for p in piv]


def dual_basis(m: GenMatrix) -> GenMatrix:
    """Basis of the orthogonal complement of the row space."""
    n = m.n
    rows, piv = kernels.rref_words(list(m.rows), n)
    pivset = set(piv)
    out = []
    for f in range(n):
        if f in pivset:
            continue
        v = 1 << f
        for r, p in zip(rows, piv):
            if (r >> f) & 1:
                v |= 1 << p
        out.append(v)
    return GenMatrix(n, tuple(out))


def right_inverse(m: GenMatrix) -> list[int]:
    """n x k matrix R, as n row words of k bits, with m . R = I_k."""
    k, n = m.k, m.n
    # track row operations: rref(m) = T . m
    aug = [r | (1 << (n + i)) for i, r in enumerate(m.rows)]
    red, piv = _rref_prefix(aug, n)
    if len(piv) < k:
        raise RankDeficient(f"rank {len(piv)} < {k}")
    # R has row p_i equal to column i of T, all other rows zero
    out = [0] * n
    for i, (r, p) in enumerate(zip(red, piv)):
        t = r >> n
        out[p] = t
    # out[p_i] = row i of T; m . R = sum_i col(m, p_i) (x) T[i] = T^{-1} T
    return out


def _rref_prefix(rows: list[int], width: int) -> tuple[list[int], list[int]]:
    """rref pivoting only on the low ``width`` bits."""
    work = list(rows)
    out: list[int] = []
    pivots: list[int] = []
    for col in range(width):
        bit = 1 << col
        idx = next((t for t, r in enumerate(work) if r & bit), None)
        if idx is None:
            continue
        p = work.pop(idx)
        work = [r ^ p if r & bit else r for r in work]
        out = [r ^ p if r & bit else r for r in out]
        out.append(p)
        pivots.append(col)
    return out, pivots


def mat_mul_rows(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Product of matrices given as row words: row i of a.b = XOR of b[j] over set bits j of a[i]."""
    out = []
    for r in a:
        acc = 0
        for j in support(r):
            acc ^= b[j]
        out.append(acc)
    return out


def solve_membership(m: GenMatrix, v: BitVector) -> Optional[BitVector]:
    """Coefficients c with c . m = v, or None when v is outside the row space."""
    if v.length != m.n:
        raise ValueError("length mismatch")
    n, k = m.n, m.k
    aug = [r | (1 << (n + i)) for i, r in enumerate(m.rows)]
    red, piv = _rref_prefix(aug, n)
    x = v.bits
    coeff = 0
    for r, p in zip(red, piv):
        if (x >> p) & 1:
            x ^= r & ((1 << n) - 1)
            coeff ^= r >> n
    if x:
        return None
    if k == 0:
        return None if v.bits else BitVector(1, 0)
    return BitVector(k, coeff)


def in_span(rows: Sequence[int], n: int, x: int) -> bool:
    red, piv = kernels.rref_words(list(rows), n)
    for r, p in zip(red, piv):
        if (x >> p) & 1:
            x ^= r
    return x == 0


def same_row_space(a: GenMatrix, b: GenMatrix) -> bool:
    return a.n == b.n and rref(a)[0].rows == rref(b)[0].rows

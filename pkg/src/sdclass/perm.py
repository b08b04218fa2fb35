"""Coordinate permutations and permutation-group orders."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Perm:
    """Permutation of coordinates, stored 0-based: coordinate i moves to images[i].

    Products read left to right: ``(p * q)`` applies p first, matching the
    row-vector convention ``x P Q``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("images do not form a permutation")

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        """Build from cycles written with 1-based coordinates."""
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b - 1
        return cls(tuple(img))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Perm") -> "Perm":
        o = other.images
        return Perm(tuple(o[x] for x in self.images))

    def inverse(self) -> "Perm":
        inv = [0] * self.n
        for i, x in enumerate(self.images):
            inv[x] = i
        return Perm(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def apply(self, word: int) -> int:
        y = 0
        i = 0
        img = self.images
        while word:
            if word & 1:
                y |= 1 << img[i]
            word >>= 1
            i += 1
        return y

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 1-based."""
        seen = set()
        out = []
        for i in range(self.n):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(c + 1 for c in cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)


def _mul(a: tuple, b: tuple) -> tuple:
    return tuple(b[x] for x in a)


def _inv(a: tuple) -> tuple:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


class _Level:
    __slots__ = ("base", "gens", "trans")

    def __init__(self, base: int, n: int):
        self.base = base
        self.gens: list[tuple] = []
        self.trans: dict[int, tuple] = {base: tuple(range(n))}


class StabilizerChain:
    """Deterministic Schreier-Sims over tuples of images."""

    def __init__(self, n: int, gens: Iterable[Perm] = ()):
        self.n = n
        self.levels: list[_Level] = []
        for g in gens:
            self.add(g.images)

    def sift(self, g: tuple, start: int = 0) -> tuple[tuple, int]:
        for i in range(start, len(self.levels)):
            lv = self.levels[i]
            x = g[lv.base]
            u = lv.trans.get(x)
            if u is None:
                return g, i
            g = _mul(g, _inv(u))
        return g, len(self.levels)

    def add(self, g: tuple, level: int = 0) -> None:
        h, j = self.sift(tuple(g), level)
        if all(i == x for i, x in enumerate(h)):
            return
        if j == len(self.levels):
            moved = next(i for i, x in enumerate(h) if i != x)
            self.levels.append(_Level(moved, self.n))
        for m in range(level, j + 1):
            self.levels[m].gens.append(h)
        for m in range(j, level - 1, -1):
            self._close(m)

    def _close(self, m: int) -> None:
        lv = self.levels[m]
        trans = {lv.base: tuple(range(self.n))}
        queue = [lv.base]
        for p in queue:
            for s in lv.gens:
                q = s[p]
                if q not in trans:
                    trans[q] = _mul(trans[p], s)
                    queue.append(q)
        lv.trans = trans
        for p in queue:
            for s in list(lv.gens):
                sch = _mul(_mul(trans[p], s), _inv(trans[s[p]]))
                self.add(sch, m + 1)

    def order(self) -> int:
        out = 1
        for lv in self.levels:
            out *= len(lv.trans)
        return out

    def contains(self, g: Perm) -> bool:
        h, j = self.sift(g.images)
        return j == len(self.levels) and all(i == x for i, x in enumerate(h))


def group_order(gens: Sequence[Perm], n: int) -> int:
    return StabilizerChain(n, gens).order()


def point_orbits(gens: Sequence[Perm], n: int) -> list[int]:
    """Union-find labels: entry i is the smallest point in the orbit of i."""
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for g in gens:
        for i, x in enumerate(g.images):
            a, b = find(i), find(x)
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(i) for i in range(n)]

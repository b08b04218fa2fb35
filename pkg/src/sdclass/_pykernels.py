"""Pure-Python (plus numpy) implementations of the hot kernels.

Every function here has a twin in ``_kernels.pyx`` with identical results,
bit for bit, including the refinement hashes.  The compiled module is
preferred at import time; see :mod:`sdclass.kernels`.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3


def mix(h: int, x: int) -> int:
    return ((h ^ (x & MASK64)) * FNV_PRIME) & MASK64


def scramble(x: int) -> int:
    """splitmix64 finaliser."""
    z = (x + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def _span(rows, offset: int = 0) -> np.ndarray:
    words = np.array([offset], dtype=np.uint64)
    for r in rows:
        words = np.concatenate([words, words ^ np.uint64(r)])
    return words


def weight_distribution(rows, n: int, offset: int = 0) -> list[int]:
    """Weight counts of the coset ``offset + span(rows)``."""
    w = np.bitwise_count(_span(rows, offset))
    return np.bincount(w, minlength=n + 1).astype(np.int64).tolist()


def collect_words(rows, n: int, wmin: int, wmax: int) -> list[int]:
    """All words of span(rows) whose weight lies in [wmin, wmax], ascending."""
    words = _span(rows)
    w = np.bitwise_count(words)
    sel = words[(w >= wmin) & (w <= wmax)]
    return sorted(int(x) for x in sel)


def covering_radius(cols, r: int) -> int:
    """Largest BFS depth over syndrome space F_2^r.

    ``cols[j]`` is the syndrome of the unit vector at coordinate j.
    """
    size = 1 << r
    seen = np.zeros(size, dtype=bool)
    seen[0] = True
    frontier = np.array([0], dtype=np.uint64)
    steps = np.array(sorted(set(int(c) for c in cols if c)), dtype=np.uint64)
    depth = 0
    visited = 1
    while visited < size:
        nxt = (frontier[:, None] ^ steps[None, :]).ravel()
        nxt = np.unique(nxt)
        nxt = nxt[~seen[nxt]]
        if nxt.size == 0:
            raise ValueError("syndrome columns do not span F_2^r")
        seen[nxt] = True
        visited += nxt.size
        frontier = nxt
        depth += 1
    return depth


def _columns(mat, k: int) -> list[int]:
    cols = [0] * k
    for i, row in enumerate(mat):
        for j in range(k):
            if (row >> j) & 1:
                cols[j] |= 1 << i
    return cols


def orbits(mats, k: int) -> tuple[list[int], list[int]]:
    """Orbits of the group generated by ``mats`` acting on column vectors.

    Each matrix is a list of k row words.  Returns (representatives, sizes)
    with each representative the numerically smallest member, ascending.
    """
    size = 1 << k
    parent = list(range(size))

    def find(v):
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    for mat in mats:
        cols = _columns(mat, k)
        for v in range(size):
            w = 0
            x = v
            j = 0
            while x:
                if x & 1:
                    w ^= cols[j]
                x >>= 1
                j += 1
            a, b = find(v), find(w)
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    counts: dict[int, int] = {}
    for v in range(size):
        r = find(v)
        counts[r] = counts.get(r, 0) + 1
    reps = sorted(counts)
    return reps, [counts[r] for r in reps]


def refine(words, n: int, cells) -> tuple[list[list[int]], int]:
    """Equitable-style refinement of an ordered coordinate partition.

    Coordinates are split by a multiset hash of the classes of words (from
    ``words``) that contain them; word classes are hashes of their
    intersection counts with the current cells.  Repeats until stable.
    Returns the refined cells and a label-invariant trace hash.
    """
    cells = [sorted(c) for c in cells]
    h = FNV_OFFSET
    while True:
        masks = []
        for c in cells:
            m = 0
            for i in c:
                m |= 1 << i
            masks.append(m)
        ckey = [0] * n
        wsum = 0
        for w in words:
            key = FNV_OFFSET
            for m in masks:
                key = mix(key, (w & m).bit_count())
            g = scramble(key)
            wsum = (wsum + g) & MASK64
            x = w
            while x:
                low = x & -x
                i = low.bit_length() - 1
                ckey[i] = (ckey[i] + g) & MASK64
                x ^= low
        h = mix(h, wsum)
        new_cells = []
        changed = False
        for ci, cell in enumerate(cells):
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            ordered = sorted(cell, key=lambda i: (ckey[i], i))
            groups = [[ordered[0]]]
            for i in ordered[1:]:
                if ckey[i] == ckey[groups[-1][0]]:
                    groups[-1].append(i)
                else:
                    groups.append([i])
            if len(groups) > 1:
                changed = True
                h = mix(h, ci)
                h = mix(h, len(groups))
                for g in groups:
                    h = mix(h, ckey[g[0]])
                    h = mix(h, len(g))
            new_cells.extend(groups)
        cells = new_cells
        if not changed:
            return cells, h


def rref_words(rows, n: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form, pivot = lowest set bit, rows by pivot."""
    work = [r for r in rows if r]
    out: list[int] = []
    pivots: list[int] = []
    for col in range(n):
        bit = 1 << col
        idx = None
        for t, r in enumerate(work):
            if r & bit:
                idx = t
                break
        if idx is None:
            continue
        p = work.pop(idx)
        work = [r ^ p if r & bit else r for r in work]
        out = [r ^ p if r & bit else r for r in out]
        out.append(p)
        pivots.append(col)
        work = [r for r in work if r]
        if not work:
            break
    return out, pivots


def permuted_rref(rows, lab) -> tuple[int, ...]:
    """rref of the code with column j taken from coordinate ``lab[j]``."""
    n = len(lab)
    moved = []
    for r in rows:
        y = 0
        for j in range(n):
            if (r >> lab[j]) & 1:
                y |= 1 << j
        moved.append(y)
    return tuple(rref_words(moved, n)[0])

"""Canonical forms, automorphism groups and extension-vector orbits.

The canonical form of a code is found by an individualization-refinement
search over orderings of the coordinates.  The partition at each node is
refined against a fixed, permutation-invariant set of low-weight codewords
that spans the code.  Every leaf is a total ordering of the coordinates;
its certificate is the refinement trace of its path followed by the rref
of the correspondingly reordered generator matrix.  The canonical matrix is
the rref of the smallest certificate.  Two leaves with equal rref differ by
an automorphism; these are collected and used to prune the tree, and the
group order is read off the first path as a product of orbit lengths.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import kernels
from .codeops import Code
from .errors import SearchBudgetExceeded, VerificationFailed
from .gf2 import BitVector, GenMatrix, mat_mul_rows, right_inverse
from .perm import Perm, point_orbits

DEFAULT_NODE_BUDGET = 10**8


@dataclass(frozen=True)
class CanonicalRecord:
    canon: GenMatrix
    aut_order: int
    aut_gens: tuple[Perm, ...]
    labeling: tuple[int, ...] = ()
    origin: str = ""
    weight_dist: tuple[int, ...] = ()

    @property
    def n(self) -> int:
        return self.canon.n

    @property
    def code(self) -> Code:
        return Code(self.canon)

    @property
    def min_weight(self) -> int:
        return next((w for w in range(1, len(self.weight_dist)) if self.weight_dist[w]), 0)

    @property
    def key(self) -> tuple[int, ...]:
        return self.canon.rows


def invariant_words(c: Code) -> list[int]:
    """Codewords of the smallest weights, enough of them to span the code.

    At least the two smallest nonzero weights are taken; further weights
    are added in increasing order until the words span ``c``.
    """
    dist = c.weight_dist
    weights = [w for w in range(1, c.n + 1) if dist[w]]
    if not weights:
        return []
    t = min(1, len(weights) - 1)
    while True:
        words = kernels.collect_words(list(c.rows), c.n, 1, weights[t])
        if len(kernels.rref_words(words, c.n)[0]) == c.k or t == len(weights) - 1:
            return words
        t += 1


class _Search:
    def __init__(self, rows: Sequence[int], n: int, words: list[int], budget: int):
        self.rows = list(rows)
        self.n = n
        self.words = words
        self.budget = budget
        self.nodes = 0
        self.gens: list[Perm] = []
        self.first_lab: Optional[list[int]] = None
        self.first_cert = None
        self.first_traces: list[int] = []
        self.first_path: list[int] = []
        self.first_targets: list[list[int]] = []
        self.best_lab: Optional[list[int]] = None
        self.best_cert = None
        self.best_traces: list[int] = []

    def run(self) -> None:
        cells, h = kernels.refine(self.words, self.n, [list(range(self.n))])
        self._dfs(cells, 0, [h], [], True)

    def _target(self, cells):
        best = None
        for idx, c in enumerate(cells):
            if len(c) > 1 and (best is None or len(c) < len(cells[best])):
                best = idx
        return best

    def _orbit_labels(self, prefix):
        fixing = [g for g in self.gens if all(g.images[p] == p for p in prefix)]
        return point_orbits(fixing, self.n), len(self.gens)

    def _dfs(self, cells, level, traces, prefix, eqf):
        """Returns None, or the level of a first-path node to resume at."""
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceeded(f"node budget {self.budget} exhausted")
        t = self._target(cells)
        if t is None:
            return self._leaf([c[0] for c in cells], traces, prefix, eqf)
        target = cells[t]
        if self.first_lab is None:
            self.first_targets.append(list(target))
        labels, seen = None, -1
        for v in target:
            if self.gens:
                if seen != len(self.gens):
                    labels, seen = self._orbit_labels(prefix)
                if labels[v] != v:
                    continue
            child = cells[:t] + [[v], [u for u in target if u != v]] + cells[t + 1:]
            child, h = kernels.refine(self.words, self.n, child)
            h = _mix(h, t)
            if self.first_lab is None:
                self.first_path.append(v)
            ceqf = eqf and (self.first_lab is None or h == self.first_traces[level + 1])
            ctraces = traces + [h]
            if not ceqf and self.best_lab is not None and ctraces > self.best_traces[: level + 2]:
                continue
            r = self._dfs(child, level + 1, ctraces, prefix + [v], ceqf)
            if r is not None and r < level:
                return r
        return None

    def _leaf(self, lab, traces, prefix, eqf):
        cert = kernels.permuted_rref(self.rows, lab)
        if self.first_lab is None:
            self.first_lab = self.best_lab = lab
            self.first_cert = self.best_cert = cert
            self.first_traces = self.best_traces = list(traces)
            return None
        if eqf and cert == self.first_cert:
            self._add_automorphism(self.first_lab, lab)
            # resume at the deepest first-path ancestor
            level = 0
            while self.first_path[level] == prefix[level]:
                level += 1
            return level
        cmpb = (traces > self.best_traces) - (traces < self.best_traces)
        if cmpb == 0 and cert == self.best_cert:
            self._add_automorphism(self.best_lab, lab)
            return None
        if cmpb < 0 or (cmpb == 0 and cert < self.best_cert):
            self.best_lab, self.best_cert, self.best_traces = lab, cert, list(traces)
        return None

    def _add_automorphism(self, lab1, lab2):
        img = [0] * self.n
        for a, b in zip(lab1, lab2):
            img[a] = b
        self.gens.append(Perm(tuple(img)))

    def group_order(self) -> int:
        order = 1
        for level, v in enumerate(self.first_path):
            prefix = self.first_path[:level]
            fixing = [g for g in self.gens if all(g.images[p] == p for p in prefix)]
            labels = point_orbits(fixing, self.n)
            root = labels[v]
            order *= sum(1 for x in self.first_targets[level] if labels[x] == root)
        return order


def _mix(h: int, x: int) -> int:
    return ((h ^ x) * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF


def canonical_form(c: Code, budget: int = DEFAULT_NODE_BUDGET, origin: str = "") -> CanonicalRecord:
    if c.k > 20 or c.n > 40:
        raise ValueError("canonical_form supports k <= 20 and n <= 40")
    n = c.n
    words = invariant_words(c)
    s = _Search(c.rows, n, words, budget)
    s.run()
    beta = s.best_lab
    beta_inv = [0] * n
    for j, x in enumerate(beta):
        beta_inv[x] = j
    gens = []
    for g in s.gens:
        gens.append(Perm(tuple(beta_inv[g.images[beta[j]]] for j in range(n))))
    return CanonicalRecord(
        canon=GenMatrix(n, s.best_cert),
        aut_order=s.group_order(),
        aut_gens=tuple(gens),
        labeling=tuple(beta),
        origin=origin,
        weight_dist=tuple(c.weight_dist),
    )


def are_equivalent(a: Code, b: Code, budget: int = DEFAULT_NODE_BUDGET) -> bool:
    if a.n != b.n or a.k != b.k:
        return False
    if a.weight_dist != b.weight_dist:
        return False
    return canonical_form(a, budget).canon == canonical_form(b, budget).canon


@dataclass(frozen=True)
class TransferMap:
    """Images f(P) in GL(k, 2) of automorphisms P, with f(P) G_1 = G_1 P.

    Each matrix is a tuple of k row words over k bits.
    """

    k: int
    matrices: tuple[tuple[int, ...], ...]

    def apply(self, index: int, vec: int) -> int:
        """Left action of matrix ``index`` on a column vector."""
        out = 0
        for i, row in enumerate(self.matrices[index]):
            if (row & vec).bit_count() & 1:
                out |= 1 << i
        return out


def transfer_map(c1: Code, rec: CanonicalRecord) -> TransferMap:
    g1 = list(c1.rows)
    r = right_inverse(c1.gen)
    mats = []
    for p in rec.aut_gens:
        gp = [p.apply(x) for x in g1]
        f = mat_mul_rows(gp, r)
        if mat_mul_rows(f, g1) != gp:
            raise VerificationFailed(f"f(P) G1 != G1 P for P = {p}")
        mats.append(tuple(f))
    return TransferMap(c1.k, tuple(mats))


def extension_orbits(tm: TransferMap) -> tuple[list[int], list[int]]:
    """Orbit representatives (smallest members, ascending) and orbit sizes on F_2^k."""
    if tm.k > 20:
        raise ValueError("orbit enumeration supports k <= 20")
    return kernels.orbits([list(m) for m in tm.matrices], tm.k)


def orbit_representatives(tm: TransferMap) -> list[BitVector]:
    reps, _ = extension_orbits(tm)
    return [BitVector(tm.k, r) for r in reps]

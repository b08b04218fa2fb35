"""Inductive classification of binary self-dual codes by length and minimum weight.

A self-dual [n, n/2, d] code with d >= 4 contains a subcode whose generator
matrix is a length-(n-2) parent code with one column duplicated into the
last two positions.  Running over parent classes and over orbit
representatives of the duplicated column, then rejecting isomorphs by
canonical form, yields every class; mass-formula certificates confirm it.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from . import massexact
from .codeops import Code, direct_sum, i2, is_self_dual
from .equiv import CanonicalRecord, canonical_form, extension_orbits, transfer_map
from .errors import CertificateFailed
from .gf2 import GenMatrix, dual_basis, rref

log = logging.getLogger(__name__)


def record_id(rec: CanonicalRecord) -> str:
    import hashlib

    h = hashlib.blake2b(digest_size=8)
    h.update(rec.canon.n.to_bytes(1, "little"))
    for r in rec.canon.rows:
        h.update(r.to_bytes(8, "little"))
    return h.hexdigest()


@dataclass
class Layer:
    n: int
    d: int
    records: list[CanonicalRecord] = field(default_factory=list)
    certified: bool = False
    certificate: Optional[massexact.Certificate] = None

    def __len__(self) -> int:
        return len(self.records)


@dataclass
class Classification:
    """All classes at one length, grouped into minimum-weight layers."""

    n: int
    layers: dict[int, Layer] = field(default_factory=dict)
    certificates: list[massexact.Certificate] = field(default_factory=list)
    certified: bool = False

    @property
    def records(self) -> list[CanonicalRecord]:
        out = [r for d in sorted(self.layers) for r in self.layers[d].records]
        return sorted(out, key=lambda r: r.key)

    @property
    def total(self) -> int:
        return sum(len(l) for l in self.layers.values())

    def counts(self) -> dict[int, int]:
        return {d: len(l) for d, l in sorted(self.layers.items())}

    def family(self, max_d: Optional[int] = None):
        for d in sorted(self.layers):
            if max_d is not None and d > max_d:
                continue
            for r in self.layers[d].records:
                yield r.aut_order, r.weight_dist


@dataclass(frozen=True)
class ExtensionCandidate:
    parent: CanonicalRecord
    avec: int
    code: Code
    subcode: GenMatrix
    discarded: GenMatrix


def subcode_rows(parent_rows: Sequence[int], m: int, avec: int) -> list[int]:
    """Rows (g_i | a_i a_i) of the length-(m+2) subcode."""
    tail = (1 << m) | (1 << (m + 1))
    return [g | tail if (avec >> i) & 1 else g for i, g in enumerate(parent_rows)]


def intermediate_codes(c0: Sequence[int], n: int):
    """The self-dual codes between C_0 and its dual.

    Returns (weight-2 code containing (0..0,1,1), [the other two]); the list
    is empty when only the first is self-dual.
    """
    e = 3 << (n - 2)
    dual = dual_basis(GenMatrix(n, tuple(c0))).rows
    with_e = rref(GenMatrix(n, tuple(c0) + (e,)))[0]
    x = next(r for r in dual if ((r >> (n - 2)) ^ (r >> (n - 1))) & 1)
    if x.bit_count() % 2:
        return with_e, []
    others = [rref(GenMatrix(n, tuple(c0) + (y,)))[0] for y in (x, x ^ e)]
    return with_e, others


def extend_with(parent: CanonicalRecord, avec: int) -> Optional[ExtensionCandidate]:
    m = parent.n
    n = m + 2
    c0 = subcode_rows(parent.canon.rows, m, avec)
    discarded, others = intermediate_codes(c0, n)
    if not others:
        return None
    keep = min(others, key=lambda g: g.rows)
    return ExtensionCandidate(parent, avec, Code(keep), GenMatrix(n, tuple(c0)), discarded)


def extension_vectors(parent: CanonicalRecord, reduce: bool = True) -> list[int]:
    k = parent.canon.k
    if not reduce:
        return list(range(1 << k))
    tm = transfer_map(parent.code, parent)
    return extension_orbits(tm)[0]


def build_extensions(parent: CanonicalRecord, target_d: int, reduce: bool = True) -> list[ExtensionCandidate]:
    out = []
    for a in extension_vectors(parent, reduce):
        cand = extend_with(parent, a)
        if cand is not None and cand.code.min_weight == target_d:
            out.append(cand)
    return out


def _extend_parent(args) -> list[CanonicalRecord]:
    parent, target_d, reduce, pid = args
    found: dict[tuple[int, ...], CanonicalRecord] = {}
    for cand in build_extensions(parent, target_d, reduce):
        rec = canonical_form(cand.code, origin=f"parent={pid} a={cand.avec:x}")
        found.setdefault(rec.key, rec)
    return list(found.values())


def _run(func, tasks: list, jobs: int) -> list:
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(func, tasks, chunksize=1))
    return [func(t) for t in tasks]


def assemble_layer(n: int, d: int, parents: Iterable[CanonicalRecord], reduce: bool = True, jobs: int = 1) -> Layer:
    parents = sorted(parents, key=lambda r: r.key)
    tasks = [(p, d, reduce, record_id(p)) for p in parents]
    store: dict[tuple[int, ...], CanonicalRecord] = {}
    for batch in _run(_extend_parent, tasks, jobs):
        for rec in batch:
            store.setdefault(rec.key, rec)
    records = [store[k] for k in sorted(store)]
    return Layer(n, d, records)


def _lift_i2(args) -> CanonicalRecord:
    rec, pid = args
    return canonical_form(direct_sum(i2(), rec.code), origin=f"i2+{pid}")


def weight2_layer(prev: Classification, jobs: int = 1) -> Layer:
    n = prev.n + 2
    tasks = [(r, record_id(r)) for r in prev.records]
    records = sorted(_run(_lift_i2, tasks, jobs), key=lambda r: r.key)
    return Layer(n, 2, records)


def base_classification() -> Classification:
    rec = canonical_form(i2(), origin="i2")
    cl = Classification(2, {2: Layer(2, 2, [rec])})
    _certify(cl, 2)
    _close(cl)
    return cl


def _certify(cl: Classification, d: int) -> None:
    cert = massexact.completeness_check(cl.family(d), cl.n, d)
    cl.certificates.append(cert)
    layer = cl.layers[d]
    layer.certificate = cert
    if not cert:
        raise CertificateFailed(
            f"n={cl.n} d={d}: weight-{d} mass {cert.lhs} != {cert.rhs} with {len(layer)} classes"
        )
    layer.certified = True


def _close(cl: Classification) -> bool:
    cert = massexact.total_mass_check((aut for aut, _ in cl.family()), cl.n)
    if cert:
        cl.certificates.append(cert)
        if not massexact.thompson_check(cl.family(), cl.n):
            raise CertificateFailed(f"n={cl.n}: enumerator sum disagrees with the Thompson formula")
        cl.certified = True
    return cert.ok


def classify_length(
    n: int,
    prior: Optional[Classification],
    max_d: Optional[int] = None,
    reduce: bool = True,
    jobs: int = 1,
) -> Classification:
    """Classify length n from the certified classification at n - 2.

    Layers are produced for d = 2, 4, 6, ... and each is gated by the
    weight-d certificate.  Stops once the total mass is reached or d
    exceeds ``max_d`` (the result is then not certified as a whole).
    """
    if n == 2:
        return base_classification()
    if prior is None or prior.n != n - 2:
        raise ValueError(f"need the classification at length {n - 2}")
    if not prior.certified:
        raise CertificateFailed(f"prior classification at length {prior.n} is not certified")
    cl = Classification(n)
    cl.layers[2] = weight2_layer(prior, jobs)
    _certify(cl, 2)
    d = 2
    while not _close(cl):
        d += 2
        if max_d is not None and d > max_d:
            break
        if d > n // 2 + 2:
            raise CertificateFailed(f"n={n}: mass not reached by d={d - 2}")
        parents = prior.layers[d - 2].records if d - 2 in prior.layers else []
        cl.layers[d] = assemble_layer(n, d, parents, reduce, jobs)
        log.info("n=%d d=%d: %d classes from %d parents", n, d, len(cl.layers[d]), len(parents))
        _certify(cl, d)
    return cl


def classify_upto(
    n_max: int,
    max_d: Optional[int] = None,
    reduce: bool = True,
    jobs: int = 1,
    start: Optional[Classification] = None,
    on_length: Optional[Callable[[Classification], None]] = None,
) -> dict[int, Classification]:
    """Classify every even length up to ``n_max``, optionally resuming from ``start``."""
    out: dict[int, Classification] = {}
    cl = start
    n = 2 if start is None else start.n + 2
    if start is not None:
        out[start.n] = start
    while n <= n_max:
        cl = classify_length(n, cl, max_d=max_d, reduce=reduce, jobs=jobs)
        out[n] = cl
        if on_length is not None:
            on_length(cl)
        if not cl.certified:
            break
        n += 2
    return out


def check_candidate(cand: ExtensionCandidate) -> None:
    """Structural assertions on one extension (used by tests and audits)."""
    n = cand.code.n
    m = n - 2
    low = (1 << m) - 1
    punctured = GenMatrix(m, tuple(r & low for r in cand.subcode.rows))
    assert rref(punctured)[0] == cand.parent.canon
    assert is_self_dual(cand.code)
    assert cand.code.contains((1 << n) - 1)
    e = 3 << m
    assert Code(cand.discarded).contains(e)

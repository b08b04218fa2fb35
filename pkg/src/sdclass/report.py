"""Per-code analytics over a database and the summary tables built from them."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .codeops import Parity, classify_parity, covering_radius, shadow, we36_params, WE36Params
from .errors import NotCertified
from .sddb import ClassDB, DBRecord

KINDS = ("counts", "we", "aut", "shadow", "cr")


@dataclass(frozen=True)
class CodeAnalysis:
    id: str
    n: int
    d: int
    aut_order: int
    parity: Parity
    weight_dist: tuple[int, ...]
    we36: Optional[WE36Params] = None
    shadow_min: Optional[int] = None
    covering_radius: Optional[int] = None

    def line(self) -> str:
        parts = [f"id={self.id}", f"n={self.n}", f"d={self.d}", f"aut={self.aut_order}", self.parity.value]
        if self.we36 is not None:
            parts.append("we=({},{},{},{})".format(*self.we36.as_tuple()))
        if self.shadow_min is not None:
            parts.append(f"s={self.shadow_min}")
        if self.covering_radius is not None:
            parts.append(f"R={self.covering_radius}")
        return " ".join(parts)


def analyze_record(rec: DBRecord, cr: bool = True, shade: bool = True) -> CodeAnalysis:
    code = rec.code
    parity = classify_parity(code)
    s = shadow(code).min_weight if shade and parity is Parity.SINGLY_EVEN else None
    return CodeAnalysis(
        id=rec.id,
        n=code.n,
        d=code.min_weight,
        aut_order=rec.aut_order,
        parity=parity,
        weight_dist=tuple(code.weight_dist),
        we36=we36_params(code) if code.n == 36 else None,
        shadow_min=s,
        covering_radius=covering_radius(code) if cr else None,
    )


def length36_violations(a: CodeAnalysis) -> list[str]:
    """Known bounds for length-36 self-dual codes that ``a`` breaks (empty when none)."""
    if a.n != 36:
        return []
    out = []
    if a.covering_radius is not None and not 6 <= a.covering_radius <= 20 - a.d:
        out.append(f"covering radius {a.covering_radius} outside [6, {20 - a.d}]")
    if a.shadow_min is not None and 2 * a.d + a.shadow_min > 22:
        out.append(f"2d + s = {2 * a.d + a.shadow_min} > 22")
    return out


def _table(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    rows = [[str(x) for x in r] for r in rows]
    widths = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(header)]
    out = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    out.append("  ".join("-" * w for w in widths))
    out += ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows]
    return "\n".join(out)


def counts_table(dbs: Sequence[ClassDB]) -> str:
    for db in dbs:
        if not db.certified:
            raise NotCertified(f"database for n={db.n} is not certified")
    ds = sorted({d for db in dbs for d in db.layer_counts()})
    rows = []
    for db in sorted(dbs, key=lambda b: b.n):
        c = db.layer_counts()
        rows.append([db.n, len(db.records)] + [c.get(d, 0) for d in ds])
    return _table(["n", "#T"] + [f"#{d}" for d in ds], rows)


def _by_d(analyses: Iterable[CodeAnalysis]) -> dict[int, list[CodeAnalysis]]:
    out: dict[int, list[CodeAnalysis]] = {}
    for a in analyses:
        out.setdefault(a.d, []).append(a)
    return dict(sorted(out.items()))


def we_table(analyses: Sequence[CodeAnalysis]) -> str:
    groups = _by_d(analyses)
    text = _table(["d", "#WE"], [[d, len({a.weight_dist for a in g})] for d, g in groups.items()])
    six = [a for a in groups.get(6, []) if a.we36 is not None]
    if six:
        hist = Counter((a.we36.gamma, a.we36.delta) for a in six)
        text += "\n\n" + _table(["(gamma,delta)", "#"], [[f"({g},{dl})", hist[(g, dl)]] for g, dl in sorted(hist)])
    return text


def aut_table(analyses: Sequence[CodeAnalysis]) -> str:
    groups = _by_d(analyses)
    text = _table(
        ["d", "#Aut_s", "#Aut_l"],
        [[d, min(a.aut_order for a in g), max(a.aut_order for a in g)] for d, g in groups.items()],
    )
    for d, g in groups.items():
        hist = Counter(a.aut_order for a in g)
        text += f"\n\nd={d}\n" + _table(["#Aut", "N"], [[o, hist[o]] for o in sorted(hist)])
    return text


def shadow_table(analyses: Sequence[CodeAnalysis]) -> str:
    groups = _by_d(analyses)
    svals = sorted({a.shadow_min for a in analyses if a.shadow_min is not None})
    rows = []
    for d, g in groups.items():
        hist = Counter(a.shadow_min for a in g if a.shadow_min is not None)
        rows.append([d] + [hist.get(s, 0) for s in svals])
    return _table(["d"] + [f"#s={s}" for s in svals], rows)


def cr_table(analyses: Sequence[CodeAnalysis]) -> str:
    groups = _by_d(analyses)
    rvals = sorted({a.covering_radius for a in analyses if a.covering_radius is not None})
    rows = []
    for d, g in groups.items():
        hist = Counter(a.covering_radius for a in g)
        rows.append([d] + [hist.get(r, 0) for r in rvals])
    return _table(["d"] + [f"#R={r}" for r in rvals], rows)


def report(dbs, kind: str) -> str:
    if isinstance(dbs, ClassDB):
        dbs = [dbs]
    if kind not in KINDS:
        raise ValueError(f"unknown report kind {kind!r}; choose from {', '.join(KINDS)}")
    if kind == "counts":
        return counts_table(dbs)
    records = [r for db in dbs for r in db.records]
    analyses = [analyze_record(r, cr=(kind == "cr"), shade=(kind == "shadow")) for r in records]
    return {"we": we_table, "aut": aut_table, "shadow": shadow_table, "cr": cr_table}[kind](analyses)

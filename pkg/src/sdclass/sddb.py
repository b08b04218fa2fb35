"""SDDB text format for classification databases.

::

    SDDB 1
    n=<n> d=<d|any> count=<c> certified=<0|1>
    cert <kind> n=<n> d=<d|any> lhs=<int> rhs=<int> ok=<0|1>     (zero or more)
    code id=<hex digest> aut=<order> minwt=<d>
    <k lines of n characters over 01, coordinate 1 first>
    end

Records are written in ascending order of their packed rows.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Optional, Union

from .classify import Classification, Layer, record_id
from .codeops import Code, is_self_dual
from .equiv import CanonicalRecord, canonical_form
from .errors import IntegrityError, ParseError
from .gf2 import GenMatrix, word_from_string, word_to_string
from .massexact import Certificate

MAGIC = "SDDB 1"

_HEADER = re.compile(r"^n=(\d+) d=(\d+|any) count=(\d+) certified=([01])$")
_CERT = re.compile(r"^cert (\w+) n=(\d+) d=(\d+|any) lhs=(\d+) rhs=(\d+) ok=([01])$")
_CODE = re.compile(r"^code id=([0-9a-f]+) aut=(\d+) minwt=(\d+)$")


@dataclass
class DBRecord:
    id: str
    aut_order: int
    min_weight: int
    gen: GenMatrix

    @property
    def n(self) -> int:
        return self.gen.n

    @property
    def key(self) -> tuple[int, ...]:
        return self.gen.rows

    @cached_property
    def code(self) -> Code:
        return Code(self.gen)

    @property
    def weight_dist(self) -> list[int]:
        return self.code.weight_dist

    @classmethod
    def from_canonical(cls, rec: CanonicalRecord) -> "DBRecord":
        return cls(record_id(rec), rec.aut_order, rec.min_weight, rec.canon)


@dataclass
class ClassDB:
    n: int
    d: Optional[int]
    certified: bool
    records: list[DBRecord] = field(default_factory=list)
    certificates: list[Certificate] = field(default_factory=list)

    @classmethod
    def from_layer(cls, layer: Layer) -> "ClassDB":
        certs = [layer.certificate] if layer.certificate is not None else []
        recs = [DBRecord.from_canonical(r) for r in sorted(layer.records, key=lambda r: r.key)]
        return cls(layer.n, layer.d, layer.certified, recs, certs)

    @classmethod
    def from_classification(cls, cl: Classification) -> "ClassDB":
        recs = [DBRecord.from_canonical(r) for r in cl.records]
        return cls(cl.n, None, cl.certified, recs, list(cl.certificates))

    def layer_counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for r in self.records:
            out[r.min_weight] = out.get(r.min_weight, 0) + 1
        return dict(sorted(out.items()))

    def family(self, max_d: Optional[int] = None):
        for r in self.records:
            if max_d is None or r.min_weight <= max_d:
                yield r.aut_order, r.weight_dist


def serialize(db: Union[ClassDB, Layer, Classification]) -> str:
    if isinstance(db, Layer):
        db = ClassDB.from_layer(db)
    elif isinstance(db, Classification):
        db = ClassDB.from_classification(db)
    d = "any" if db.d is None else str(db.d)
    lines = [MAGIC, f"n={db.n} d={d} count={len(db.records)} certified={int(db.certified)}"]
    lines += [c.render() for c in db.certificates]
    for r in sorted(db.records, key=lambda r: r.key):
        lines.append(f"code id={r.id} aut={r.aut_order} minwt={r.min_weight}")
        lines += [word_to_string(x, r.n) for x in r.gen.rows]
        lines.append("end")
    return "\n".join(lines) + "\n"


def _check_record(rec: DBRecord, n: int, lineno: int) -> None:
    if rec.gen.n != n:
        raise ParseError(f"record {rec.id} has length {rec.gen.n}, header says {n}", lineno)
    code = rec.code
    if code.gen.rank != code.k:
        raise IntegrityError(f"record {rec.id} (line {lineno}): rows are linearly dependent")
    if not is_self_dual(code):
        raise IntegrityError(f"record {rec.id} (line {lineno}): code is not self-dual")
    if code.min_weight != rec.min_weight:
        raise IntegrityError(
            f"record {rec.id} (line {lineno}): stored minwt {rec.min_weight}, actual {code.min_weight}"
        )


def parse(text: Union[str, bytes], verify: bool = True) -> ClassDB:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise ParseError("empty input", 1)
    if lines[0].strip() != MAGIC:
        raise ParseError(f"expected {MAGIC!r}", 1)
    if len(lines) < 2:
        raise ParseError("missing header", 2)
    m = _HEADER.match(lines[1].strip())
    if not m:
        raise ParseError(f"bad header {lines[1]!r}", 2)
    n = int(m[1])
    d = None if m[2] == "any" else int(m[2])
    count = int(m[3])
    db = ClassDB(n, d, m[4] == "1")
    i = 2
    while i < len(lines) and lines[i].startswith("cert "):
        c = _CERT.match(lines[i].strip())
        if not c:
            raise ParseError(f"bad certificate line {lines[i]!r}", i + 1)
        cd = None if c[3] == "any" else int(c[3])
        cert = Certificate(c[1], int(c[2]), cd, int(c[4]), int(c[5]))
        if cert.ok != (c[6] == "1"):
            raise ParseError("certificate ok flag disagrees with its values", i + 1)
        db.certificates.append(cert)
        i += 1
    while i < len(lines):
        line = lines[i].strip()
        if not line:
            i += 1
            continue
        c = _CODE.match(line)
        if not c:
            raise ParseError(f"expected a code block, got {line!r}", i + 1)
        start = i + 1
        i += 1
        rows = []
        while i < len(lines) and lines[i].strip() != "end":
            row = lines[i].strip()
            if len(row) != n or any(ch not in "01" for ch in row):
                raise ParseError(f"bad generator row {row!r}", i + 1)
            rows.append(word_from_string(row))
            i += 1
        if i == len(lines):
            raise ParseError("unterminated code block", start)
        rec = DBRecord(c[1], int(c[2]), int(c[3]), GenMatrix(n, tuple(rows)))
        if verify:
            _check_record(rec, n, start)
        db.records.append(rec)
        i += 1
    if len(db.records) != count:
        raise ParseError(f"header count {count} but {len(db.records)} records", 2)
    keys = [r.key for r in db.records]
    if keys != sorted(keys):
        raise ParseError("records are not in ascending order", 2)
    return db


def load(path: Union[str, Path], verify: bool = True) -> ClassDB:
    return parse(Path(path).read_text(), verify=verify)


def dump(db, path: Union[str, Path]) -> None:
    Path(path).write_text(serialize(db))


def db_path(directory: Union[str, Path], n: int) -> Path:
    return Path(directory) / f"sd{n}.sddb"


def expand_paths(paths: Iterable[Union[str, Path]]) -> list[Path]:
    """Files as given; directories expand to their ``*.sddb`` files by length."""
    out = []
    for p in map(Path, paths):
        if p.is_dir():
            found = sorted(p.glob("*.sddb"), key=lambda q: (len(q.stem), q.stem))
            out.extend(found)
        else:
            out.append(p)
    return out


def to_classification(db: ClassDB, check_aut: bool = True) -> Classification:
    """Rebuild canonical records (with automorphism generators) from a database."""
    if db.d is not None:
        raise ValueError("a full-length database (d=any) is required")
    cl = Classification(db.n, certified=db.certified, certificates=list(db.certificates))
    for r in db.records:
        rec = canonical_form(r.code, origin=f"loaded {r.id}")
        if check_aut and rec.aut_order != r.aut_order:
            raise IntegrityError(f"record {r.id}: stored aut {r.aut_order}, recomputed {rec.aut_order}")
        layer = cl.layers.setdefault(rec.min_weight, Layer(db.n, rec.min_weight, certified=db.certified))
        layer.records.append(rec)
    for layer in cl.layers.values():
        layer.records.sort(key=lambda r: r.key)
    return cl

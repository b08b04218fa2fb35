"""Command-line driver: ``sdclass classify|analyze|verify|report|bound``.

Exit status: 0 certified/pass, 2 certificate or bound failure, 1 usage or I/O error.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path

from . import massexact, sddb
from .classify import classify_upto
from .equiv import canonical_form
from .errors import CertificateFailed, IntegrityError, NotCertified, ParseError, SDClassError
from .kernels import BACKEND
from .report import KINDS, analyze_record, length36_violations, report

EXIT_OK, EXIT_USAGE, EXIT_CERT = 0, 1, 2

log = logging.getLogger("sdclass")


def _resume_point(out: Path, upto: int):
    """Largest certified full database in ``out`` below ``upto``, if any."""
    for n in range(upto - 2, 1, -2):
        path = sddb.db_path(out, n)
        if path.exists():
            db = sddb.load(path)
            if db.certified and db.d is None:
                return sddb.to_classification(db)
    return None


def cmd_classify(args) -> int:
    if args.upto < 2 or args.upto % 2:
        print("--upto must be an even length >= 2", file=sys.stderr)
        return EXIT_USAGE
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    start = _resume_point(out, args.upto) if args.resume else None
    if start is not None:
        print(f"resuming from n={start.n} ({start.total} classes)")
    t0 = time.time()

    def on_length(cl):
        sddb.dump(cl, sddb.db_path(out, cl.n))
        counts = " ".join(f"#{d}={c}" for d, c in cl.counts().items())
        status = "certified" if cl.certified else "partial"
        print(f"n={cl.n} total={cl.total} {counts} {status} [{time.time() - t0:.1f}s]", flush=True)

    try:
        result = classify_upto(
            args.upto, max_d=args.max_d, reduce=not args.no_reduce, jobs=args.jobs,
            start=start, on_length=on_length,
        )
    except CertificateFailed as exc:
        print(f"certificate failed: {exc}", file=sys.stderr)
        return EXIT_CERT
    last = result[max(result)]
    return EXIT_OK if last.certified or args.max_d is not None else EXIT_CERT


def cmd_analyze(args) -> int:
    db = sddb.load(args.db)
    want_all = not (args.we or args.shadow or args.cr or args.aut)
    bad = 0
    for rec in db.records:
        a = analyze_record(rec, cr=args.cr or want_all, shade=args.shadow or args.we or want_all)
        parts = [f"id={a.id}", f"d={a.d}"]
        if args.aut or want_all:
            parts.append(f"aut={a.aut_order}")
        if (args.we or want_all):
            if a.we36 is not None:
                parts.append("we=({},{},{},{})".format(*a.we36.as_tuple()))
            else:
                parts.append("A=" + ",".join(str(x) for x in a.weight_dist))
        if (args.shadow or want_all) and a.shadow_min is not None:
            parts.append(f"s={a.shadow_min}")
        if (args.cr or want_all) and a.covering_radius is not None:
            parts.append(f"R={a.covering_radius}")
        problems = length36_violations(a)
        if problems:
            bad += 1
            parts.append("VIOLATION: " + "; ".join(problems))
        print(" ".join(parts))
    return EXIT_CERT if bad else EXIT_OK


def cmd_verify(args) -> int:
    db = sddb.load(args.db)
    print(f"n={db.n} d={'any' if db.d is None else db.d} records={len(db.records)} integrity=ok")
    failed = False
    if args.recompute_aut:
        for r in db.records:
            rec = canonical_form(r.code)
            if rec.aut_order != r.aut_order:
                print(f"aut mismatch id={r.id}: stored {r.aut_order}, recomputed {rec.aut_order}")
                failed = True
        print(f"aut recomputed: {'FAIL' if failed else 'ok'}")
    if db.certified:
        if db.d is None:
            counts = db.layer_counts()
            for d in counts:
                cert = massexact.completeness_check(db.family(d), db.n, d)
                print(cert.render())
                failed |= not cert.ok
            cert = massexact.total_mass_check((a for a, _ in db.family()), db.n)
            print(cert.render())
            failed |= not cert.ok
            ok = massexact.thompson_check(db.family(), db.n)
            print(f"thompson n={db.n} ok={int(ok)}")
            failed |= not ok
        else:
            print("layer file: certificates need the full length database; checked integrity only")
    return EXIT_CERT if failed else EXIT_OK


def cmd_report(args) -> int:
    dbs = [sddb.load(p) for p in sddb.expand_paths(args.db)]
    if not dbs:
        print("no databases found", file=sys.stderr)
        return EXIT_USAGE
    try:
        print(report(dbs, args.kind))
    except NotCertified as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_CERT
    return EXIT_OK


def cmd_bound(args) -> int:
    if args.length < 2 or args.length % 2:
        print("--length must be an even integer >= 2", file=sys.stderr)
        return EXIT_USAGE
    frac, ceiling = massexact.lower_bound_next_length(args.length)
    print(f"length {args.length}: mass / {args.length}! = {massexact.render_decimal(frac)}...")
    print(f"exact: {frac.numerator}/{frac.denominator}")
    print(f"at least {ceiling} inequivalent self-dual codes")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sdclass", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify self-dual codes up to a length")
    c.add_argument("--upto", type=int, required=True)
    c.add_argument("--max-d", type=int, default=None, help="stop each length after this minimum weight")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--out", required=True)
    c.add_argument("--resume", action="store_true", help="continue from certified files already in --out")
    c.add_argument("--no-reduce", action="store_true", help="try every extension vector (no orbit reduction)")
    c.set_defaults(func=cmd_classify)

    a = sub.add_parser("analyze", help="per-code analytics")
    a.add_argument("db")
    a.add_argument("--we", action="store_true")
    a.add_argument("--shadow", action="store_true")
    a.add_argument("--cr", action="store_true")
    a.add_argument("--aut", action="store_true")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="re-check integrity and certificates")
    v.add_argument("db")
    v.add_argument("--recompute-aut", action="store_true")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("report", help="summary tables")
    r.add_argument("db", nargs="+", help="database files or directories")
    r.add_argument("--kind", choices=KINDS, default="counts")
    r.set_defaults(func=cmd_report)

    b = sub.add_parser("bound", help="lower bound on the class count from the mass formula")
    b.add_argument("--length", type=int, required=True)
    b.set_defaults(func=cmd_bound)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    log.debug("kernel backend: %s", BACKEND)
    try:
        return args.func(args)
    except (ParseError, IntegrityError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SDClassError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CERT


if __name__ == "__main__":
    sys.exit(main())

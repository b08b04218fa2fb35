"""Time the compiled kernels against the numpy/pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]

The workloads are taken from real classification steps: the length-36
golden code for enumeration and covering radius, and automorphism
generators of a length-24 class for the orbit kernel.  The end-to-end row
times a complete certified classification up to length 20 with each backend
swapped into the search.
"""

from __future__ import annotations

import argparse
import statistics
import time
from pathlib import Path

from sdclass import _pykernels, equiv, kernels, sddb
from sdclass.codeops import syndrome_columns

FIXTURE = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "c36_golden.sddb"


def timeit(fn, repeat: int) -> float:
    samples = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def workloads():
    code = sddb.load(FIXTURE).records[0].code
    rows = list(code.rows)
    n = code.n
    cols, r = syndrome_columns(code)
    words = _pykernels.collect_words(rows, n, 6, 8)
    lab = list(range(n))[::-1]

    from sdclass.classify import classify_upto

    rec = next(r for r in classify_upto(24)[24].records if r.aut_order > 10**6)
    tm = equiv.transfer_map(rec.code, rec)
    mats = [list(m) for m in tm.matrices]

    return {
        "weight_distribution (k=18)": lambda b: b.weight_distribution(rows, n, 0),
        "collect_words (w 6..8)": lambda b: b.collect_words(rows, n, 6, 8),
        "covering_radius (2^18 syndromes)": lambda b: b.covering_radius(cols, r),
        "refine (one pass)": lambda b: b.refine(words, n, [list(range(n))]),
        "permuted_rref": lambda b: b.permuted_rref(rows, lab),
        f"orbits (k={tm.k})": lambda b: b.orbits(mats, tm.k),
    }


def classify_with(backend, n: int) -> None:
    """Run a classification with ``backend`` swapped in for every kernel call."""
    from sdclass.classify import classify_upto

    names = ["weight_distribution", "collect_words", "covering_radius", "orbits",
             "refine", "rref_words", "permuted_rref"]
    saved = {k: getattr(kernels, k) for k in names}
    try:
        for k in names:
            setattr(kernels, k, getattr(backend, k))
        classify_upto(n)
    finally:
        for k, v in saved.items():
            setattr(kernels, k, v)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--classify-upto", type=int, default=20)
    args = ap.parse_args()

    compiled = kernels.compiled_backend
    if compiled is None:
        print("compiled kernels are not built; only the fallback can be timed")
    print(f"{'kernel':36} {'python [s]':>12} {'compiled [s]':>13} {'speedup':>8}")
    for name, fn in workloads().items():
        tp = timeit(lambda: fn(_pykernels), args.repeat)
        if compiled is None:
            print(f"{name:36} {tp:12.4f} {'-':>13} {'-':>8}")
            continue
        tc = timeit(lambda: fn(compiled), args.repeat)
        print(f"{name:36} {tp:12.4f} {tc:13.4f} {tp / tc:7.1f}x")

    label = f"classify_upto({args.classify_upto})"
    tp = timeit(lambda: classify_with(_pykernels, args.classify_upto), 1)
    if compiled is None:
        print(f"{label:36} {tp:12.2f}")
    else:
        tc = timeit(lambda: classify_with(compiled, args.classify_upto), 1)
        print(f"{label:36} {tp:12.2f} {tc:13.2f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()

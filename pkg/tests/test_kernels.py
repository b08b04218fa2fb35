"""The compiled kernels and their pure-Python twin must agree exactly."""

import pytest
from hypothesis import given, settings, strategies as st

from sdclass import kernels
from sdclass import _pykernels as py

compiled = kernels.compiled_backend
needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")


@st.composite
def matrices(draw, max_n=24, max_k=10):
    n = draw(st.integers(2, max_n))
    k = draw(st.integers(1, min(n, max_k)))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=k, max_size=k))
    return n, rows


@needs_compiled
@settings(max_examples=150, deadline=None)
@given(matrices(), st.data())
def test_enumeration_kernels_agree(mat, data):
    n, rows = mat
    offset = data.draw(st.integers(0, (1 << n) - 1))
    assert compiled.weight_distribution(rows, n, offset) == py.weight_distribution(rows, n, offset)
    lo = data.draw(st.integers(0, n))
    hi = data.draw(st.integers(lo, n))
    assert compiled.collect_words(rows, n, lo, hi) == py.collect_words(rows, n, lo, hi)
    assert compiled.rref_words(rows, n) == py.rref_words(rows, n)


@needs_compiled
@settings(max_examples=150, deadline=None)
@given(matrices(max_n=20, max_k=8), st.randoms(use_true_random=False))
def test_refine_and_certificates_agree(mat, rnd):
    n, rows = mat
    words = py.collect_words(rows, n, 1, n)
    lab = list(range(n))
    rnd.shuffle(lab)
    assert compiled.permuted_rref(rows, lab) == py.permuted_rref(rows, lab)
    cut = rnd.randint(0, n - 1)
    cells = [lab[:cut], lab[cut:]] if cut else [lab]
    assert compiled.refine(words, n, cells) == py.refine(words, n, cells)


@needs_compiled
@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8), st.data())
def test_orbits_agree(k, data):
    mats = data.draw(st.lists(st.lists(st.integers(0, (1 << k) - 1), min_size=k, max_size=k), max_size=3))
    assert compiled.orbits(mats, k) == py.orbits(mats, k)


@needs_compiled
@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12), st.data())
def test_covering_radius_agrees(r, data):
    extra = data.draw(st.lists(st.integers(0, (1 << r) - 1), max_size=12))
    cols = extra + [1 << i for i in range(r)]
    assert compiled.covering_radius(cols, r) == py.covering_radius(cols, r)


def test_refine_is_label_invariant():
    # relabelling coordinates permutes the cells and leaves the hash alone
    import random

    rnd = random.Random(5)
    n = 12
    rows = [rnd.getrandbits(n) for _ in range(5)]
    words = py.collect_words(rows, n, 1, 6)
    perm = list(range(n))
    rnd.shuffle(perm)

    def move(x):
        return sum(1 << perm[i] for i in range(n) if (x >> i) & 1)

    cells, h = kernels.refine(words, n, [list(range(n))])
    cells2, h2 = kernels.refine([move(w) for w in words], n, [list(range(n))])
    assert h == h2
    assert [sorted(perm[i] for i in c) for c in cells] == cells2


def test_backend_name():
    assert kernels.BACKEND in ("compiled", "python")

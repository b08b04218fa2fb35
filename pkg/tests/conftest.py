from pathlib import Path

import numpy as np
import pytest

from sdclass import sddb
from sdclass.classify import classify_upto
from sdclass.codeops import Code

FIXTURES = Path(__file__).parent / "fixtures"

# published class counts: n -> (total, {d: count})
KNOWN_COUNTS = {
    2: (1, {2: 1}),
    4: (1, {2: 1}),
    6: (1, {2: 1}),
    8: (2, {2: 1, 4: 1}),
    10: (2, {2: 2}),
    12: (3, {2: 2, 4: 1}),
    14: (4, {2: 3, 4: 1}),
    16: (7, {2: 4, 4: 3}),
    18: (9, {2: 7, 4: 2}),
    20: (16, {2: 9, 4: 7}),
    22: (25, {2: 16, 4: 8, 6: 1}),
    24: (55, {2: 25, 4: 28, 6: 1, 8: 1}),
    26: (103, {2: 55, 4: 47, 6: 1}),
}


@pytest.fixture(scope="session")
def golden_db():
    return sddb.load(FIXTURES / "c36_golden.sddb")


@pytest.fixture(scope="session")
def golden_code(golden_db) -> Code:
    return golden_db.records[0].code


@pytest.fixture(scope="session")
def upto16():
    return classify_upto(16)


@pytest.fixture(scope="session")
def upto24():
    return classify_upto(24)


def all_codewords(rows) -> np.ndarray:
    words = np.array([0], dtype=np.uint64)
    for r in rows:
        words = np.concatenate([words, words ^ np.uint64(r)])
    return words


def brute_force_aut_order(code: Code, chunk: int = 40320) -> int:
    """Count permutations in S_n fixing the code, by exhaustive enumeration."""
    from itertools import islice, permutations

    n = code.n
    members = np.array(sorted(set(int(w) for w in all_codewords(code.rows))), dtype=np.uint64)
    it = permutations(range(n))
    total = 0
    while True:
        block = np.array(list(islice(it, chunk)), dtype=np.uint64)
        if not len(block):
            return total
        ok = np.ones(len(block), dtype=bool)
        for r in code.rows:
            img = np.zeros(len(block), dtype=np.uint64)
            for i in range(n):
                if (r >> i) & 1:
                    img |= np.left_shift(np.uint64(1), block[:, i])
            ok &= np.isin(img, members)
        total += int(ok.sum())

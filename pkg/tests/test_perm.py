from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from sdclass.perm import Perm, StabilizerChain, group_order, point_orbits


def test_perm_basics():
    p = Perm.from_cycles(4, [(1, 2)])
    q = Perm.from_cycles(4, [(2, 3)])
    assert p.images == (1, 0, 2, 3)
    # p first, then q: 1 -> 2 -> 3
    assert (p * q).images[0] == 2
    assert (p * p).is_identity()
    assert (q * q.inverse()).is_identity()
    assert p.apply(0b0001) == 0b0010
    with pytest.raises(ValueError):
        Perm((0, 0, 1))


@pytest.mark.parametrize("n", [1, 2, 3, 5, 7])
def test_symmetric_group_order(n):
    gens = [Perm.from_cycles(n, [tuple(range(1, n + 1))])] if n > 1 else []
    if n > 2:
        gens.append(Perm.from_cycles(n, [(1, 2)]))
    elif n == 2:
        gens = [Perm.from_cycles(2, [(1, 2)])]
    assert group_order(gens, n) == factorial(n)


@pytest.mark.parametrize("n", [2, 6, 11])
def test_cyclic_and_dihedral(n):
    rot = Perm.from_cycles(n, [tuple(range(1, n + 1))])
    assert group_order([rot], n) == n
    flip = Perm(tuple((-i) % n for i in range(n)))
    assert group_order([rot, flip], n) == (2 * n if n > 2 else 2)


def test_membership():
    rot = Perm.from_cycles(5, [(1, 2, 3, 4, 5)])
    chain = StabilizerChain(5, [rot])
    assert chain.contains(rot * rot)
    assert not chain.contains(Perm.from_cycles(5, [(1, 2)]))


def test_point_orbits():
    g = Perm.from_cycles(6, [(1, 3), (4, 5, 6)])
    assert point_orbits([g], 6) == [0, 1, 0, 3, 3, 3]


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 7).flatmap(lambda n: st.lists(st.permutations(range(n)), min_size=1, max_size=3)))
def test_order_matches_closure(gens):
    n = len(gens[0])
    ps = [Perm(tuple(g)) for g in gens]
    seen = {Perm.identity(n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in ps:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    assert group_order(ps, n) == len(seen)

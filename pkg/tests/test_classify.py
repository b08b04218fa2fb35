import random

import pytest

from sdclass.classify import (
    build_extensions,
    check_candidate,
    classify_length,
    classify_upto,
    extend_with,
    extension_vectors,
    intermediate_codes,
    subcode_rows,
)
from sdclass.codeops import Code, is_self_dual
from sdclass.equiv import are_equivalent, canonical_form, extension_orbits, transfer_map
from sdclass.errors import CertificateFailed

from conftest import KNOWN_COUNTS


def test_counts_up_to_16(upto16):
    for n, cl in upto16.items():
        total, by_d = KNOWN_COUNTS[n]
        assert cl.certified
        assert cl.total == total
        assert cl.counts() == by_d


def test_weight_two_layer_equals_previous_total(upto16):
    for n in range(4, 17, 2):
        assert len(upto16[n].layers[2]) == upto16[n - 2].total


def test_every_class_is_self_dual_with_correct_layer(upto16):
    for cl in upto16.values():
        for d, layer in cl.layers.items():
            assert layer.certified
            for rec in layer.records:
                assert is_self_dual(rec.code)
                assert rec.min_weight == d
                assert canonical_form(rec.code).canon == rec.canon


def test_subcode_rows():
    assert subcode_rows([0b01, 0b10], 2, 0b10) == [0b0001, 0b1110]


def test_intermediate_codes_of_i2_subcode():
    # C0 = {0000, 1111}: three self-dual codes lie between C0 and its dual
    with_e, others = intermediate_codes([0b1111], 4)
    assert Code(with_e).contains(0b1100)
    assert len(others) == 2
    assert all(is_self_dual(Code(g)) for g in others)


def test_intermediate_codes_odd_case():
    # parent i2, a = 0: C0 = {0000, 0011}; only C0 + e is self-dual
    with_e, others = intermediate_codes([0b0011], 4)
    assert others == []
    assert is_self_dual(Code(with_e))


def test_extension_candidates_are_sound(upto16):
    for n in (8, 10, 12, 14):
        for parent in upto16[n].records:
            for a in extension_vectors(parent, reduce=False)[:64]:
                cand = extend_with(parent, a)
                if cand is None:
                    continue
                check_candidate(cand)
                assert Code(cand.discarded).min_weight == 2


def test_extensions_reach_each_weight4_class(upto16):
    # every d=4 class of length 16 arises from some d=2 parent of length 14
    found = set()
    for parent in upto16[14].layers[2].records:
        for cand in build_extensions(parent, 4):
            found.add(canonical_form(cand.code).canon)
    assert found == {r.canon for r in upto16[16].layers[4].records}


def test_same_orbit_vectors_give_equivalent_codes(upto16):
    rnd = random.Random(1)
    parents = [r for n in (10, 12, 14) for r in upto16[n].records]
    checked = 0
    while checked < 15:
        parent = rnd.choice(parents)
        tm = transfer_map(parent.code, parent)
        if not tm.matrices:
            continue
        a = rnd.randrange(1 << parent.canon.k)
        b = a
        for _ in range(3):
            b = tm.apply(rnd.randrange(len(tm.matrices)), b)
        ca, cb = extend_with(parent, a), extend_with(parent, b)
        assert (ca is None) == (cb is None)
        if ca is not None:
            assert are_equivalent(ca.code, cb.code)
        checked += 1


def test_orbit_reduction_changes_nothing_up_to_12():
    full = classify_upto(12, reduce=False)
    reduced = classify_upto(12)
    for n in full:
        assert [r.canon for r in full[n].records] == [r.canon for r in reduced[n].records]


def test_max_d_stops_early(upto16):
    cl = classify_length(16, upto16[14], max_d=2)
    assert list(cl.layers) == [2]
    assert not cl.certified


def test_needs_certified_prior(upto16):
    with pytest.raises(ValueError):
        classify_length(16, upto16[12])
    broken = classify_length(16, upto16[14], max_d=2)
    with pytest.raises(CertificateFailed):
        classify_length(18, broken)


def test_missing_class_breaks_certificate(upto16):
    from sdclass.classify import Classification, Layer, _certify

    layer = upto16[16].layers[4]
    cl = Classification(16, {2: upto16[16].layers[2], 4: Layer(16, 4, layer.records[:-1])})
    _certify(cl, 2)
    with pytest.raises(CertificateFailed):
        _certify(cl, 4)


def test_resume_matches_fresh_run(upto16):
    resumed = classify_upto(16, start=upto16[12])
    assert [r.canon for r in resumed[16].records] == [r.canon for r in upto16[16].records]


def test_parallel_matches_serial(upto16):
    par = classify_length(16, upto16[14], jobs=2)
    assert [r.canon for r in par.records] == [r.canon for r in upto16[16].records]


def test_canon_sets_differ_between_lengths(upto16):
    ids = [r.canon for cl in upto16.values() for r in cl.records]
    assert len(ids) == len(set(ids))


def test_orbits_shrink_e8_extension_vectors(upto16):
    rec = upto16[8].layers[4].records[0]
    reps, sizes = extension_orbits(transfer_map(rec.code, rec))
    assert sum(sizes) == 16 and len(reps) < 16

"""Oracle internals: enumeration, fibers, brute products, covering numbers,
commutator sets."""

import pytest

from sl2prod import (PSLLabel, SL2Label, all_classes_psl, all_classes_sl2,
                     brute_commutator_set, brute_pair_product,
                     brute_triple_product,
                     classify_sl2, commutator_expressible_psl,
                     covering_numbers, enumerate_sl2, make_field, mat_mul,
                     psl_classify, representative, verify_laws)

F5, F7 = make_field(5), make_field(7)


def test_enumeration_counts():
    assert enumerate_sl2(F5).order == 120
    assert enumerate_sl2(F7).order == 336
    assert enumerate_sl2(make_field(3, 2)).order == 720


def test_enumeration_bound():
    with pytest.raises(ValueError):
        enumerate_sl2(make_field(37), max_q=31)


def test_fibers_partition(F):
    T = enumerate_sl2(F)
    assert sum(len(v) for v in T.fiber.values()) == T.order
    assert len(T.fiber) == F.q + 4
    for L, members in T.fiber.items():
        assert all(classify_sl2(F, m) == L for m in members[:5])


def test_brute_pair_golden():
    out = brute_pair_product(enumerate_sl2(F5), SL2Label("U", 1), SL2Label("U", 1))
    assert sorted(map(str, out)) == ["I", "NSS[1]", "NU[1]", "U[2]"]
    T7 = enumerate_sl2(F7)
    out = brute_pair_product(T7, SL2Label("SS", 1), SL2Label("SS", 1))
    assert out == set(all_classes_sl2(F7)) - {SL2Label("-I")}
    for L in all_classes_sl2(F7):
        assert brute_pair_product(T7, SL2Label("I"), L) == {L}


def test_brute_pair_symmetric(small_F):
    T = enumerate_sl2(small_F)
    labs = all_classes_sl2(small_F)
    for L1 in labs:
        for L2 in labs:
            assert brute_pair_product(T, L1, L2) == brute_pair_product(T, L2, L1)


def test_paranoid_mode_agrees_q5():
    T = enumerate_sl2(F5)
    for L1 in all_classes_sl2(F5):
        for L2 in all_classes_sl2(F5):
            assert brute_pair_product(T, L1, L2) == \
                brute_pair_product(T, L1, L2, paranoid=True)


def test_composed_triple_matches_literal_q5():
    """Sanity-check the composition shortcut against a literal triple scan."""
    T = enumerate_sl2(F5)
    trips = [(SL2Label("U", 1), SL2Label("U", 1), SL2Label("U", 1)),
             (SL2Label("U", 1), SL2Label("U", 2), SL2Label("NSS", 1)),
             (SL2Label("NU", 1), SL2Label("SS", 0), SL2Label("U", 2))]
    for L1, L2, L3 in trips:
        z = representative(F5, L3)
        literal = {classify_sl2(F5, mat_mul(F5, mat_mul(F5, x, y), z), check=False)
                   for x in T.fiber[L1] for y in T.fiber[L2]}
        assert brute_triple_product(T, L1, L2, L3) == literal


def test_verify_reports(small_F):
    for kind in ("sl2", "psl2"):
        rep = verify_laws(small_F, kind, with_covering=False)
        assert rep.ok
        n = len(all_classes_sl2(small_F)) if kind == "sl2" \
            else len(all_classes_psl(small_F))
        assert rep.pair_count == n * n
        d = rep.to_dict()
        assert d["ok"] and d["pairs"]["failures"] == []


def test_verify_pair_count_example():
    assert verify_laws(F7, "sl2", with_covering=False).pair_count == 121


def test_covering_numbers_golden():
    assert covering_numbers(F7, "psl2") == (3, 4)
    assert covering_numbers(make_field(3, 2), "sl2") == (3, 4)
    # SL2(5) is the documented outlier: recorded, never asserted to be (3, 4)
    cn5, ecn5 = covering_numbers(F5, "sl2")
    assert (cn5, ecn5) != (3, 4) and cn5 is not None and ecn5 is not None


def test_brute_commutator_golden():
    got = brute_commutator_set(enumerate_sl2(F5), "psl2")
    assert got == set(all_classes_psl(F5)) - {PSLLabel("PSS", 0)}
    got7 = brute_commutator_set(enumerate_sl2(F7), "psl2")
    assert got7 == set(all_classes_psl(F7)) - {PSLLabel("PNSS", 0)}


def test_brute_commutator_matches_predicate(F):
    got = brute_commutator_set(enumerate_sl2(F), "psl2")
    want = {P for P in all_classes_psl(F) if commutator_expressible_psl(F, P)}
    assert got == want


def test_brute_commutator_sl2_kind():
    got = brute_commutator_set(enumerate_sl2(F5), "sl2")
    assert SL2Label("I") in got
    assert {psl_classify(F5, representative(F5, L)) for L in got} == \
        brute_commutator_set(enumerate_sl2(F5), "psl2")

import random

import pytest

from bvl.beauville import (
    STATUS_CERTIFICATE,
    STATUS_NONE_BUDGET,
    STATUS_NONE_EXHAUSTED,
    BeauvilleCertificate,
    NonIntegralGenusError,
    all_pairs_generate,
    genus_of_triple,
    is_generating_pair,
    search_beauville,
    search_gen_classes,
    sigma_set,
    verify_beauville,
    verify_certificate,
)
from bvl.catalog import build_group
from bvl.permgroup import MembershipError, PermGroup, Permutation, subgroup_order


def cyc(degree, *cycles):
    return Permutation.from_cycles(degree, cycles)


def test_sigma_set_examples():
    G = build_group("A5")
    cd = G.conjugacy_data()
    e = G.identity()
    s = sigma_set(G, cd, e, e)
    assert s.covered_labels == ("1a",) and s.element_count == 1
    x = cyc(5, (1, 2, 3, 4, 5))
    s = sigma_set(G, cd, x, x * x)
    assert s.covered_labels == ("1a", "5a", "5b") and s.element_count == 25
    y = next(
        g for g in cd.class_map.elements_of(cd.by_label("2a").index) if (x * g).order() == 3
    )
    s = sigma_set(G, cd, x, y)
    assert s.covered_labels == ("1a", "2a", "3a", "5a", "5b") and s.element_count == 60


def test_sigma_set_contains_pair_classes_and_identity():
    G = build_group("L2:7")
    cd = G.conjugacy_data()
    rng = random.Random(3)
    for _ in range(25):
        x, y = G.random_element(rng), G.random_element(rng)
        s = sigma_set(G, cd, x, y)
        for g in (G.identity(), x, y, x * y):
            assert cd.class_map.class_of(g) in s.covered


def test_sigma_set_conjugation_invariance():
    G = build_group("A6")
    cd = G.conjugacy_data()
    rng = random.Random(17)
    x, y = cyc(6, (1, 2, 3, 4, 5)), cyc(6, (1, 2), (3, 4, 5, 6))
    base = sigma_set(G, cd, x, y).covered
    for _ in range(100):
        g = G.random_element(rng)
        gi = g.inverse()
        assert sigma_set(G, cd, gi * x * g, gi * y * g).covered == base


def test_sigma_set_membership_error():
    G = build_group("A5")
    cd = G.conjugacy_data()
    with pytest.raises(MembershipError):
        sigma_set(G, cd, cyc(5, (1, 2)), G.identity())


def test_is_generating_pair():
    G = build_group("A5")
    assert is_generating_pair(G, cyc(5, (1, 2, 3)), cyc(5, (3, 4, 5)))
    assert not is_generating_pair(G, G.identity(), G.identity())
    assert not is_generating_pair(G, cyc(5, (1, 2, 3)), cyc(5, (1, 3, 2)))


def test_genus_examples():
    assert genus_of_triple(168, 3, 3, 4) == (8, True)
    assert genus_of_triple(60, 5, 5, 5) == (13, True)
    assert genus_of_triple(6, 2, 2, 3) == (0, False)
    with pytest.raises(NonIntegralGenusError):
        genus_of_triple(60, 7, 2, 2)  # 7 does not divide 60
    with pytest.raises(ValueError):
        genus_of_triple(60, 0, 2, 2)


def test_verify_refuses_identical_pairs():
    G = build_group("L2:7")
    r = search_beauville(G)
    assert r.status == STATUS_CERTIFICATE
    x1, y1 = Permutation(r.certificate.pairs[0]), Permutation(r.certificate.pairs[1])
    cert, reason = verify_beauville(G, (x1, y1), (x1, y1))
    assert cert is None and reason == "sigma-intersection"


def test_verify_refuses_non_generating_pair():
    G = build_group("A5")
    x = cyc(5, (1, 2, 3))
    cert, reason = verify_beauville(G, (x, x), (x, x))
    assert cert is None and reason == "generation-pair1"


def test_a5_admits_no_structure_on_any_generating_pairs():
    # two concrete generating pairs of A5 never verify (Theorem: A5 is excluded)
    G = build_group("A5")
    p1 = (cyc(5, (1, 2, 3)), cyc(5, (3, 4, 5)))
    p2 = (cyc(5, (1, 2, 3, 4, 5)), cyc(5, (1, 2), (3, 4)))
    assert is_generating_pair(G, *p1) and is_generating_pair(G, *p2)
    cert, reason = verify_beauville(G, p1, p2)
    assert cert is None and reason == "sigma-intersection"


def test_search_a5_exhausts():
    r = search_beauville(build_group("A5"), strategy="EXHAUSTIVE_CLASSES")
    assert r.status == STATUS_NONE_EXHAUSTED
    r = search_beauville(build_group("A5"), strategy="COPRIME_FIRST")
    assert r.status == STATUS_NONE_EXHAUSTED


def test_search_finds_and_roundtrips_certificates():
    for spec in ("L2:7", "A6"):
        G = build_group(spec)
        r = search_beauville(G, seed=0)
        assert r.status == STATUS_CERTIFICATE
        cert = r.certificate
        # re-verify from scratch against an independently built group
        fresh = build_group(spec)
        ok, reason = verify_certificate(fresh, cert)
        assert ok, reason
        # serialization round-trip
        again = BeauvilleCertificate.from_json_dict(cert.to_json_dict())
        ok, reason = verify_certificate(fresh, again)
        assert ok, reason


def test_search_rejects_unknown_strategy():
    with pytest.raises(ValueError):
        search_beauville(build_group("A5"), strategy="RANDOM")


def test_search_budget_exhaustion():
    r = search_beauville(build_group("L2:7"), budget=1)
    assert r.status == STATUS_NONE_BUDGET


def test_search_with_hyperbolicity_required():
    r = search_beauville(build_group("L2:7"), require_hyperbolic=True)
    assert r.status == STATUS_CERTIFICATE
    assert r.certificate.hyperbolic == [True, True]


def test_verify_rejects_tampered_hyperbolic_field():
    G = build_group("L2:7")
    cert = search_beauville(G).certificate
    cert.hyperbolic = [False, True]
    ok, reason = verify_certificate(G, cert)
    assert not ok and reason == "hyperbolic-mismatch"


def test_verify_rejects_wrong_degree_certificate():
    G = build_group("L2:7")
    cert = search_beauville(G).certificate
    cert.pairs = [list(range(1, 6)) for _ in range(4)]  # degree-5 identities
    ok, reason = verify_certificate(G, cert)
    assert not ok and reason == "degree-mismatch"


def test_search_seed_determinism():
    G1 = build_group("L2:11")
    G2 = build_group("L2:11")
    r1 = search_beauville(G1, seed=42)
    r2 = search_beauville(G2, seed=42)
    assert r1.certificate.to_json_dict() == r2.certificate.to_json_dict()


def test_coprime_orders_suffice():
    # generating pairs with coprime order triples always verify
    G = build_group("L2:13")
    r = search_beauville(G, strategy="COPRIME_FIRST")
    cert = r.certificate
    o1, o2 = cert.orders[:3], cert.orders[3:]
    prod1 = o1[0] * o1[1] * o1[2]
    prod2 = o2[0] * o2[1] * o2[2]
    from math import gcd

    assert gcd(prod1, prod2) == 1
    pairs = [Permutation(arr) for arr in cert.pairs]
    cert2, reason = verify_beauville(G, (pairs[0], pairs[1]), (pairs[2], pairs[3]))
    assert cert2 is not None, reason


def test_all_pairs_generate_examples():
    A5 = build_group("A5")
    g = all_pairs_generate(A5, "5a", "3a")
    assert g.all_generate and g.pairs_tested == 20
    g = all_pairs_generate(A5, "5a", "5b")
    assert not g.all_generate and g.counterexample is not None
    c, d = (Permutation(arr) for arr in g.counterexample)
    assert subgroup_order(A5, [c, d]) < A5.order


def test_all_pairs_generate_matches_full_double_loop():
    # soundness of the fixed-representative convention on a small group
    G = build_group("A5")
    cd = G.conjugacy_data()
    cmap = cd.class_map
    for c_lbl, d_lbl in (("5a", "3a"), ("5a", "5b"), ("3a", "3a")):
        fixed = all_pairs_generate(G, c_lbl, d_lbl).all_generate
        full = all(
            is_generating_pair(G, c, d)
            for c in cmap.elements_of(cd.by_label(c_lbl).index)
            for d in cmap.elements_of(cd.by_label(d_lbl).index)
        )
        assert fixed == full, (c_lbl, d_lbl)


def test_all_pairs_generate_multiple_c_classes():
    A6 = build_group("A6")
    g = all_pairs_generate(A6, ("5a", "5b"), "4a")
    assert g.all_generate and g.pairs_tested == 180


def test_search_gen_classes_a5():
    pairs = search_gen_classes(build_group("A5"))
    assert ("5a", "3a") in pairs and ("3a", "5a") in pairs
    assert ("5a", "5b") not in pairs
    assert all(lbl != "1a" for pair in pairs for lbl in pair)


def test_search_gen_classes_l2_11():
    pairs = search_gen_classes(build_group("L2:11"))
    assert ("6a", "5a") in pairs and ("6a", "5b") in pairs


def test_search_gen_classes_trivial_group():
    trivial = PermGroup([], degree=3, name="trivial")
    assert search_gen_classes(trivial) == []

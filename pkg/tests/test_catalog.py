import json

import pytest

from bvl.catalog import (
    GF,
    GroupSpec,
    build_group,
    classical_order,
    data_dir,
    lie_meta,
    load_group_file,
    parse_spec,
)
from bvl.numtheory import DomainError, is_prime_power

PSL2_PARAMS = (4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49)


def test_parse_spec_grammar():
    assert parse_spec("A5") == GroupSpec(family="ALT", n=5)
    assert parse_spec("S6") == GroupSpec(family="SYM", n=6)
    assert parse_spec("L2:7") == GroupSpec(family="PSL2", q=7)
    assert parse_spec("L3:3") == GroupSpec(family="PSL3", q=3)
    assert parse_spec("file:m11.json") == GroupSpec(family="FILE", path="m11.json")
    for bad in ("X5", "L4:2", "A", "L2:x", ""):
        with pytest.raises(DomainError):
            parse_spec(bad)


def test_gf_field_axioms():
    for q in (2, 3, 4, 5, 7, 8, 9, 25, 27, 49):
        F = GF(q)
        p, f = is_prime_power(q)
        assert (F.p, F.f) == (p, f)
        for a in range(q):
            assert F.add[a][0] == a
            assert F.mul[a][1] == a
            assert F.add[a][F.neg[a]] == 0
            if a:
                assert F.mul[a][F.inv[a]] == 1
        # a sampling of associativity/distributivity
        pts = list(range(min(q, 6)))
        for a in pts:
            for b in pts:
                for c in pts:
                    assert F.mul[a][F.add[b][c]] == F.add[F.mul[a][b]][F.mul[a][c]]
                    assert F.mul[F.mul[a][b]][c] == F.mul[a][F.mul[b][c]]


def test_build_group_examples():
    G = build_group("L2:7")
    assert (G.degree, G.order) == (8, 168)
    G = build_group("A5")
    assert (G.degree, G.order) == (5, 60)
    G = build_group("L3:2")
    assert (G.degree, G.order) == (7, 168)


def test_orders_match_classical_formulas():
    specs = [f"A{n}" for n in range(3, 13)]
    specs += [f"S{n}" for n in range(3, 13)]
    specs += [f"L2:{q}" for q in PSL2_PARAMS]
    specs += ["L3:2", "L3:3", "L3:5"]
    for text in specs:
        spec = parse_spec(text)
        assert build_group(spec).order == classical_order(spec), text


def test_out_of_range_parameters_rejected():
    for bad in ("A2", "A13", "S13", "L2:3", "L2:50", "L2:6", "L3:4", "L3:7"):
        with pytest.raises(DomainError):
            build_group(bad)


def test_psl2_two_transitive():
    for q in (5, 7, 9, 11):
        G = build_group(f"L2:{q}")
        pair = (1, 2)
        seen = {pair}
        stack = [pair]
        while stack:
            a, b = stack.pop()
            for g in G.generators:
                img = (g.apply(a), g.apply(b))
                if img not in seen:
                    seen.add(img)
                    stack.append(img)
        assert len(seen) == (q + 1) * q


def test_psl2_element_orders():
    # element orders are exactly {1, p} plus the divisors of both torus orders
    for q in (7, 8, 9, 13, 25):
        G = build_group(f"L2:{q}")
        p, _ = is_prime_power(q)
        d = 2 if q % 2 else 1
        expected = {1, p}
        for torus in ((q - 1) // d, (q + 1) // d):
            expected |= {k for k in range(1, torus + 1) if torus % k == 0}
        orders = {c.element_order for c in G.conjugacy_data().classes}
        assert orders == expected, q


def test_lie_meta():
    assert lie_meta("L2:11") == lie_meta(parse_spec("L2:11"))
    m = lie_meta("L2:11")
    assert (m.dim_G, m.rank, m.weyl_order, m.defining_prime) == (3, 1, 2, 11)
    m = lie_meta("L3:3")
    assert (m.dim_G, m.rank, m.weyl_order, m.defining_prime) == (8, 2, 6, 3)
    assert lie_meta("A7") is None
    assert lie_meta("S6") is None


def test_load_group_file_bundled():
    m11 = load_group_file("m11.json")
    assert (m11.name, m11.order) == ("M11", 7920)
    m12 = load_group_file("m12.json")
    assert (m12.name, m12.order) == ("M12", 95040)
    assert sum(c.size for c in m12.conjugacy_data().classes) == 95040


def test_load_group_file_rejects_bad_input(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"name": "X", "degree": 3, "generators": [[1, 1, 3]]}))
    with pytest.raises(DomainError, match="bijection"):
        load_group_file(bad)
    bad.write_text(json.dumps({"degree": 3, "generators": []}))
    with pytest.raises(DomainError, match="name"):
        load_group_file(bad)
    bad.write_text("{not json")
    with pytest.raises(DomainError, match="JSON"):
        load_group_file(bad)
    with pytest.raises(DomainError, match="not found"):
        load_group_file(tmp_path / "missing.json")


def test_data_dir_override(monkeypatch, tmp_path):
    payload = {"name": "C2", "degree": 2, "generators": [[2, 1]]}
    (tmp_path / "c2.json").write_text(json.dumps(payload))
    monkeypatch.setenv("BVL_DATA_DIR", str(tmp_path))
    assert data_dir() == tmp_path
    G = load_group_file("c2.json")
    assert G.order == 2

import pytest

import rootforge


def test_root_counts():
    assert len(rootforge.RootSystem("A1")) == 2
    assert len(rootforge.RootSystem("E8")) == 240
    s = rootforge.RootSystem("D4")
    a = s.simple_basis[0]
    assert s.pairing(a, a) == 2
    assert s.reflect(a, a) == s.negate(a)


def test_tables():
    assert rootforge.mu("E7") == 7
    assert rootforge.core_order("E8") == 1344
    b = rootforge.enhanced_basis("E7")
    assert len(b["labels"]) == 11
    assert b["moset"] == ["2", "3", "5", "7", "l1", "l3", "l4"]


def test_special_orbits():
    c = rootforge.Classifier("E7")
    orbits = c.orbits()
    assert len(orbits) == 46
    assert sum(o["special"] for o in orbits) == 12
    label = c.orbit_label(["2", "4", "5", "6", "7"])
    assert label["label"] == "[A5]^0"
    assert label["charge"] == 3


def test_conjugacy_and_embeddings():
    e8 = rootforge.Classifier("E8")
    v = e8.are_conjugate("2,4,5,6,7,8,l5".split(","), "3,4,5,6,7,8,l5".split(","))
    assert not v["conjugate"]
    assert (v["first"]["parity"], v["second"]["parity"]) == (0, 1)
    w = e8.is_weyl_embedding("2,4,5,6,7,8,l5".split(","), "3,1,l1,l2,2,l7,l5".split(","))
    assert not w["weyl"] and w["reason"] == "parity mismatch"
    e7 = rootforge.Classifier("E7")
    ok = e7.is_weyl_embedding(["7", "6", "ℓ3", "4"], ["1", "3", "4", "6"])
    assert ok["weyl"] and ok["witness"]


def test_order():
    c = rootforge.Classifier("E8")
    nodes, edges = c.hasse(special_only=True)
    assert len(nodes) == 10 and len(edges) == 10
    assert c.precedes("[4A1]^0", "E6")
    assert not c.precedes("[4A1]^1", "E6")
    assert "digraph" in c.hasse_dot(True)


def test_errors():
    with pytest.raises(rootforge.RootforgeError):
        rootforge.RootSystem("B3")
    with pytest.raises(ValueError):
        rootforge.Classifier("E7").roots(["l9"])

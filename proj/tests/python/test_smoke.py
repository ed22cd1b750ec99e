import json

import pytest

import pivotminor as pm


def test_graph_basics():
    g = pm.long_cycle(7)
    assert g.n == 7
    assert g.edge_count() == 7
    assert pm.Graph.from_graph6(g.graph6()) == g
    assert len(g.fingerprint()) == 16
    assert pm.complement(pm.complement(g)) == g


def test_pivot_on_c4():
    g = pm.Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    h = pm.pivot(g, 0, 1)
    # C4 abcd pivoted at a,b is the path c-a-b-d
    assert sorted(h.edges()) == [(0, 1), (0, 2), (1, 3)]
    with pytest.raises(ValueError):
        pm.pivot(g, 0, 2)


def test_oracle_and_verify():
    assert pm.has_pivot_minor(pm.long_cycle(6), 5) is None
    w = pm.has_pivot_minor(pm.long_cycle(7), 5)
    assert w is not None and w["k"] == 5
    assert pm.verify(pm.long_cycle(7), w) == (True, "")
    ok, why = pm.verify(pm.long_cycle(9), w)
    assert not ok and why


def test_cycle_reduce_and_pipeline():
    g = pm.long_cycle(11)
    w = pm.cycle_reduce(g, range(11), 5)
    assert pm.verify(g, w)[0]

    a = pm.anti_hole(30)
    report = pm.pipeline(a, 4)
    assert report["status"] == "ok"
    assert report["certificate"]["type"] == "witness"
    assert pm.verify(a, report["certificate"])[0]

    t = pm.caterpillar(300, 4, 1)
    report = pm.pipeline(t, 5)
    assert report["certificate"]["type"] == "pure_pair"
    assert min(report["achieved"]["frac_a"], report["achieved"]["frac_b"]) >= 0.01


def test_generators_are_seeded():
    assert pm.gnp(20, 0.5, 1) == pm.gnp(20, 0.5, 1)
    assert pm.bounded_degree(50, 3, 2).max_degree() <= 3
    assert pm.fan([3, 1]).n == 6


def test_skeleton_and_schema_errors():
    s = pm.skeleton(pm.long_cycle(8), 0)
    assert s["root"] == 0 and len(s["rmap"]) == 8
    with pytest.raises(ValueError):
        pm.verify(pm.long_cycle(5), json.dumps({"type": "banana"}))

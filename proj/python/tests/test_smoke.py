import json

import ggt


def test_clopen_algebra():
    a = ggt.Arity(2, 1)
    c0 = ggt.ClopenSet.parse(a, "[0:0]")
    c1 = ggt.ClopenSet.parse(a, "[0:1]")
    assert c0.complement() == c1
    assert str(c0.union(c1)) == "[0:]"
    assert c0.intersect(ggt.ClopenSet.parse(a, "[0:01]")) == ggt.ClopenSet.parse(a, "[0:01]")
    assert ggt.ClopenSet.parse(a, "[0:00, 0:01]") == c0  # siblings merge
    assert c0.is_proper_nonempty
    assert ggt.tuple_admissible([ggt.ClopenSet.parse(a, "[0:00]"), ggt.ClopenSet.parse(a, "[0:01]")])
    assert not ggt.tuple_admissible([c0, c1])  # union is everything


def test_tree_pair_elements():
    a = ggt.Arity(2, 1)
    ident = ggt.VElement.identity(a)
    g = ggt.VElement.random(a, seed=5, size=8)
    assert g.compose(g.inverse()) == ident
    assert g.inverse().compose(g) == ident
    assert ident.compose(g) == g
    full = ggt.ClopenSet.full(a)
    assert g.image(full).is_full
    assert g.compose(g.inverse()).fixed_set().is_full


def test_witnesses():
    a = ggt.Arity(2, 1)
    src = [ggt.ClopenSet.parse(a, "[0:00]"), ggt.ClopenSet.parse(a, "[0:01]")]
    dst = [ggt.ClopenSet.parse(a, "[0:10]"), ggt.ClopenSet.parse(a, "[0:110]")]
    w = ggt.transitivity_witness(a, src, dst)
    for s, d in zip(src, dst):
        assert w.image(s) == d

    g = ggt.VElement.random(a, seed=11, size=7)
    factors = ggt.decompose_bounded(a, g)
    assert 1 <= len(factors) <= 3
    prod = ggt.VElement.identity(a)
    for f in factors:
        prod = prod.compose(f)
    assert prod == g

    u = ggt.ClopenSet.parse(a, "[0:0, 0:10]")
    v = ggt.ClopenSet.parse(a, "[0:111]")
    f = ggt.extremely_proximal_witness(a, u, v)
    assert f.image(u).minus(v).is_empty


def test_circle_maps():
    half = ggt.CircleMap.rotation("1/2")
    assert half.compose(half) == ggt.CircleMap.identity()
    assert ggt.CircleMap.identity().eval("3/2^3") == "3/2^3"
    f = ggt.ordered_witness(["0", "1/4", "1/2"], ["0", "1/8", "3/4"])
    assert f.eval("1/4") == "1/2^3"
    assert f.eval("1/2") == "3/2^2"


def test_graph_kernels():
    assert ggt.delta_four_point(ggt.FiniteGraph.binary_tree(4)) == ("0", True)
    assert ggt.delta_four_point(ggt.FiniteGraph.cycle(4)) == ("1", True)
    p = ggt.FiniteGraph.path(12)
    base = len(p.edges())
    coned = ggt.cone_off_edges(p, [0], 2)
    assert len(coned) > base
    assert "dashed" in ggt.cone_off_dot(p, [0], 2)


def test_quasiline():
    rep = ggt.quasiline_word_lengths(3, 1, 20)
    assert rep["generating_set"] == [-2, -1, 1, 2]
    lengths = rep["word_length"]
    # ball is [-20..20]; |k|_X = ceil(|k|/2)
    for i, k in enumerate(range(-20, 21)):
        assert lengths[i] == (abs(k) + 1) // 2


def test_run_suite_deterministic():
    cfg = json.dumps({"suite": "delta", "seed": 4, "budget": 3})
    r1 = json.loads(ggt.run_suite(cfg))
    r2 = json.loads(ggt.run_suite(cfg))
    r1.pop("timestamp", None)
    r2.pop("timestamp", None)
    assert r1 == r2
    assert r1["counts"]["fail"] == 0
    assert len(ggt.list_suites()) >= 6

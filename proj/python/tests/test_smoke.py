import pytest

import arboreal as ab

G6_EDGES = [(a, b) for a in "123456" for b in "123456" if a < b and ({a, b} <= set("1234") or {a, b} <= set("3456"))]


def g6():
    return ab.Graph(list("123456"), G6_EDGES)


def c4():
    return ab.Graph(list("1234"), [("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")])


def test_ptolemaic_routes_agree():
    assert ab.is_ptolemaic(g6()) and ab.ptolemy_inequality_holds(g6())
    assert not ab.is_ptolemaic(c4()) and not ab.ptolemy_inequality_holds(c4())
    kind, vertices = ab.ptolemaic_obstruction(c4())
    assert kind == "hole" and sorted(vertices) == list("1234")
    assert ab.ptolemaic_obstruction(g6()) is None


def test_cliques_and_cover():
    assert ab.maximal_cliques(g6()) == [list("1234"), list("3456")]
    size, cover = ab.ecc_min(g6())
    assert size == 2 and cover == [list("1234"), list("3456")]


def test_representation():
    n = ab.arboreal_representation(g6())
    assert n is not None
    assert ab.is_arboreal(n) and len(n.roots) == 2 and ab.h_tilde(n) == 1
    assert [n.cluster(h) for h in n.hybrids] == [["3", "4"]]
    assert ab.shared_ancestry_graph(n) == g6()
    assert ab.arboreal_representation(c4()) is None
    five = ab.represent_with_cover(g6(), [["1", "2", "3"], ["1", "2", "4"], ["3", "4"], ["3", "5", "6"], ["4", "5", "6"]])
    assert len(five.roots) == 5


def test_explain_round_trip():
    d = ab.SymbolicMap.from_text("1\n2 a\n3 a b\n4 a b c\n5 a b c b\n6 - - c c c\n7 - - c c c a\n")
    assert ab.check_arboreal_conditions(d) is None
    ln = ab.explain(d)
    assert isinstance(ln, ab.LabelledNetwork)
    assert ab.evaluate_map(ln) == d
    assert ab.is_discriminating(ab.make_discriminating(ln))
    assert d("6", "7") == "a" and d("1", "7") is None


def test_violation():
    d = ab.SymbolicMap(list("xyz"), [("x", "y", "a"), ("x", "z", "b"), ("y", "z", "c")])
    v = ab.check_arboreal_conditions(d)
    assert v["kind"] == "Delta" and sorted(v["witness"]) == list("xyz")
    assert ab.explain(d)["kind"] == "Delta"


def test_worked_example_modules():
    dot, ring = "•", "◦"
    values = [("x", "y", ring), ("x", "z", dot), ("x", "t", dot), ("x", "u", None), ("y", "z", dot),
              ("y", "t", dot), ("y", "u", None), ("z", "t", dot), ("z", "u", None), ("t", "u", ring)]
    d = ab.SymbolicMap(list("xyztu"), values)
    assert ab.strong_clique_modules(d) == [["x", "y"], ["t", "u"], ["x", "y", "z", "t"]]


def test_json_round_trips():
    for seed in range(20):
        ln = ab.random_labelled_network(seed, symbols=3)
        assert ab.LabelledNetwork.from_json(ln.to_json()) == ln
        n = ab.random_network(seed)
        assert ab.Network.from_json(n.to_json()) == n
        d = ab.evaluate_map(ln)
        assert ab.SymbolicMap.from_json(d.to_json()) == d
        assert ab.SymbolicMap.from_text(d.to_text()) == d


def test_alternating_cycles_match_arboreality():
    for seed in range(200):
        n = ab.random_network(seed, hybrid_bias=0.6)
        assert ab.is_arboreal(n) != ab.has_alternating_cycle(n)
        assert ab.h_tilde(n) >= len(n.roots) - 1


def test_errors_are_raised():
    with pytest.raises(ab.ArborealError):
        ab.Graph(["a", "b"], [("a", "c")])
    with pytest.raises(ab.ArborealError):
        ab.Network.from_json('{"vertices": 2, "arcs": [[0, 1]], "leaves": {"1": "x"}}')

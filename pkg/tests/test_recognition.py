import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import bigraphs, path_graph, trees
from qbmg.bigraph import BiGraph, connected_components, disjoint_union, heart_vertices, induced_subgraph, is_connected
from qbmg.errors import EmptyGraph
from qbmg.formats import serialize_tree
from qbmg.genlab import EnumConfig, enumerate_bipartite, named_fixtures
from qbmg.recognition import Verdict, WitnessKind, heart_tree, recognize_with_colors
from qbmg.semantics import check_explains, check_least_resolved, explain, validate_lrt_structure


@pytest.mark.parametrize("name", ["P6", "C6", "Sunlet4"])
def test_fixtures_rejected(name):
    g = named_fixtures()[name]
    v = heart_tree(g)
    assert not v.accepted
    assert v.witness.kind is WitnessKind.HEARTLESS
    assert v.witness.vertices == tuple(range(g.n))


def test_p4_trace():
    v = heart_tree(path_graph(4))
    assert serialize_tree(v.tree) == "(x2[c=1,u=root],x3[c=0,u=root],x1[c=0,u=self],x4[c=1,u=self]);"
    assert check_explains(v.tree, path_graph(4))


def test_k23_star():
    g = BiGraph.from_edges([0, 0, 1, 1, 1], [(a, b) for a in (0, 1) for b in (2, 3, 4)])
    t = heart_tree(g).tree
    assert t.internal_nodes == (t.root,)
    assert all(t.truncs[x].value == "root" for x in t.leaves)


def test_p5_accepted():
    assert heart_tree(path_graph(5)).accepted


def test_single_vertex_and_empty():
    t = heart_tree(BiGraph.from_edges([1], [], ["solo"])).tree
    assert serialize_tree(t) == "solo[c=1,u=self];"
    with pytest.raises(EmptyGraph):
        heart_tree(BiGraph.from_edges([], []))


def test_recognize_with_colors_odd_cycle():
    v = recognize_with_colors(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert v.witness.kind is WitnessKind.ODD_CYCLE
    assert len(v.witness.vertices) == 5
    assert recognize_with_colors(3, [(0, 1), (1, 2)]).accepted


def test_verdict_holds_one_thing():
    with pytest.raises(ValueError):
        Verdict()


def test_small_connected_all_accepted():
    for g in enumerate_bipartite(EnumConfig(5, connected_only=True)):
        assert heart_tree(g).accepted


def test_witness_describe():
    v = heart_tree(named_fixtures()["P6"])
    assert v.witness.describe(named_fixtures()["P6"].names) == "heartless: x1 x2 x3 x4 x5 x6"


@settings(max_examples=300, deadline=None)
@given(trees(max_leaves=24))
def test_round_trip_and_least_resolved(t):
    g = explain(t).graph
    v = heart_tree(g)
    assert v.accepted
    assert explain(v.tree).graph.named_edges() == g.named_edges()
    assert check_least_resolved(v.tree, g)
    assert validate_lrt_structure(v.tree, g) == []


@settings(max_examples=300, deadline=None)
@given(bigraphs(max_n=12))
def test_determinism_and_witness_soundness(g):
    a, b = heart_tree(g), heart_tree(g)
    if a.accepted:
        assert serialize_tree(a.tree) == serialize_tree(b.tree)
        assert check_explains(a.tree, g)
    else:
        assert a.witness == b.witness
        sub, _ = induced_subgraph(g, a.witness.vertices)
        assert is_connected(sub)
        assert heart_vertices(sub) == []


@settings(max_examples=200, deadline=None)
@given(trees(max_leaves=16), st.data())
def test_hereditary(t, data):
    g = explain(t).graph
    vs = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    sub, _ = induced_subgraph(g, vs)
    assert heart_tree(sub).accepted


@settings(max_examples=200, deadline=None)
@given(bigraphs(max_n=12))
def test_union_iff_components(g):
    comps = [induced_subgraph(g, c)[0] for c in connected_components(g)]
    assert heart_tree(g).accepted == all(heart_tree(c).accepted for c in comps)


def test_union_with_p6_rejected():
    ok = path_graph(5)
    u = disjoint_union([ok, named_fixtures()["P6"]], prefixes=["a", "b"])
    v = heart_tree(u)
    assert not v.accepted
    assert [u.names[x] for x in v.witness.vertices] == [f"bx{i}" for i in range(1, 7)]

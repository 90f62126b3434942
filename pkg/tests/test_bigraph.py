import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import bigraphs, named_graph, path_graph, to_nx
from qbmg.bigraph import (
    BiGraph,
    OddCycleWitness,
    connected_components,
    disjoint_union,
    heart_vertices,
    induced_subgraph,
    infer_bipartition,
    is_connected,
)
from qbmg.errors import GraphError, MonochromaticEdge, OutOfRange


def test_p4_from_edges():
    g = BiGraph.from_edges([0, 1, 0, 1], [(0, 1), (1, 2), (2, 3)])
    assert g.names == ("x1", "x2", "x3", "x4")
    assert list(g.edges()) == [(0, 1), (1, 2), (2, 3)]
    assert g.num_edges == 3
    assert g.color_classes == ((0, 2), (1, 3))


def test_edges_are_deduplicated_and_order_free():
    a = BiGraph.from_edges([0, 1, 0], [(1, 0), (0, 1), (2, 1)])
    b = BiGraph.from_edges([0, 1, 0], [(0, 1), (1, 2)])
    assert a == b


def test_monochromatic_edge_rejected():
    with pytest.raises(MonochromaticEdge):
        BiGraph.from_edges([0, 0], [(0, 1)])


def test_out_of_range_and_self_loop():
    with pytest.raises(OutOfRange):
        BiGraph.from_edges([0, 1], [(0, 2)])
    with pytest.raises(GraphError):
        BiGraph.from_edges([0, 1], [(1, 1)])


def test_raw_constructor_validates_symmetry():
    with pytest.raises(GraphError):
        BiGraph(("a", "b"), (0, 1), ((1,), ()))
    with pytest.raises(GraphError):
        BiGraph(("a", "a"), (0, 1), ((), ()))


def test_infer_bipartition_path():
    g = infer_bipartition(4, [(0, 1), (1, 2), (2, 3)])
    assert isinstance(g, BiGraph)
    assert g.colors == (0, 1, 0, 1)


def test_infer_bipartition_triangle_witness():
    w = infer_bipartition(3, [(0, 1), (1, 2), (0, 2)])
    assert isinstance(w, OddCycleWitness)
    assert len(w) == 3
    assert sorted(w.cycle) == [0, 1, 2]


def test_infer_bipartition_isolated_vertices():
    g = infer_bipartition(3, [])
    assert g.colors == (0, 0, 0)


def test_two_cherries_graph_has_two_components():
    g = named_graph({"x1": 0, "x2": 1, "x3": 0, "x4": 1}, [("x1", "x2"), ("x3", "x4")])
    assert connected_components(g) == [[0, 1], [2, 3]]
    assert not is_connected(g)


def test_heart_vertices_examples():
    assert heart_vertices(path_graph(4)) == [1, 2]
    assert heart_vertices(path_graph(6)) == []
    k23 = BiGraph.from_edges([0, 0, 1, 1, 1], [(a, b) for a in (0, 1) for b in (2, 3, 4)])
    assert heart_vertices(k23) == [0, 1, 2, 3, 4]
    # empty opposite class: vacuous heart
    assert heart_vertices(BiGraph.from_edges([0, 0], [])) == [0, 1]


def test_induced_subgraph_back_map():
    g = path_graph(5)
    sub, ids = induced_subgraph(g, [4, 1, 2])
    assert ids == (1, 2, 4)
    assert sub.names == ("x2", "x3", "x5")
    assert list(sub.edges()) == [(0, 1)]


def test_disjoint_union_prefixes():
    u = disjoint_union([path_graph(2), path_graph(3)], prefixes=["a.", "b."])
    assert u.n == 5
    assert u.names[0] == "a.x1" and u.names[2] == "b.x1"
    assert list(u.edges()) == [(0, 1), (2, 3), (3, 4)]


@settings(max_examples=200, deadline=None)
@given(bigraphs(), st.data())
def test_induced_subgraph_property(g, data):
    vs = data.draw(st.sets(st.integers(0, g.n - 1)))
    sub, ids = induced_subgraph(g, vs)
    assert sub.colors == tuple(g.colors[v] for v in ids)
    got = {(ids[a], ids[b]) for a, b in sub.edges()}
    want = {(u, v) for u, v in g.edges() if u in vs and v in vs}
    assert got == want


@settings(max_examples=200, deadline=None)
@given(bigraphs())
def test_heart_vertices_by_definition(g):
    want = [
        x for x in range(g.n)
        if set(g.adjacency[x]) == {y for y in range(g.n) if g.colors[y] != g.colors[x]}
    ]
    assert heart_vertices(g) == want


@settings(max_examples=200, deadline=None)
@given(bigraphs())
def test_components_match_networkx(g):
    comps = connected_components(g)
    assert sorted(v for c in comps for v in c) == list(range(g.n))
    assert [min(c) for c in comps] == sorted(min(c) for c in comps)
    want = sorted(sorted(c) for c in nx.connected_components(to_nx(g)))
    assert sorted(comps) == want
    part = {v: i for i, c in enumerate(comps) for v in c}
    assert all(part[u] == part[v] for u, v in g.edges())


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 12), st.data())
def test_infer_bipartition_property(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = data.draw(st.lists(st.sampled_from(pairs), max_size=20, unique=True)) if pairs else []
    out = infer_bipartition(n, edges)
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(edges)
    if isinstance(out, BiGraph):
        assert nx.is_bipartite(h)
        assert all(out.colors[u] != out.colors[v] for u, v in edges)
        assert {tuple(sorted(e)) for e in edges} == set(out.edges())
    else:
        assert not nx.is_bipartite(h)
        cyc = out.cycle
        assert len(cyc) % 2 == 1
        for i in range(len(cyc)):
            assert h.has_edge(cyc[i], cyc[(i + 1) % len(cyc)])

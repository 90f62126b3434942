import networkx as nx
import pytest
from hypothesis import strategies as st

from qbmg.bigraph import BiGraph
from qbmg.formats import parse_tree
from qbmg.genlab import TreeGenConfig, random_tree

TWO_CHERRIES = "((x1[c=0,u=root],x2[c=1,u=self]),(x3[c=0,u=root],x4[c=1,u=root]));"
P4_TREE = "(x1[c=1,u=self],x2[c=0,u=root],(x3[c=1,u=root],x4[c=0,u=root]));"
P5_TREE = "((x1[c=1,u=root],x2[c=0,u=root]),x3[c=1,u=root],(x4[c=0,u=root],x5[c=1,u=root]));"
SELF_ENDS_TREE = "(x1[c=1,u=self],(x2[c=0,u=root],x3[c=1,u=root]),x4[c=0,u=root],x5[c=1,u=self]);"
TRIPLE_TREE = "((x1[c=1,u=root],x2[c=0,u=root],x3[c=1,u=root]),x4[c=0,u=root],x5[c=1,u=self]);"
PATH3_NESTED = "((x[c=1,u=root],y[c=0,u=root]),z[c=1,u=root]);"
PATH3_STAR = "(x[c=1,u=root],y[c=0,u=root],z[c=1,u=root]);"


def named_graph(colors: dict, edges) -> BiGraph:
    names = list(colors)
    idx = {s: i for i, s in enumerate(names)}
    return BiGraph.from_edges([colors[s] for s in names], [(idx[a], idx[b]) for a, b in edges], names)


def path_graph(n: int, first_color: int = 0) -> BiGraph:
    return BiGraph.from_edges([(first_color + i) % 2 for i in range(n)], [(i, i + 1) for i in range(n - 1)])


def to_nx(g: BiGraph) -> nx.Graph:
    h = nx.Graph()
    for v, c in enumerate(g.colors):
        h.add_node(v, color=c)
    h.add_edges_from(g.edges())
    return h


@st.composite
def bigraphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    colors = draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if colors[u] != colors[v]]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return BiGraph.from_edges(colors, [p for p, k in zip(pairs, keep) if k])


@st.composite
def trees(draw, min_leaves=1, max_leaves=16):
    cfg = TreeGenConfig(
        draw(st.integers(min_leaves, max_leaves)),
        draw(st.integers(0, 2**32)),
        internal_bias=draw(st.sampled_from([0.2, 0.5, 0.9])),
        trunc_self_prob=draw(st.sampled_from([0.0, 0.3, 0.7])),
    )
    return random_tree(cfg)


@pytest.fixture
def two_cherries():
    return parse_tree(TWO_CHERRIES)


@pytest.fixture
def path3_trees():
    return parse_tree(PATH3_NESTED), parse_tree(PATH3_STAR)


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import to_nx
from qbmg.bigraph import BiGraph, is_connected
from qbmg.errors import SizeCapExceeded
from qbmg.genlab import (
    PRNG_NAME,
    CrossCheckDisagreement,
    CrossCheckRecord,
    CrossCheckReport,
    EnumConfig,
    SplitMix64,
    TreeGenConfig,
    canonical_form,
    cross_check,
    enumerate_bipartite,
    loglog_exponent,
    named_fixtures,
    random_bipartite,
    random_tree,
)
from qbmg.oracles import find_forbidden
from qbmg.recognition import heart_tree

# labeled connected colored graphs with n <= 5, as produced by the enumerator
N5 = 235


def test_splitmix64_reference_values():
    # first outputs for seed 0 of the published reference generator
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]
    assert PRNG_NAME == "splitmix64"


def test_splitmix64_ranges():
    rng = SplitMix64(42)
    xs = [rng.below(7) for _ in range(2000)]
    assert set(xs) == set(range(7))
    assert all(0.0 <= rng.random() < 1.0 for _ in range(1000))
    assert all(3 <= rng.between(3, 5) <= 5 for _ in range(100))


def test_random_tree_is_seeded():
    a = random_tree(TreeGenConfig(12, 7))
    b = random_tree(TreeGenConfig(12, 7))
    c = random_tree(TreeGenConfig(12, 8))
    assert a == b
    assert a != c or a.names != c.names


def test_random_tree_star_when_no_bias():
    t = random_tree(TreeGenConfig(9, 3, internal_bias=0.0))
    assert t.internal_nodes == (t.root,)


def test_tree_config_validation():
    with pytest.raises(ValueError):
        TreeGenConfig(0, 1)
    with pytest.raises(ValueError):
        TreeGenConfig(3, 1, color_prob=1.5)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 30), st.integers(0, 2**64 - 1), st.floats(0, 1))
def test_random_tree_valid(k, seed, bias):
    t = random_tree(TreeGenConfig(k, seed, internal_bias=bias))
    assert len(t.leaves) == k
    assert sorted(t.names[v] for v in t.leaves) == sorted(f"x{i + 1}" for i in range(k))


def test_random_bipartite_seeded():
    assert random_bipartite(12, 0.4, 5) == random_bipartite(12, 0.4, 5)
    g = random_bipartite(12, 1.0, 5)
    assert g.num_edges == len(g.color_classes[0]) * len(g.color_classes[1])


def reference_connected_count(n: int) -> int:
    # each connected bipartite graph has two colorings; keep those whose
    # color-1 class has at most n // 2 vertices
    if n == 1:
        return 1
    total = 0
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(p for i, p in enumerate(pairs) if mask >> i & 1)
        if not nx.is_connected(h) or not nx.is_bipartite(h):
            continue
        ones = sum(nx.bipartite.color(h).values())
        total += 2 if 2 * ones == n else 1
    return total


def test_n5_regression_constant():
    corpus = list(enumerate_bipartite(EnumConfig(5, connected_only=True)))
    assert len(corpus) == N5
    assert len(corpus) == sum(reference_connected_count(n) for n in range(1, 6))
    assert all(is_connected(g) for g in corpus)


def test_enumeration_counts_all_labeled():
    counts = {}
    for g in enumerate_bipartite(EnumConfig(4)):
        counts[g.n] = counts.get(g.n, 0) + 1
    assert counts == {1: 1, 2: 5, 3: 13, 4: 1 + 4 * 8 + 6 * 16}


def test_enumeration_cap():
    with pytest.raises(SizeCapExceeded):
        next(enumerate_bipartite(EnumConfig(9)))


def test_n6_iso_classes():
    classes = list(enumerate_bipartite(EnumConfig(6, connected_only=True, dedupe="iso", min_n=6)))
    # independent count of color-preserving isomorphism classes
    labeled = [g for g in enumerate_bipartite(EnumConfig(6, connected_only=True, min_n=6))]
    reps: list[nx.Graph] = []
    match = nx.algorithms.isomorphism.categorical_node_match("color", None)
    for g in labeled:
        h = to_nx(g)
        if not any(nx.is_isomorphic(h, r, node_match=match) for r in reps):
            reps.append(h)
    assert len(classes) == len(reps) == 20
    rejected = [g for g in classes if not heart_tree(g).accepted]
    with_pattern = [g for g in classes if find_forbidden(g) is not None]
    assert len(rejected) == len(with_pattern) == 2
    assert {find_forbidden(g).pattern for g in with_pattern} == {"P6", "C6"}


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 7), st.integers(0, 2**32), st.data())
def test_canonical_form_is_relabel_invariant(n, seed, data):
    g = random_bipartite(n, 0.5, seed)
    perm = data.draw(st.permutations(range(n)))
    inv = {v: i for i, v in enumerate(perm)}
    h = BiGraph.from_edges([g.colors[perm[i]] for i in range(n)], [(inv[u], inv[v]) for u, v in g.edges()])
    assert canonical_form(g) == canonical_form(h)


def test_cross_check_small_and_fixtures():
    report = cross_check(enumerate_bipartite(EnumConfig(5, connected_only=True)))
    assert report.total == N5 and report.accepted == N5 and report.disagreements == 0
    fx = cross_check(named_fixtures().values())
    assert fx.rejected == 3 and fx.accepted == 0


def test_cross_check_random_n10():
    corpus = (random_bipartite(1 + seed % 10, 0.2 + (seed % 5) * 0.1, seed) for seed in range(10_000))
    report = cross_check(corpus)
    assert report.total == 10_000
    assert report.disagreements == 0


def test_cross_check_workers_same_output():
    corpus = list(enumerate_bipartite(EnumConfig(5)))
    assert cross_check(corpus, workers=2).to_text() == cross_check(corpus).to_text()


def test_report_text():
    report = CrossCheckReport([CrossCheckRecord(0, 3, True, True, True), CrossCheckRecord(1, 6, False, False, False)])
    text = report.to_text()
    lines = text.splitlines()
    assert lines[1] == "# prng\tsplitmix64"
    assert lines[3] == "0\t3\taccept\taccept\taccept"
    assert "disagreements\t0" in lines
    assert report.by_size() == {3: (1, 0), 6: (0, 1)}


def test_disagreement_halts(monkeypatch):
    import qbmg.genlab as genlab

    monkeypatch.setattr(genlab, "_verdicts", lambda item: CrossCheckRecord(item[0], item[1].n, True, False, True))
    corpus = [named_fixtures()["P6"]]
    with pytest.raises(CrossCheckDisagreement) as info:
        cross_check(corpus)
    assert info.value.graph_text.startswith("v x1 0\n")
    assert cross_check(corpus, halt=False).disagreements == 1


def test_loglog_exponent():
    ns = [100, 200, 400, 800]
    assert loglog_exponent(ns, [n**3 * 1e-9 for n in ns]) == pytest.approx(3.0)

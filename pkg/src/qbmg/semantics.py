"""From a tree ``(T, sigma, u)`` to the graphs it explains.

Two independent routes compute the explained undirected graph:
:func:`explain` symmetrizes the directed quasi-best-match graph, while
:func:`explain_direct` evaluates the pairwise condition literally with
``lca`` and ancestor tests. Tests hold them against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bigraph import BiGraph, connected_components
from .errors import MonochromaticComponent, NameMismatch, NotExplaining
from .phylo import (
    PhyloTree,
    Trunc,
    _check_leaf,
    _lca,
    contract_arc,
    graft,
    internal_arcs,
    is_ancestor,
    subtree_colors,
)


@dataclass(frozen=True)
class ExplainedGraph:
    """``graph`` vertex ``i`` is tree leaf ``leaves[i]``."""

    graph: BiGraph
    leaves: tuple[int, ...]


@dataclass(frozen=True)
class DirectedQbmg:
    names: tuple[str, ...]
    colors: tuple[int, ...]
    out_arcs: tuple[tuple[int, ...], ...]
    leaves: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.colors)

    def arcs(self) -> list[tuple[int, int]]:
        return [(x, y) for x, targets in enumerate(self.out_arcs) for y in targets]

    def underlying(self) -> BiGraph:
        return BiGraph.from_edges(self.colors, self.arcs(), self.names)


def best_matches(t: PhyloTree, x: int, *, naive: bool = False) -> frozenset[int]:
    """Leaves ``y`` of the other color whose ``lca`` with ``x`` is lowest.

    The default walks up from ``x`` to the first ancestor holding the other
    color. ``naive=True`` compares ``lca(x, y)`` against every ``lca(x, z)``.
    """
    _check_leaf(t, x)
    other = 1 - t.colors[x]
    if naive:
        rivals = [z for z in t.leaves if t.colors[z] == other]
        return frozenset(
            y for y in rivals
            if all(is_ancestor(t, _lca(t, x, z), _lca(t, x, y)) for z in rivals)
        )
    anchor = _first_mixed_ancestor(t, x)
    if anchor is None:
        return frozenset()
    return frozenset(y for y in t.leaves_below(anchor) if t.colors[y] == other)


def _first_mixed_ancestor(t: PhyloTree, x: int) -> int | None:
    bit = 1 << (1 - t.colors[x])
    mask, par = t._color_mask, t.parent
    v: int | None = x
    while v is not None and not mask[v] & bit:
        v = par[v]
    return v


def directed_qbmg(t: PhyloTree) -> DirectedQbmg:
    """Arc ``x -> y`` iff ``u(x)`` is the root and ``y`` is a best match of ``x``."""
    leaves = t.leaves
    pos = {v: i for i, v in enumerate(leaves)}
    cache: dict[tuple[int, int], list[int]] = {}
    out = []
    for x in leaves:
        if t.truncs[x] is not Trunc.ROOT:
            out.append(())
            continue
        anchor = _first_mixed_ancestor(t, x)
        if anchor is None:
            out.append(())
            continue
        other = 1 - t.colors[x]
        key = (anchor, other)
        if key not in cache:
            cache[key] = sorted(pos[y] for y in t.leaves_below(anchor) if t.colors[y] == other)
        out.append(tuple(cache[key]))
    return DirectedQbmg(
        tuple(t.names[v] for v in leaves),
        tuple(t.colors[v] for v in leaves),
        tuple(out),
        leaves,
    )


def explain(t: PhyloTree) -> ExplainedGraph:
    """The undirected graph explained by ``t``: the symmetrized 2-qBMG."""
    d = directed_qbmg(t)
    return ExplainedGraph(d.underlying(), d.leaves)


def explain_direct(t: PhyloTree) -> ExplainedGraph:
    """Literal pairwise evaluation; cubic, meant as a cross-check on small trees."""
    leaves = t.leaves
    by_color = {c: [z for z in leaves if t.colors[z] == c] for c in (0, 1)}

    def reaches(x: int, y: int) -> bool:
        # u(x) != x and y lies below lca(x, z) for every z colored like y
        if t.truncs[x] is not Trunc.ROOT:
            return False
        return all(is_ancestor(t, _lca(t, x, z), y) for z in by_color[t.colors[y]])

    edges = []
    for i, x in enumerate(leaves):
        for j in range(i + 1, len(leaves)):
            y = leaves[j]
            if t.colors[x] != t.colors[y] and (reaches(x, y) or reaches(y, x)):
                edges.append((i, j))
    graph = BiGraph.from_edges(
        [t.colors[v] for v in leaves], edges, [t.names[v] for v in leaves]
    )
    return ExplainedGraph(graph, leaves)


def _same_graph(a: BiGraph, b: BiGraph) -> bool:
    if set(a.names) != set(b.names):
        return False
    ib = b.index
    if any(b.colors[ib[name]] != c for name, c in zip(a.names, a.colors)):
        return False
    return a.named_edges() == b.named_edges()


def check_explains(t: PhyloTree, g: BiGraph) -> bool:
    """Does ``t`` explain exactly ``g``? Vertices are matched by name."""
    tree_names = {t.names[v] for v in t.leaves}
    if tree_names != set(g.names):
        missing = sorted(set(g.names) - tree_names)
        extra = sorted(tree_names - set(g.names))
        raise NameMismatch(f"leaf/vertex names differ; graph only: {missing}, tree only: {extra}")
    return _same_graph(explain(t).graph, g)


def check_least_resolved(t: PhyloTree, g: BiGraph) -> bool:
    """True iff no single internal-arc contraction of ``t`` still explains ``g``.

    This certifies minimality against single contractions only.
    """
    if not check_explains(t, g):
        raise NotExplaining("tree does not explain the graph")
    for v, w in internal_arcs(t):
        if _same_graph(explain(contract_arc(t, v, w)).graph, g):
            return False
    return True


@dataclass(frozen=True)
class Violation:
    kind: str  # "no-edge-lca", "monochromatic", "neighbor-case"
    node: int | None
    detail: str

    def __str__(self):
        return f"{self.kind}: {self.detail}"


def validate_lrt_structure(t: PhyloTree, g: BiGraph) -> list[Violation]:
    """Structural audit of an explaining tree.

    Checks that every internal node is the ``lca`` of some edge, that no
    internal subtree is monochromatic, and that every edge ``xy`` has the
    parent of one endpoint (with truncation at the root) above the other.
    When ``g`` is disconnected the root is exempt from the first two checks,
    since nothing forces edges across components.
    """
    if not check_explains(t, g):
        raise NotExplaining("tree does not explain the graph")
    leaf = t.leaf_by_name
    pairs = [(leaf[g.names[a]], leaf[g.names[b]]) for a, b in g.edges()]
    connected = len(connected_components(g)) == 1
    out: list[Violation] = []

    edge_lcas = {_lca(t, x, y) for x, y in pairs}
    for v in t.internal_nodes:
        if v == t.root and not connected:
            continue
        if v not in edge_lcas:
            out.append(Violation("no-edge-lca", v, f"internal node {v} is not the lca of any edge"))
        if len(subtree_colors(t, v)) < 2:
            out.append(Violation("monochromatic", v, f"subtree at {v} is monochromatic"))

    par = t.parent
    for x, y in pairs:
        ok_x = t.truncs[x] is Trunc.ROOT and is_ancestor(t, par[x], y) if par[x] is not None else False
        ok_y = t.truncs[y] is Trunc.ROOT and is_ancestor(t, par[y], x) if par[y] is not None else False
        if not (ok_x or ok_y):
            out.append(Violation(
                "neighbor-case", None,
                f"edge {t.names[x]}-{t.names[y]}: neither parent covers the other endpoint",
            ))
    return out


def union_explainer(trees: Sequence[PhyloTree]) -> PhyloTree:
    """One tree explaining the disjoint union of the graphs the inputs explain.

    Multi-leaf inputs must use both colors; single-leaf inputs must truncate
    at themselves, otherwise the new root would create edges across inputs.
    """
    for k, sub in enumerate(trees):
        if len(sub.leaves) == 1:
            if sub.truncs[sub.leaves[0]] is not Trunc.SELF:
                raise MonochromaticComponent(f"single-leaf input {k} must have u=self")
        elif len(subtree_colors(sub, sub.root)) < 2:
            raise MonochromaticComponent(f"input {k} is monochromatic")
    return graft(trees)

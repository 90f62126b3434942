"""HEART-TREE: recognize un2qBMGs and build a least-resolved explaining tree."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .bigraph import BiGraph, OddCycleWitness, components_within, heart_vertices_within, infer_bipartition
from .errors import EmptyGraph
from .phylo import PhyloTree, Trunc


class WitnessKind(str, enum.Enum):
    HEARTLESS = "heartless"
    FORBIDDEN = "forbidden"
    ODD_CYCLE = "odd-cycle"


@dataclass(frozen=True)
class Witness:
    """Evidence that a graph is not a un2qBMG.

    ``vertices`` are ids of the input graph: the heartless subset (sorted),
    the image of the pattern in template order, or the odd cycle in walk
    order. ``pattern`` is set for forbidden-pattern witnesses only.
    """

    kind: WitnessKind
    vertices: tuple[int, ...]
    pattern: str | None = None

    def describe(self, names: Sequence[str] | None = None) -> str:
        shown = " ".join(names[v] if names else str(v) for v in self.vertices)
        label = self.pattern if self.kind is WitnessKind.FORBIDDEN else self.kind.value
        return f"{label}: {shown}"


@dataclass(frozen=True)
class Verdict:
    tree: PhyloTree | None = None
    witness: Witness | None = None

    def __post_init__(self):
        if (self.tree is None) == (self.witness is None):
            raise ValueError("a verdict holds exactly one of tree or witness")

    @property
    def accepted(self) -> bool:
        return self.tree is not None


def heart_tree(g: BiGraph) -> Verdict:
    """Run HEART-TREE on a colored bipartite graph.

    Pending leaves are processed first-in first-out. Each processed node
    receives its heart-vertices as leaf children (u=root) in ascending id
    order, then one child per component of the remainder, ordered by
    smallest member: singletons become leaves with u=self, larger
    components become new pending nodes.
    """
    n = g.n
    if n == 0:
        raise EmptyGraph()
    if n == 1:
        return Verdict(tree=PhyloTree.single(g.names[0], g.colors[0]))

    children: list[list[int]] = [[]]
    leaf_of: list[int | None] = [None]  # graph vertex held by each node
    truncs: list[Trunc | None] = [None]
    pending = deque([(0, list(range(n)))])

    def add_node(parent: int, vertex: int | None, trunc: Trunc | None) -> int:
        node = len(children)
        children.append([])
        leaf_of.append(vertex)
        truncs.append(trunc)
        children[parent].append(node)
        return node

    while pending:
        v, members = pending.popleft()
        hearts = heart_vertices_within(g, members)
        if not hearts:
            comps = components_within(g, members)
            if len(comps) == 1:
                return Verdict(witness=Witness(WitnessKind.HEARTLESS, tuple(members)))
        else:
            hs = set(hearts)
            comps = components_within(g, [x for x in members if x not in hs])
        for x in hearts:
            add_node(v, x, Trunc.ROOT)
        for comp in comps:
            if len(comp) == 1:
                add_node(v, comp[0], Trunc.SELF)
            else:
                pending.append((add_node(v, None, None), comp))

    return Verdict(tree=PhyloTree(
        tuple(tuple(c) for c in children),
        tuple(g.names[x] if x is not None else None for x in leaf_of),
        tuple(g.colors[x] if x is not None else None for x in leaf_of),
        tuple(truncs),
    ))


def recognize_with_colors(
    n: int, edges: Iterable[tuple[int, int]], names: Sequence[str] | None = None
) -> Verdict:
    """Infer the bipartition first; an odd cycle is a rejection, not an error."""
    if n == 0:
        raise EmptyGraph()
    g = infer_bipartition(n, edges, names)
    if isinstance(g, OddCycleWitness):
        return Verdict(witness=Witness(WitnessKind.ODD_CYCLE, g.cycle))
    return heart_tree(g)

"""Vertex-colored bipartite graphs on dense integer ids.

Vertices are ``0..n-1``; every algorithm in the package works on ids and
only the text formats look at ``names``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import GraphError, MonochromaticEdge, OutOfRange


def default_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


@dataclass(frozen=True)
class BiGraph:
    """Immutable properly 2-colored graph.

    ``adjacency[v]`` is the sorted tuple of neighbors of ``v``. Use
    :meth:`from_edges` rather than the raw constructor; it normalizes and
    validates the edge list.
    """

    names: tuple[str, ...]
    colors: tuple[int, ...]
    adjacency: tuple[tuple[int, ...], ...]
    _validate: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        if not self._validate:
            return
        n = len(self.colors)
        if len(self.names) != n or len(self.adjacency) != n:
            raise GraphError("names, colors and adjacency must have equal length")
        if len(set(self.names)) != n or not all(self.names):
            raise GraphError("vertex names must be unique and nonempty")
        for c in self.colors:
            if c not in (0, 1):
                raise GraphError(f"color must be 0 or 1, got {c!r}")
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"adjacency of {v} is not sorted and duplicate-free")
            for w in nbrs:
                if not 0 <= w < n or w == v:
                    raise OutOfRange(f"bad neighbor {w} of {v}")
                if v not in self.adjacency_sets[w]:
                    raise GraphError(f"adjacency is not symmetric at {v}-{w}")
                if self.colors[v] == self.colors[w]:
                    raise MonochromaticEdge(v, w)

    @classmethod
    def from_edges(
        cls,
        colors: Sequence[int],
        edges: Iterable[tuple[int, int]],
        names: Sequence[str] | None = None,
    ) -> "BiGraph":
        n = len(colors)
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRange(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if colors[u] == colors[v]:
                raise MonochromaticEdge(u, v)
            nbrs[u].add(v)
            nbrs[v].add(u)
        names = tuple(names) if names is not None else default_names(n)
        return cls(names, tuple(int(c) for c in colors), tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def n(self) -> int:
        return len(self.colors)

    def __len__(self) -> int:
        return len(self.colors)

    @cached_property
    def adjacency_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    @cached_property
    def index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    @cached_property
    def color_classes(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (
            tuple(v for v, c in enumerate(self.colors) if c == 0),
            tuple(v for v, c in enumerate(self.colors) if c == 1),
        )

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency_sets[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def named_edges(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset((self.names[u], self.names[v])) for u, v in self.edges())

    def __str__(self) -> str:
        return f"BiGraph(n={self.n}, m={self.num_edges})"


@dataclass(frozen=True)
class OddCycleWitness:
    """Closed walk ``cycle[0] - cycle[1] - ... - cycle[-1] - cycle[0]`` of odd length."""

    cycle: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.cycle)


def infer_bipartition(
    n: int, edges: Iterable[tuple[int, int]], names: Sequence[str] | None = None
) -> BiGraph | OddCycleWitness:
    """2-color by BFS, giving color 0 to the lowest id of each component.

    Returns an :class:`OddCycleWitness` when the graph has an odd cycle.
    """
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"edge ({u}, {v}) out of range for {n} vertices")
        if u == v:
            return OddCycleWitness((u,))
        nbrs[u].add(v)
        nbrs[v].add(u)
    color = [-1] * n
    parent = [-1] * n
    for s in range(n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in sorted(nbrs[x]):
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    parent[y] = x
                    queue.append(y)
                elif color[y] == color[x]:
                    return OddCycleWitness(_tree_cycle(x, y, parent))
    return BiGraph.from_edges(color, [(u, v) for u in range(n) for v in nbrs[u] if u < v], names)


def _tree_cycle(x: int, y: int, parent: list[int]) -> tuple[int, ...]:
    # x and y share a BFS depth; climb both to their common ancestor.
    left, right = [x], [y]
    a, b = x, y
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    return tuple(left + right[-2::-1])


def induced_subgraph(g: BiGraph, vs: Iterable[int]) -> tuple[BiGraph, tuple[int, ...]]:
    """``g[vs]`` plus the back-map: vertex ``i`` of the result is ``ids[i]`` in ``g``."""
    ids = tuple(sorted(set(vs)))
    for v in ids:
        if not 0 <= v < g.n:
            raise OutOfRange(f"vertex {v} not in graph of order {g.n}")
    local = {v: i for i, v in enumerate(ids)}
    adjacency = tuple(
        tuple(local[w] for w in g.adjacency[v] if w in local) for v in ids
    )
    sub = BiGraph(
        tuple(g.names[v] for v in ids),
        tuple(g.colors[v] for v in ids),
        adjacency,
        _validate=False,
    )
    return sub, ids


def components_within(g: BiGraph, vs: Iterable[int]) -> list[list[int]]:
    """Connected components of ``g[vs]``, each sorted, ordered by smallest member."""
    remaining = set(vs)
    adj = g.adjacency_sets
    out = []
    for s in sorted(remaining):
        if s not in remaining:
            continue
        remaining.discard(s)
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            found = adj[x] & remaining
            if found:
                remaining -= found
                comp.extend(found)
                stack.extend(found)
        comp.sort()
        out.append(comp)
    return out


def connected_components(g: BiGraph) -> list[list[int]]:
    return components_within(g, range(g.n))


def is_connected(g: BiGraph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def heart_vertices_within(g: BiGraph, vs: Iterable[int]) -> list[int]:
    """Heart-vertices of ``g[vs]``: adjacent to every vertex of the other color in ``vs``."""
    members = frozenset(vs)
    opposite = [0, 0]
    for v in members:
        opposite[1 - g.colors[v]] += 1
    adj = g.adjacency_sets
    return sorted(v for v in members if len(adj[v] & members) == opposite[g.colors[v]])


def heart_vertices(g: BiGraph) -> list[int]:
    """All heart-vertices of ``g``, ascending.

    A vertex whose opposite color class is empty qualifies vacuously.
    """
    sizes = (len(g.color_classes[0]), len(g.color_classes[1]))
    return [v for v in range(g.n) if g.degree(v) == sizes[1 - g.colors[v]]]


def disjoint_union(graphs: Sequence[BiGraph], prefixes: Sequence[str] | None = None) -> BiGraph:
    """Place the graphs side by side, ids shifted in order.

    Names are kept unless ``prefixes`` is given, in which case graph ``i``'s
    vertex names are prefixed with ``prefixes[i]``.
    """
    names: list[str] = []
    colors: list[int] = []
    edges: list[tuple[int, int]] = []
    offset = 0
    for i, g in enumerate(graphs):
        pre = prefixes[i] if prefixes is not None else ""
        names.extend(pre + s for s in g.names)
        colors.extend(g.colors)
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return BiGraph.from_edges(colors, edges, names)

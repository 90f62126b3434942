"""Rooted phylogenetic trees with a binary leaf coloring and truncation map.

Nodes live in an arena indexed by integers. Leaves carry a name, a color
(0 or 1) and a :class:`Trunc` choice; internal nodes carry none of these.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import NotALeaf, NotInternalArc, TreeError


class Trunc(str, enum.Enum):
    """Where the truncation map sends a leaf: to itself, or to the root."""

    SELF = "self"
    ROOT = "root"


@dataclass(frozen=True, eq=False)
class PhyloTree:
    children: tuple[tuple[int, ...], ...]
    names: tuple[str | None, ...]
    colors: tuple[int | None, ...]
    truncs: tuple[Trunc | None, ...]
    root: int = 0

    def __post_init__(self):
        k = len(self.children)
        if not (len(self.names) == len(self.colors) == len(self.truncs) == k):
            raise TreeError("per-node arrays must have equal length")
        if not 0 <= self.root < k:
            raise TreeError("root out of range")
        seen = [False] * k
        seen[self.root] = True
        stack = [self.root]
        while stack:
            v = stack.pop()
            kids = self.children[v]
            if len(kids) == 1:
                raise TreeError(f"internal node {v} has a single child")
            for w in kids:
                if not 0 <= w < k or seen[w]:
                    raise TreeError(f"node {w} is out of range or has two parents")
                seen[w] = True
                stack.append(w)
        if not all(seen):
            raise TreeError("some nodes are unreachable from the root")
        names = []
        for v in range(k):
            if self.children[v]:
                if self.names[v] is not None or self.colors[v] is not None or self.truncs[v] is not None:
                    raise TreeError(f"internal node {v} carries leaf attributes")
            else:
                if not self.names[v] or self.colors[v] not in (0, 1) or not isinstance(self.truncs[v], Trunc):
                    raise TreeError(f"leaf {v} needs a name, a 0/1 color and a truncation choice")
                names.append(self.names[v])
        if len(set(names)) != len(names):
            raise TreeError("leaf names must be unique")

    # -- construction helpers ---------------------------------------------

    @classmethod
    def single(cls, name: str, color: int) -> "PhyloTree":
        return cls(((),), (name,), (color,), (Trunc.SELF,))

    @classmethod
    def star(cls, names: Sequence[str], colors: Sequence[int], truncs: Sequence[Trunc]) -> "PhyloTree":
        if len(names) == 1:
            return cls(((),), (names[0],), (colors[0],), (truncs[0],))
        k = len(names)
        return cls(
            (tuple(range(1, k + 1)),) + ((),) * k,
            (None, *names),
            (None, *colors),
            (None, *truncs),
        )

    # -- structure ---------------------------------------------------------

    def __len__(self) -> int:
        return len(self.children)

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]

    @cached_property
    def parent(self) -> tuple[int | None, ...]:
        par: list[int | None] = [None] * len(self.children)
        for v, kids in enumerate(self.children):
            for w in kids:
                par[w] = v
        return tuple(par)

    @cached_property
    def preorder(self) -> tuple[int, ...]:
        out = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(reversed(self.children[v]))
        return tuple(out)

    @cached_property
    def depth(self) -> tuple[int, ...]:
        d = [0] * len(self.children)
        for v in self.preorder:
            for w in self.children[v]:
                d[w] = d[v] + 1
        return tuple(d)

    @cached_property
    def leaves(self) -> tuple[int, ...]:
        """Leaf nodes in preorder."""
        return tuple(v for v in self.preorder if not self.children[v])

    @cached_property
    def leaf_by_name(self) -> dict[str, int]:
        return {self.names[v]: v for v in self.leaves}

    @cached_property
    def internal_nodes(self) -> tuple[int, ...]:
        return tuple(v for v in self.preorder if self.children[v])

    @cached_property
    def _color_mask(self) -> tuple[int, ...]:
        # bit c set iff a leaf of color c lies below the node
        mask = [0] * len(self.children)
        for v in reversed(self.preorder):
            if self.children[v]:
                m = 0
                for w in self.children[v]:
                    m |= mask[w]
                mask[v] = m
            else:
                mask[v] = 1 << self.colors[v]
        return tuple(mask)

    def leaves_below(self, v: int) -> list[int]:
        """Leaves of the subtree rooted at ``v``, in preorder."""
        out = []
        stack = [v]
        while stack:
            x = stack.pop()
            kids = self.children[x]
            if kids:
                stack.extend(reversed(kids))
            else:
                out.append(x)
        return out

    def ancestors(self, v: int) -> list[int]:
        """``v`` and its proper ancestors, bottom-up."""
        out = [v]
        par = self.parent
        while par[out[-1]] is not None:
            out.append(par[out[-1]])
        return out

    def structure(self) -> tuple:
        """Preorder signature; two trees are equal iff their signatures are."""
        return tuple(
            (len(self.children[v]), self.names[v], self.colors[v], self.truncs[v])
            for v in self.preorder
        )

    def __eq__(self, other):
        if not isinstance(other, PhyloTree):
            return NotImplemented
        return self.structure() == other.structure()

    def __hash__(self):
        return hash(self.structure())

    def __repr__(self):
        return f"PhyloTree(nodes={len(self)}, leaves={len(self.leaves)})"


def _check_leaf(t: PhyloTree, v: int) -> None:
    if not (0 <= v < len(t.children)) or t.children[v]:
        raise NotALeaf(f"node {v} is not a leaf")


def is_ancestor(t: PhyloTree, v: int, w: int) -> bool:
    """True iff ``w`` lies in the subtree rooted at ``v`` (reflexive)."""
    depth, par = t.depth, t.parent
    while depth[w] > depth[v]:
        w = par[w]
    return w == v


def lca(t: PhyloTree, a: int, b: int) -> int:
    _check_leaf(t, a)
    _check_leaf(t, b)
    return _lca(t, a, b)


def _lca(t: PhyloTree, a: int, b: int) -> int:
    depth, par = t.depth, t.parent
    while depth[a] > depth[b]:
        a = par[a]
    while depth[b] > depth[a]:
        b = par[b]
    while a != b:
        a, b = par[a], par[b]
    return a


def internal_arcs(t: PhyloTree) -> list[tuple[int, int]]:
    """Parent-child arcs whose child is internal, in preorder of the child."""
    par = t.parent
    return [(par[w], w) for w in t.preorder if w != t.root and t.children[w]]


def subtree_colors(t: PhyloTree, v: int) -> frozenset[int]:
    m = t._color_mask[v]
    return frozenset(c for c in (0, 1) if m >> c & 1)


def contract_arc(t: PhyloTree, v: int, w: int) -> PhyloTree:
    """Merge internal child ``w`` into its parent ``v``.

    The children of ``w`` take its slot among ``v``'s children, in order.
    The result is renumbered in preorder.
    """
    if not (0 <= w < len(t) and t.children[w] and t.parent[w] == v):
        raise NotInternalArc(f"({v}, {w}) is not an internal arc")
    kids = list(t.children)
    slot = kids[v].index(w)
    kids[v] = kids[v][:slot] + kids[w] + kids[v][slot + 1:]
    kids[w] = ()
    return _rebuild(t, kids)


def _rebuild(t: PhyloTree, kids: Sequence[tuple[int, ...]]) -> PhyloTree:
    order = []
    stack = [t.root]
    while stack:
        x = stack.pop()
        order.append(x)
        stack.extend(reversed(kids[x]))
    new = {old: i for i, old in enumerate(order)}
    return PhyloTree(
        tuple(tuple(new[c] for c in kids[old]) for old in order),
        tuple(t.names[old] for old in order),
        tuple(t.colors[old] for old in order),
        tuple(t.truncs[old] for old in order),
    )


def graft(trees: Iterable[PhyloTree]) -> PhyloTree:
    """New root whose subtrees are the given trees, in order."""
    trees = list(trees)
    if not trees:
        raise TreeError("need at least one tree")
    if len(trees) == 1:
        return trees[0]
    children: list[tuple[int, ...]] = [()]
    names: list[str | None] = [None]
    colors: list[int | None] = [None]
    truncs: list[Trunc | None] = [None]
    top = []
    for sub in trees:
        off = len(children)
        top.append(off + sub.root)
        children.extend(tuple(c + off for c in kids) for kids in sub.children)
        names.extend(sub.names)
        colors.extend(sub.colors)
        truncs.extend(sub.truncs)
    children[0] = tuple(top)
    return PhyloTree(tuple(children), tuple(names), tuple(colors), tuple(truncs))

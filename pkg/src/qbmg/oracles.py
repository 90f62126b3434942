"""Brute-force membership tests that share no code path with HEART-TREE.

* :func:`find_forbidden` searches for an induced P6, C6 or Sunlet4.
* :func:`hereditary_heart_check` enumerates every connected induced
  subgraph and looks for one without a heart-vertex.

Both work on integer bitmasks over the vertex ids.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations

from .bigraph import BiGraph, induced_subgraph
from .errors import InternalInconsistency, SizeCapExceeded
from .recognition import Witness, WitnessKind, heart_tree

HEREDITARY_CAP = 16
PATTERN_CAP = 512


def default_hereditary_cap() -> int:
    return int(os.environ.get("QBMG_ORACLE_CAP", HEREDITARY_CAP))


def _pattern(colors, edges) -> BiGraph:
    return BiGraph.from_edges(colors, edges, [f"p{i}" for i in range(len(colors))])


# Sunlet4 numbering: cycle v1..v4 are 0..3, pendant u_i is 4+i hanging off i.
PATTERNS: dict[str, BiGraph] = {
    "P6": _pattern([0, 1, 0, 1, 0, 1], [(i, i + 1) for i in range(5)]),
    "C6": _pattern([0, 1, 0, 1, 0, 1], [(i, (i + 1) % 6) for i in range(6)]),
    "Sunlet4": _pattern(
        [0, 1, 0, 1, 1, 0, 1, 0],
        [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5), (2, 6), (3, 7)],
    ),
}
SEARCH_ORDER = ("P6", "C6", "Sunlet4")


@dataclass(frozen=True)
class Embedding:
    """Induced copy of ``pattern``: template vertex ``i`` maps to ``image[i]``."""

    pattern: str
    image: tuple[int, ...]

    def as_witness(self) -> Witness:
        return Witness(WitnessKind.FORBIDDEN, self.image, self.pattern)


def _masks(g: BiGraph) -> list[int]:
    out = []
    for nbrs in g.adjacency:
        m = 0
        for w in nbrs:
            m |= 1 << w
        out.append(m)
    return out


def is_induced_embedding(g: BiGraph, pattern: str, image) -> bool:
    p = PATTERNS[pattern]
    if len(image) != p.n or len(set(image)) != p.n:
        return False
    for i in range(p.n):
        for j in range(i + 1, p.n):
            if p.has_edge(i, j) != g.has_edge(image[i], image[j]):
                return False
    return True


def _search(g: BiGraph, adj: list[int], name: str) -> tuple[int, ...] | None:
    p = PATTERNS[name]
    k = p.n
    # template order keeps each vertex adjacent to an earlier one
    anchor = [None] + [min(w for w in p.adjacency[i] if w < i) for i in range(1, k)]
    want = [[p.has_edge(i, j) for j in range(i)] for i in range(k)]
    pdeg = [p.degree(i) for i in range(k)]
    deg = [g.degree(v) for v in range(g.n)]
    image = [0] * k

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        cands = adj[image[anchor[i]]] & ~used
        row = want[i]
        while cands:
            low = cands & -cands
            y = low.bit_length() - 1
            cands ^= low
            if deg[y] < pdeg[i]:
                continue
            ay = adj[y]
            if all(bool(ay >> image[j] & 1) == row[j] for j in range(i)):
                image[i] = y
                if extend(i + 1, used | low):
                    return True
        return False

    for s in range(g.n):
        if deg[s] < pdeg[0]:
            continue
        image[0] = s
        if extend(1, 1 << s):
            return tuple(image)
    return None


def find_forbidden(g: BiGraph, cap: int = PATTERN_CAP) -> Embedding | None:
    """First induced P6, C6 or Sunlet4 found, trying the patterns in that order."""
    if g.n > cap:
        raise SizeCapExceeded(g.n, cap, "pattern search input")
    adj = _masks(g)
    for name in SEARCH_ORDER:
        image = _search(g, adj, name)
        if image is not None:
            if not is_induced_embedding(g, name, image):
                raise InternalInconsistency(f"search returned a non-induced {name}")
            return Embedding(name, image)
    return None


def _connected(mask: int, adj: list[int]) -> bool:
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = adj[low.bit_length() - 1] & mask & ~seen
        seen |= new
        frontier |= new
    return seen == mask


def _has_heart(mask: int, adj: list[int], color_mask: tuple[int, int], colors) -> bool:
    opp = (color_mask[1] & mask, color_mask[0] & mask)
    rest = mask
    while rest:
        low = rest & -rest
        rest ^= low
        v = low.bit_length() - 1
        target = opp[colors[v]]
        if adj[v] & mask == target:
            return True
    return False


def hereditary_heart_check(g: BiGraph, cap: int | None = None) -> tuple[bool, tuple[int, ...] | None]:
    """Does every connected induced subgraph have a heart-vertex?

    Subsets are scanned by increasing size, so a failure comes back with a
    minimum-cardinality heartless connected subset.
    """
    cap = default_hereditary_cap() if cap is None else cap
    if g.n > cap:
        raise SizeCapExceeded(g.n, cap, "hereditary check input")
    adj = _masks(g)
    cm = [0, 0]
    for v, c in enumerate(g.colors):
        cm[c] |= 1 << v
    color_mask = (cm[0], cm[1])
    # subsets of size 1 always have a heart-vertex
    for size in range(2, g.n + 1):
        for combo in combinations(range(g.n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if _connected(mask, adj) and not _has_heart(mask, adj, color_mask, g.colors):
                return False, combo
    return True, None


def refine_witness(g: BiGraph, w: Witness) -> Witness:
    """Turn a heartless-subgraph witness into a forbidden-pattern witness inside it."""
    if w.kind is not WitnessKind.HEARTLESS:
        raise ValueError(f"expected a heartless witness, got {w.kind.value}")
    sub, ids = induced_subgraph(g, w.vertices)
    emb = find_forbidden(sub, cap=max(PATTERN_CAP, sub.n))
    if emb is None:
        raise InternalInconsistency(
            "heartless connected subgraph contains no P6, C6 or Sunlet4"
        )
    return Witness(WitnessKind.FORBIDDEN, tuple(ids[i] for i in emb.image), emb.pattern)


def membership_verdicts(g: BiGraph, cap: int | None = None) -> tuple[bool, bool, bool]:
    """(HEART-TREE accepts, pattern-free, hereditary heart) for one graph."""
    a = heart_tree(g).accepted
    b = find_forbidden(g) is None
    c = hereditary_heart_check(g, cap)[0]
    return a, b, c


def naive_explain_equivalence(g: BiGraph, cap: int | None = None) -> bool:
    """True iff the three membership tests agree on ``g``."""
    cap = default_hereditary_cap() if cap is None else cap
    if g.n > cap:
        raise SizeCapExceeded(g.n, cap)
    return len(set(membership_verdicts(g, cap))) == 1

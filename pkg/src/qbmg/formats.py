"""Text formats: the colored graph format, annotated Newick, DOT and graph6.

Graph format, one declaration per line::

    # comment
    v NAME [0|1]
    e NAME NAME

Either every vertex line carries a color or none does; in the latter case
the bipartition is inferred. Tree format is Newick with leaf annotations::

    ((x1[c=0,u=root],x2[c=1,u=self]),x3[c=1,u=root]);
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import singledispatch

from .bigraph import BiGraph, OddCycleWitness, infer_bipartition
from .errors import (
    DuplicateLeafName,
    DuplicateVertex,
    EmptyGraph,
    FormatSyntaxError,
    MixedColorDeclaration,
    MonochromaticEdge,
    NotBipartite,
    SingleLeafRootTrunc,
    UnaryInternalNode,
    UnknownVertex,
)
from .phylo import PhyloTree, Trunc, _rebuild
from .semantics import DirectedQbmg

NAME_RE = re.compile(r"[A-Za-z0-9_.-]+")


# -- graph format -------------------------------------------------------------


@dataclass(frozen=True)
class GraphDocument:
    names: tuple[str, ...]
    colors: tuple[int, ...] | None  # None when no vertex declares a color
    edges: tuple[tuple[int, int], ...]


def read_graph_document(text: str) -> GraphDocument:
    names: list[str] = []
    colors: list[int | None] = []
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    edge_lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "v":
            if len(parts) not in (2, 3):
                raise FormatSyntaxError("expected 'v NAME [COLOR]'", line=lineno)
            name = parts[1]
            if not NAME_RE.fullmatch(name):
                raise FormatSyntaxError(f"bad vertex name {name!r}", line=lineno)
            if name in index:
                raise DuplicateVertex(f"vertex {name!r} declared twice", line=lineno)
            color = None
            if len(parts) == 3:
                if parts[2] not in ("0", "1"):
                    raise FormatSyntaxError(f"color must be 0 or 1, got {parts[2]!r}", line=lineno)
                color = int(parts[2])
            if colors and (color is None) != (colors[0] is None):
                raise MixedColorDeclaration(
                    "either all vertices declare a color or none does", line=lineno
                )
            index[name] = len(names)
            names.append(name)
            colors.append(color)
        elif kind == "e":
            if len(parts) != 3:
                raise FormatSyntaxError("expected 'e NAME NAME'", line=lineno)
            ends = []
            for name in parts[1:]:
                if name not in index:
                    raise UnknownVertex(f"edge uses undeclared vertex {name!r}", line=lineno)
                ends.append(index[name])
            if ends[0] == ends[1]:
                raise FormatSyntaxError(f"self-loop at {parts[1]!r}", line=lineno)
            edges.append((ends[0], ends[1]))
            edge_lines.append(lineno)
        else:
            raise FormatSyntaxError(f"unknown declaration {kind!r}", line=lineno)
    if not names:
        raise EmptyGraph("graph document declares no vertices")
    declared = None if colors[0] is None else tuple(colors)  # type: ignore[arg-type]
    if declared is not None:
        for (u, v), lineno in zip(edges, edge_lines):
            if declared[u] == declared[v]:
                raise MonochromaticEdge(names[u], names[v], line=lineno)
    return GraphDocument(tuple(names), declared, tuple(edges))


def graph_from_document(doc: GraphDocument) -> BiGraph:
    if doc.colors is None:
        g = infer_bipartition(len(doc.names), doc.edges, doc.names)
        if isinstance(g, OddCycleWitness):
            raise NotBipartite(g.cycle, doc.names)
        return g
    return BiGraph.from_edges(doc.colors, doc.edges, doc.names)


def parse_graph(text: str) -> BiGraph:
    return graph_from_document(read_graph_document(text))


def serialize_graph(g: BiGraph) -> str:
    """Canonical text: vertices in id order, then edges sorted by name pair."""
    lines = [f"v {name} {c}" for name, c in zip(g.names, g.colors)]
    pairs = sorted(tuple(sorted((g.names[u], g.names[v]))) for u, v in g.edges())
    lines += [f"e {a} {b}" for a, b in pairs]
    return "\n".join(lines) + "\n"


def read_graph6(text: str) -> list[GraphDocument]:
    """Decode graph6 records into uncolored documents (colors get inferred later)."""
    import networkx as nx

    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith(">>graph6<<"):
            line = line[len(">>graph6<<"):]
        try:
            h = nx.from_graph6_bytes(line.encode("ascii"))
        except (nx.NetworkXError, ValueError, UnicodeEncodeError) as exc:
            raise FormatSyntaxError(f"bad graph6 record: {exc}", line=lineno) from exc
        if h.number_of_nodes() == 0:
            raise EmptyGraph("graph6 record has no vertices", line=lineno)
        names = tuple(f"x{i + 1}" for i in range(h.number_of_nodes()))
        out.append(GraphDocument(names, None, tuple(sorted(h.edges()))))
    return out


# -- annotated Newick -----------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:([()\[\],;=])|([A-Za-z0-9_.-]+))")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            rest = text[pos:]
            if rest.strip():
                bad = pos + len(rest) - len(rest.lstrip())
                raise FormatSyntaxError(f"unexpected character {text[bad]!r}", position=bad)
            return tokens
        tok = m.group(1) or m.group(2)
        tokens.append((tok, m.start(1) if m.group(1) else m.start(2)))
        pos = m.end()


class _Cursor:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0
        self.end = len(text)

    def peek(self) -> tuple[str | None, int]:
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return None, self.end

    def take(self, expected: str | None = None) -> tuple[str, int]:
        tok, pos = self.peek()
        if tok is None:
            raise FormatSyntaxError("unexpected end of input", position=pos)
        if expected is not None and tok != expected:
            raise FormatSyntaxError(f"expected {expected!r}, found {tok!r}", position=pos)
        self.i += 1
        return tok, pos


def parse_tree(text: str) -> PhyloTree:
    cur = _Cursor(text)
    children: list[list[int]] = []
    names: list[str | None] = []
    colors: list[int | None] = []
    truncs: list[Trunc | None] = []
    seen: set[str] = set()
    frames: list[tuple[int, list[int]]] = []  # (position of '(', child nodes)

    def leaf() -> int:
        name, pos = cur.take()
        if not NAME_RE.fullmatch(name):
            raise FormatSyntaxError(f"expected a leaf name, found {name!r}", position=pos)
        if name in seen:
            raise DuplicateLeafName(f"leaf name {name!r} used twice", position=pos)
        seen.add(name)
        cur.take("[")
        cur.take("c")
        cur.take("=")
        c, cpos = cur.take()
        if c not in ("0", "1"):
            raise FormatSyntaxError(f"color must be 0 or 1, found {c!r}", position=cpos)
        cur.take(",")
        cur.take("u")
        cur.take("=")
        u, upos = cur.take()
        if u not in ("self", "root"):
            raise FormatSyntaxError(f"u must be 'self' or 'root', found {u!r}", position=upos)
        cur.take("]")
        children.append([])
        names.append(name)
        colors.append(int(c))
        truncs.append(Trunc(u))
        return len(children) - 1

    while True:
        # expecting a node
        tok, pos = cur.peek()
        if tok == "(":
            cur.take()
            frames.append((pos, []))
            continue
        node = leaf()
        # node complete; close as many groups as the input does
        while True:
            if not frames:
                break
            tok, pos = cur.take()
            if tok == ",":
                frames[-1][1].append(node)
                break
            if tok != ")":
                raise FormatSyntaxError(f"expected ',' or ')', found {tok!r}", position=pos)
            open_pos, kids = frames.pop()
            kids.append(node)
            if len(kids) < 2:
                raise UnaryInternalNode("internal node with a single child", position=open_pos)
            children.append(kids)
            names.append(None)
            colors.append(None)
            truncs.append(None)
            node = len(children) - 1
        if not frames:
            break
    cur.take(";")
    tok, pos = cur.peek()
    if tok is not None:
        raise FormatSyntaxError(f"trailing input after ';': {tok!r}", position=pos)
    if len(children) == 1 and truncs[0] is Trunc.ROOT:
        raise SingleLeafRootTrunc("a single-leaf tree must declare u=self", position=0)
    t = PhyloTree(
        tuple(tuple(k) for k in children), tuple(names), tuple(colors), tuple(truncs),
        root=len(children) - 1,
    )
    return _rebuild(t, t.children)


def _leaf_text(t: PhyloTree, v: int) -> str:
    return f"{t.names[v]}[c={t.colors[v]},u={t.truncs[v].value}]"


def serialize_tree(t: PhyloTree) -> str:
    out: list[str] = []
    stack: list[tuple[int, int]] = [(t.root, 0)]
    while stack:
        v, i = stack.pop()
        kids = t.children[v]
        if not kids:
            out.append(_leaf_text(t, v))
            continue
        if i == 0:
            out.append("(")
        elif i < len(kids):
            out.append(",")
        if i == len(kids):
            out.append(")")
            continue
        stack.append((v, i + 1))
        stack.append((kids[i], 0))
    return "".join(out) + ";"


# -- DOT -------------------------------------------------------------------------


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _vertex_style(color: int) -> str:
    # color 1 drawn filled, color 0 hollow
    if color == 1:
        return "shape=circle, style=filled, fillcolor=black, fontcolor=white"
    return "shape=circle, style=solid, fillcolor=white"


@singledispatch
def export_dot(obj, highlight=()) -> str:
    raise TypeError(f"cannot export {type(obj).__name__} to DOT")


@export_dot.register
def _(g: BiGraph, highlight=()) -> str:
    marked = set(highlight)
    lines = ["graph G {"]
    for v, (name, c) in enumerate(zip(g.names, g.colors)):
        extra = ", color=red, penwidth=2" if v in marked else ""
        lines.append(f"  {_q(name)} [{_vertex_style(c)}{extra}];")
    for u, v in g.edges():
        lines.append(f"  {_q(g.names[u])} -- {_q(g.names[v])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


@export_dot.register
def _(t: PhyloTree, highlight=()) -> str:
    lines = ["digraph T {", "  node [fontsize=10];"]
    for v in t.preorder:
        if t.children[v]:
            label = "rho" if v == t.root else ""
            lines.append(f"  n{v} [shape=point, xlabel={_q(label)}];")
        else:
            label = f"{t.names[v]}\\nu={t.truncs[v].value}"
            lines.append(f"  n{v} [label=\"{label}\", {_vertex_style(t.colors[v])}];")
    for v in t.preorder:
        for w in t.children[v]:
            lines.append(f"  n{v} -> n{w};")
    lines.append("}")
    return "\n".join(lines) + "\n"


@export_dot.register
def _(d: DirectedQbmg, highlight=()) -> str:
    lines = ["digraph Q {"]
    for name, c in zip(d.names, d.colors):
        lines.append(f"  {_q(name)} [{_vertex_style(c)}];")
    for x, y in d.arcs():
        lines.append(f"  {_q(d.names[x])} -> {_q(d.names[y])};")
    lines.append("}")
    return "\n".join(lines) + "\n"

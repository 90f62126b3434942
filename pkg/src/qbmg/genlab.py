"""Instance generation, exhaustive enumeration and the three-way cross-check."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

from .bigraph import BiGraph, is_connected
from .errors import InternalInconsistency, SizeCapExceeded
from .phylo import PhyloTree, Trunc

PRNG_NAME = "splitmix64"
_MASK64 = (1 << 64) - 1
ENUM_CAP = 8


class SplitMix64:
    """SplitMix64 generator (Steele, Lea, Flood 2014), 64-bit state.

    Chosen over :mod:`random` because its output is fixed by a short public
    definition, so seeded corpora can be regenerated byte-for-byte elsewhere.
    """

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, k: int) -> int:
        """Uniform integer in ``[0, k)`` by rejection, no modulo bias."""
        if k <= 0:
            raise ValueError("k must be positive")
        limit = (1 << 64) - ((1 << 64) % k)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % k

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def chance(self, p: float) -> bool:
        return self.random() < p

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


@dataclass(frozen=True)
class TreeGenConfig:
    """Knobs for :func:`random_tree`.

    ``internal_bias`` is the probability that a node with several leaves
    below it splits them into nested groups instead of hanging them all
    directly; 0 always yields a star.
    """

    leaf_count: int
    seed: int
    internal_bias: float = 0.5
    trunc_self_prob: float = 0.3
    color_prob: float = 0.5

    def __post_init__(self):
        if self.leaf_count < 1:
            raise ValueError("leaf_count must be at least 1")
        for name in ("internal_bias", "trunc_self_prob", "color_prob"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {p}")


def random_tree(cfg: TreeGenConfig) -> PhyloTree:
    rng = SplitMix64(cfg.seed)
    k = cfg.leaf_count
    names = [f"x{i + 1}" for i in range(k)]
    rng.shuffle(names)
    colors = [1 if rng.chance(cfg.color_prob) else 0 for _ in range(k)]
    truncs = [Trunc.SELF if rng.chance(cfg.trunc_self_prob) else Trunc.ROOT for _ in range(k)]
    if k == 1:
        return PhyloTree.single(names[0], colors[0])

    children: list[list[int]] = []
    leaf: list[int | None] = []

    def new_node(item: int | None) -> int:
        children.append([])
        leaf.append(item)
        return len(children) - 1

    root = new_node(None)
    stack = [(root, list(range(k)))]
    while stack:
        node, group = stack.pop()
        if len(group) > 2 and rng.chance(cfg.internal_bias):
            rng.shuffle(group)
            parts = rng.between(2, len(group) - 1)
            cuts = sorted(_sample(rng, range(1, len(group)), parts - 1))
            blocks = [group[a:b] for a, b in zip([0, *cuts], [*cuts, len(group)])]
        else:
            blocks = [[i] for i in group]
        for block in blocks:
            if len(block) == 1:
                children[node].append(new_node(block[0]))
            else:
                child = new_node(None)
                children[node].append(child)
                stack.append((child, block))

    return PhyloTree(
        tuple(tuple(c) for c in children),
        tuple(names[i] if i is not None else None for i in leaf),
        tuple(colors[i] if i is not None else None for i in leaf),
        tuple(truncs[i] if i is not None else None for i in leaf),
    )


def _sample(rng: SplitMix64, population: Iterable[int], count: int) -> list[int]:
    pool = list(population)
    for i in range(count):
        j = i + rng.below(len(pool) - i)
        pool[i], pool[j] = pool[j], pool[i]
    return pool[:count]


def random_bipartite(n: int, edge_prob: float, seed: int) -> BiGraph:
    """Each vertex gets color 1 with probability 1/2; cross pairs join with ``edge_prob``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = SplitMix64(seed)
    colors = [1 if rng.chance(0.5) else 0 for _ in range(n)]
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if colors[u] != colors[v] and rng.chance(edge_prob)
    ]
    return BiGraph.from_edges(colors, edges)


# -- enumeration ------------------------------------------------------------


@dataclass(frozen=True)
class EnumConfig:
    max_n: int
    connected_only: bool = False
    dedupe: str = "labeled"  # or "iso"
    min_n: int = 1

    def __post_init__(self):
        if self.max_n < 1 or self.min_n < 1:
            raise ValueError("vertex bounds must be at least 1")
        if self.dedupe not in ("labeled", "iso"):
            raise ValueError(f"dedupe must be 'labeled' or 'iso', got {self.dedupe!r}")


def canonical_form(g: BiGraph) -> tuple:
    """Invariant of ``g`` under color-preserving relabeling.

    For each ordering of the smaller color class, the vertices of the other
    class are described by their adjacency bit-columns, sorted; the minimum
    over all orderings is the key. Factorial in the class size, fine for n <= 8.
    """
    zeros, ones = g.color_classes
    if len(zeros) > len(ones):
        side, other, tag = ones, zeros, 1
    else:
        side, other, tag = zeros, ones, 0
    best = None
    for order in permutations(side):
        cols = sorted(
            tuple(g.has_edge(x, y) for x in order) for y in other
        )
        key = tuple(cols)
        if best is None or key < best:
            best = key
    return (len(zeros), len(ones), tag, best)


def enumerate_bipartite(cfg: EnumConfig) -> Iterator[BiGraph]:
    """All colored bipartite graphs with ``min_n <= n <= max_n`` vertices.

    Color class 1 ranges over vertex subsets of size at most ``n // 2``;
    every cross-color edge subset follows, by increasing bitmask.
    """
    if cfg.max_n > ENUM_CAP:
        raise SizeCapExceeded(cfg.max_n, ENUM_CAP, "enumeration")
    seen: set[tuple] = set()
    for n in range(cfg.min_n, cfg.max_n + 1):
        for a in range(0, n // 2 + 1):
            for ones in combinations(range(n), a):
                chosen = set(ones)
                colors = [1 if v in chosen else 0 for v in range(n)]
                pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if colors[u] != colors[v]]
                for mask in range(1 << len(pairs)):
                    edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
                    g = BiGraph.from_edges(colors, edges)
                    if cfg.connected_only and not is_connected(g):
                        continue
                    if cfg.dedupe == "iso":
                        key = canonical_form(g)
                        if key in seen:
                            continue
                        seen.add(key)
                    yield g


# -- cross-check ------------------------------------------------------------


@dataclass(frozen=True)
class CrossCheckRecord:
    id: int
    n: int
    heart_tree: bool
    forbidden_free: bool
    hereditary_heart: bool

    @property
    def agree(self) -> bool:
        return self.heart_tree == self.forbidden_free == self.hereditary_heart


@dataclass
class CrossCheckReport:
    records: list[CrossCheckRecord] = field(default_factory=list)
    prng: str = PRNG_NAME

    @property
    def total(self) -> int:
        return len(self.records)

    @property
    def accepted(self) -> int:
        return sum(r.heart_tree for r in self.records if r.agree)

    @property
    def rejected(self) -> int:
        return sum(not r.heart_tree for r in self.records if r.agree)

    @property
    def disagreements(self) -> int:
        return sum(not r.agree for r in self.records)

    def by_size(self) -> dict[int, tuple[int, int]]:
        """``n -> (accepted, rejected)`` by the HEART-TREE verdict."""
        out: dict[int, list[int]] = {}
        for r in self.records:
            slot = out.setdefault(r.n, [0, 0])
            slot[0 if r.heart_tree else 1] += 1
        return {n: (a, b) for n, (a, b) in sorted(out.items())}

    def to_text(self) -> str:
        word = {True: "accept", False: "reject"}
        lines = [
            "# qbmg cross-check",
            f"# prng\t{self.prng}",
            "# id\tn\theart_tree\tforbidden_free\thereditary_heart",
        ]
        for r in sorted(self.records, key=lambda r: r.id):
            lines.append(
                f"{r.id}\t{r.n}\t{word[r.heart_tree]}\t{word[r.forbidden_free]}\t{word[r.hereditary_heart]}"
            )
        agreement = 100.0 * (self.total - self.disagreements) / self.total if self.total else 100.0
        lines += [
            "# summary",
            f"total\t{self.total}",
            f"accepted\t{self.accepted}",
            f"rejected\t{self.rejected}",
            f"disagreements\t{self.disagreements}",
            f"agreement\t{agreement:.2f}%",
        ]
        return "\n".join(lines) + "\n"


class CrossCheckDisagreement(InternalInconsistency):
    def __init__(self, record: CrossCheckRecord, graph_text: str):
        self.record = record
        self.graph_text = graph_text
        super().__init__(
            f"verdicts disagree on instance {record.id}: heart_tree={record.heart_tree} "
            f"forbidden_free={record.forbidden_free} hereditary_heart={record.hereditary_heart}\n"
            + graph_text
        )


def _verdicts(item: tuple[int, BiGraph, int | None]) -> CrossCheckRecord:
    from .oracles import membership_verdicts

    i, g, cap = item
    a, b, c = membership_verdicts(g, cap)
    return CrossCheckRecord(i, g.n, a, b, c)


def cross_check(
    corpus: Iterable[BiGraph],
    *,
    cap: int | None = None,
    workers: int = 1,
    halt: bool = True,
) -> CrossCheckReport:
    """Run all three membership tests on every graph.

    With ``halt`` (the default) the first disagreement raises
    :class:`CrossCheckDisagreement` carrying the serialized instance.
    """
    from .formats import serialize_graph

    report = CrossCheckReport()
    items = ((i, g, cap) for i, g in enumerate(corpus))
    graphs: dict[int, BiGraph] = {}

    def keep(item):
        graphs[item[0]] = item[1]
        return item

    if workers > 1:
        from multiprocessing import Pool

        with Pool(workers) as pool:
            results = pool.imap(_verdicts, (keep(it) for it in items), chunksize=256)
            for rec in results:
                graph = graphs.pop(rec.id)
                _record(report, rec, graph, halt, serialize_graph)
    else:
        for item in items:
            rec = _verdicts(item)
            _record(report, rec, item[1], halt, serialize_graph)
    return report


def _record(report, rec, graph, halt, serialize_graph):
    report.records.append(rec)
    if halt and not rec.agree:
        raise CrossCheckDisagreement(rec, serialize_graph(graph))


def named_fixtures() -> dict[str, BiGraph]:
    """The three minimal forbidden graphs, with their conventional vertex names."""
    from .oracles import PATTERNS

    out = {}
    for name, p in PATTERNS.items():
        if name == "Sunlet4":
            labels = ["v1", "v2", "v3", "v4", "u1", "u2", "u3", "u4"]
        else:
            labels = [f"x{i + 1}" for i in range(p.n)]
        out[name] = BiGraph(tuple(labels), p.colors, p.adjacency)
    return out


def relabel(g: BiGraph, names: Sequence[str]) -> BiGraph:
    return BiGraph(tuple(names), g.colors, g.adjacency)


# -- scaling ------------------------------------------------------------------


def scaling_run(
    sizes: Sequence[int], seed: int, *, repeats: int = 3, internal_bias: float = 0.5
) -> list[tuple[int, int, float]]:
    """Time HEART-TREE on tree-generated un2qBMGs: rows of (n, edges, best seconds)."""
    from time import perf_counter

    from .recognition import heart_tree
    from .semantics import explain

    rows = []
    for k, n in enumerate(sizes):
        t = random_tree(TreeGenConfig(n, seed + k, internal_bias=internal_bias))
        g = explain(t).graph
        best = float("inf")
        for _ in range(repeats):
            start = perf_counter()
            verdict = heart_tree(g)
            best = min(best, perf_counter() - start)
        if not verdict.accepted:
            raise InternalInconsistency(f"tree-generated graph on {n} vertices was rejected")
        rows.append((n, g.num_edges, best))
    return rows


def loglog_exponent(ns: Sequence[float], seconds: Sequence[float]) -> float:
    """Least-squares slope of log(seconds) against log(n)."""
    import numpy as np

    return float(np.polyfit(np.log(ns), np.log(seconds), 1)[0])

"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class QbmgError(Exception):
    """Base class for every error raised by this package."""


class GraphError(QbmgError, ValueError):
    pass


class MonochromaticEdge(GraphError):
    def __init__(self, u, v, line: int | None = None):
        self.u, self.v, self.line = u, v, line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}edge {u}-{v} joins two vertices of the same color")


class OutOfRange(GraphError, IndexError):
    pass


class NotBipartite(GraphError):
    """Raised where a colored graph is required but the input has an odd cycle."""

    def __init__(self, cycle, names=None):
        self.cycle = tuple(cycle)
        shown = [names[v] for v in self.cycle] if names else list(self.cycle)
        super().__init__(f"graph is not bipartite, odd cycle: {' '.join(map(str, shown))}")


class TreeError(QbmgError, ValueError):
    """A tree violates the rooted phylogenetic invariants."""


class NotALeaf(TreeError):
    pass


class NotInternalArc(TreeError):
    pass


class NameMismatch(QbmgError, ValueError):
    pass


class NotExplaining(QbmgError, ValueError):
    pass


class MonochromaticComponent(QbmgError, ValueError):
    pass


class SizeCapExceeded(QbmgError):
    def __init__(self, n: int, cap: int, what: str = "input"):
        self.n, self.cap = n, cap
        super().__init__(f"{what} has {n} vertices, above the cap of {cap}")


class InternalInconsistency(QbmgError, RuntimeError):
    """Two routes that must agree did not. Always a bug."""


class FormatError(QbmgError, ValueError):
    """Parse failure; ``line`` (graph files) or ``position`` (trees) locate it."""

    def __init__(self, message: str, *, line: int | None = None, position: int | None = None):
        self.line = line
        self.position = position
        if line is not None:
            message = f"line {line}: {message}"
        elif position is not None:
            message = f"position {position}: {message}"
        super().__init__(message)


class FormatSyntaxError(FormatError):
    pass


class UnknownVertex(FormatError):
    pass


class DuplicateVertex(FormatError):
    pass


class MixedColorDeclaration(FormatError):
    pass


class DuplicateLeafName(FormatError):
    pass


class UnaryInternalNode(FormatError):
    pass


class SingleLeafRootTrunc(FormatError):
    pass


class EmptyGraph(FormatError):
    """No vertices. Raised by the parser and by recognition alike."""

    def __init__(self, message: str = "graph has no vertices", **kw):
        super().__init__(message, **kw)

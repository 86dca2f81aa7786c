"""Simple undirected graphs: data model, edge-list parsing, generators.

Vertices are labelled ``1..n`` in every public surface (file formats, error
messages, :attr:`Graph.edges`). Matrices built from a graph use 0-based rows,
so vertex ``i`` lives in row ``i - 1``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

import numpy as np

__all__ = [
    "GraphError",
    "EdgeListParseError",
    "DisconnectedGraphError",
    "Graph",
    "GeneratorSpec",
    "parse_edge_list",
    "read_edge_list",
    "format_edge_list",
    "generate",
    "parse_generator",
    "is_connected",
    "laplacian",
]


class GraphError(ValueError):
    """Invalid graph or generator parameters."""


class EdgeListParseError(GraphError):
    """Malformed edge-list text. ``line`` is 1-based."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class DisconnectedGraphError(GraphError):
    """Raised by operations that need a connected graph."""

    def __init__(self, message: str = "graph is disconnected"):
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``1..n``.

    ``edges`` holds sorted pairs ``(i, j)`` with ``i < j``.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {self.n!r}")
        normalized = set()
        for edge in self.edges:
            i, j = (int(v) for v in edge)
            if i == j:
                raise GraphError(f"self-loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise GraphError(f"edge ({i}, {j}) has an endpoint outside 1..{self.n}")
            normalized.add((min(i, j), max(i, j)))
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, rejecting duplicate edges instead of merging them."""
        seen: set[tuple[int, int]] = set()
        for i, j in edges:
            key = (min(i, j), max(i, j))
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
        return cls(n, frozenset(seen))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=int)
        for i, j in self.edges:
            deg[i - 1] += 1
            deg[j - 1] += 1
        return deg

    def neighbours(self) -> list[list[int]]:
        """0-based adjacency lists."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in sorted(self.edges):
            adj[i - 1].append(j - 1)
            adj[j - 1].append(i - 1)
        return adj

    def with_edge(self, i: int, j: int) -> "Graph":
        return Graph(self.n, self.edges | {(min(i, j), max(i, j))})


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters for one of the graph families used in the experiments.

    ``l`` is the number of neighbours on each side and is only read for
    ``kind == "circulant"``, where ``1 <= l`` and ``2 * l < n`` are required.
    """

    kind: str
    n: int
    l: int | None = None

    KINDS = ("path", "cycle", "complete", "circulant")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise GraphError(f"unknown graph kind {self.kind!r}; expected one of {self.KINDS}")
        if self.n < 1:
            raise GraphError(f"n must be positive, got {self.n}")
        if self.kind == "cycle" and self.n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        if self.kind == "circulant":
            if self.l is None or self.l < 1:
                raise GraphError("circulant graphs need l >= 1")
            if 2 * self.l >= self.n:
                raise GraphError(f"circulant Ci({self.n},{self.l}) requires 2l < n")


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    The first content line is ``n=<int>``; every following non-empty line is
    ``<i> <j>`` with ``1 <= i < j <= n``. ``#`` starts a comment. LF and CRLF
    line endings are both accepted.

    Raises
    ------
    EdgeListParseError
        On a malformed line, an out-of-range vertex, a duplicate edge or a
        self-loop. The error carries the offending line number.
    """
    n = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            key, sep, value = line.partition("=")
            if not sep or key.strip() != "n":
                raise EdgeListParseError(lineno, f"expected header 'n=<int>', got {raw.strip()!r}")
            try:
                n = int(value.strip())
            except ValueError:
                raise EdgeListParseError(lineno, f"vertex count is not an integer: {value.strip()!r}") from None
            if n < 1:
                raise EdgeListParseError(lineno, f"vertex count must be positive, got {n}")
            continue
        fields = line.split()
        if len(fields) != 2:
            raise EdgeListParseError(lineno, f"expected two vertex labels, got {raw.strip()!r}")
        try:
            i, j = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListParseError(lineno, f"vertex labels must be integers: {raw.strip()!r}") from None
        if i == j:
            raise EdgeListParseError(lineno, f"self-loop at vertex {i}")
        for v in (i, j):
            if not 1 <= v <= n:
                raise EdgeListParseError(lineno, f"vertex {v} outside 1..{n}")
        if i > j:
            raise EdgeListParseError(lineno, f"edge must be written with i < j, got {i} {j}")
        if (i, j) in edges:
            raise EdgeListParseError(lineno, f"duplicate edge {i} {j}")
        edges.add((i, j))
    if n is None:
        raise EdgeListParseError(1, "missing header 'n=<int>'")
    return Graph(n, frozenset(edges))


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph) -> str:
    lines = [f"n={g.n}"]
    lines.extend(f"{i} {j}" for i, j in sorted(g.edges))
    return "\n".join(lines) + "\n"


def generate(spec: GeneratorSpec) -> Graph:
    """Build the graph described by ``spec``.

    ``Ci(n, l)`` joins vertex ``i`` to ``i +- s (mod n)`` for ``s = 1..l``, so
    every vertex has degree ``2l``; ``Ci(n, 1)`` is the cycle and
    ``Ci(n, (n-1)/2)`` for odd ``n`` is the complete graph.
    """
    n = spec.n
    if spec.kind == "path":
        edges = {(i, i + 1) for i in range(1, n)}
    elif spec.kind == "complete":
        edges = {(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    else:
        l = 1 if spec.kind == "cycle" else spec.l
        edges = set()
        for i in range(n):
            for s in range(1, l + 1):
                j = (i + s) % n
                edges.add((min(i, j) + 1, max(i, j) + 1))
    return Graph(n, frozenset(edges))


def parse_generator(text: str) -> GeneratorSpec:
    """Parse ``kind:args``, e.g. ``path:4`` or ``circulant:1000,100``."""
    kind, sep, args = text.partition(":")
    kind = kind.strip().lower()
    if not sep:
        raise GraphError(f"generator must look like 'kind:args', got {text!r}")
    try:
        values = [int(a) for a in args.split(",")]
    except ValueError:
        raise GraphError(f"generator arguments must be integers: {args!r}") from None
    if kind == "circulant":
        if len(values) != 2:
            raise GraphError("circulant generator needs 'circulant:n,l'")
        return GeneratorSpec(kind, values[0], values[1])
    if len(values) != 1:
        raise GraphError(f"{kind} generator takes a single argument n")
    return GeneratorSpec(kind, values[0])


def is_connected(g: Graph) -> bool:
    adj = g.neighbours()
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count == g.n


def laplacian(g: Graph) -> np.ndarray:
    """Positive-semidefinite Laplacian: degrees on the diagonal, -1 per edge."""
    L = np.zeros((g.n, g.n))
    if g.edges:
        idx = np.array(sorted(g.edges)) - 1
        L[idx[:, 0], idx[:, 1]] = -1.0
        L[idx[:, 1], idx[:, 0]] = -1.0
    L[np.diag_indices(g.n)] = g.degrees()
    return L

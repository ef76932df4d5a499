"""Simple undirected graphs: construction, edge-list I/O, builtins and BFS distances."""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple


class GraphError(Exception):
    """Base class for errors raised by this package."""


class GraphFormatError(GraphError, ValueError):
    """Malformed edge-list input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphValidationError(GraphError, ValueError):
    """Input is well formed but violates a simple-graph or argument constraint."""


class DisconnectedPairError(GraphError):
    """No path exists between the requested nodes."""

    def __init__(self, source: int, target: int):
        self.source = source
        self.target = target
        super().__init__(f"disconnected pair: node {target} is unreachable from node {source}")


class NodePair(NamedTuple):
    source: int
    target: int

    def reversed(self) -> "NodePair":
        return NodePair(self.target, self.source)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on nodes ``0..node_count-1``.

    ``adjacency[i]`` is the sorted tuple of neighbours of node ``i``.
    """

    node_count: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.node_count < 1:
            raise GraphValidationError("a graph needs at least one node")
        if len(self.adjacency) != self.node_count:
            raise GraphValidationError("adjacency must have one entry per node")
        for i, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphValidationError(f"neighbours of node {i} must be sorted and distinct")
            for j in nbrs:
                if j == i:
                    raise GraphValidationError(f"self-loop at node {i}")
                if not 0 <= j < self.node_count:
                    raise GraphValidationError(f"node {i} has out-of-range neighbour {j}")
                if i not in self.adjacency[j]:
                    raise GraphValidationError(f"edge ({i}, {j}) is not symmetric")

    @classmethod
    def from_edges(cls, node_count: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(node_count)]
        for u, v in edges:
            if u == v:
                raise GraphValidationError(f"self-loop at node {u}")
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise GraphValidationError(f"edge ({u}, {v}) out of range for {node_count} nodes")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(node_count, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def edge_count(self) -> int:
        return sum(len(n) for n in self.adjacency) // 2

    def neighbors(self, i: int) -> tuple[int, ...]:
        return self.adjacency[i]

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adjacency[i]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, nbrs in enumerate(self.adjacency) for j in nbrs if i < j]

    def check_node(self, i: int) -> None:
        if not 0 <= i < self.node_count:
            raise GraphValidationError(f"node {i} not in 0..{self.node_count - 1}")

    def __repr__(self):
        return f"Graph(N={self.node_count}, M={self.edge_count})"


_HEADER = re.compile(r"^N\s+(\S+)$")


def parse_edge_list(text: str | Iterable[str]) -> Graph:
    """Parse the edge-list format.

    Lines starting with ``#`` and blank lines are ignored. An optional first
    data line ``N <count>`` declares the node count, which lets trailing
    isolated nodes exist. Every other line is ``u v`` with 0-indexed ids.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    declared = None
    edges = []
    seen_data = False
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        header = _HEADER.match(line)
        if header:
            if seen_data:
                raise GraphFormatError("'N <count>' header must precede edge lines", lineno)
            try:
                declared = int(header.group(1))
            except ValueError:
                raise GraphFormatError(f"invalid node count {header.group(1)!r}", lineno) from None
            if declared < 1:
                raise GraphFormatError("node count must be positive", lineno)
            seen_data = True
            continue
        seen_data = True
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"expected two node ids, got {len(tokens)} tokens", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f"non-integer node id in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise GraphFormatError("node ids must be non-negative", lineno)
        if u == v:
            raise GraphValidationError(f"line {lineno}: self-loop at node {u}")
        edges.append((u, v))

    max_id = max((max(e) for e in edges), default=-1)
    if declared is None:
        if max_id < 0:
            raise GraphFormatError("no edges and no 'N <count>' header")
        declared = max_id + 1
        used = {x for e in edges for x in e}
        if len(used) != declared:
            missing = min(set(range(declared)) - used)
            raise GraphValidationError(
                f"node ids are not dense: {missing} never appears "
                "(declare isolated nodes with an 'N <count>' header)"
            )
    elif max_id >= declared:
        raise GraphValidationError(f"node id {max_id} exceeds declared count {declared}")
    return Graph.from_edges(declared, edges)


def format_edge_list(g: Graph, header: bool = True) -> str:
    out = [f"N {g.node_count}"] if header else []
    out += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(out) + "\n"


# Zachary's karate club, standard 0-indexed labelling.
KARATE_EDGES = (
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (0, 7), (0, 8), (0, 10), (0, 11),
    (0, 12), (0, 13), (0, 17), (0, 19), (0, 21), (0, 31), (1, 2), (1, 3), (1, 7), (1, 13),
    (1, 17), (1, 19), (1, 21), (1, 30), (2, 3), (2, 7), (2, 8), (2, 9), (2, 13), (2, 27),
    (2, 28), (2, 32), (3, 7), (3, 12), (3, 13), (4, 6), (4, 10), (5, 6), (5, 10), (5, 16),
    (6, 16), (8, 30), (8, 32), (8, 33), (9, 33), (13, 33), (14, 32), (14, 33), (15, 32),
    (15, 33), (18, 32), (18, 33), (19, 33), (20, 32), (20, 33), (22, 32), (22, 33), (23, 25),
    (23, 27), (23, 29), (23, 32), (23, 33), (24, 25), (24, 27), (24, 31), (25, 31), (26, 29),
    (26, 33), (27, 33), (28, 31), (28, 33), (29, 32), (29, 33), (30, 32), (30, 33), (31, 32),
    (31, 33), (32, 33),
)

BUILTIN_NAMES = ("karate", "complete:<N>", "path:<N>", "cycle:<N>")


def builtin_graph(name: str) -> Graph:
    if name == "karate":
        return Graph.from_edges(34, KARATE_EDGES)
    family, _, size = name.partition(":")
    if family not in ("complete", "path", "cycle") or not size:
        raise GraphValidationError(
            f"unknown builtin graph {name!r}; valid names: {', '.join(BUILTIN_NAMES)}"
        )
    try:
        n = int(size)
    except ValueError:
        raise GraphValidationError(f"invalid size in builtin graph {name!r}") from None
    if family == "complete":
        if n < 2:
            raise GraphValidationError("complete:<N> requires N >= 2")
        return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))
    if family == "path":
        if n < 1:
            raise GraphValidationError("path:<N> requires N >= 1")
        return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))
    if n < 3:
        raise GraphValidationError("cycle:<N> requires N >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    """Hop distance from ``source`` to every node, ``None`` where unreachable."""
    dist: list[int | None] = [None] * g.node_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] is None:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def is_connected(g: Graph) -> bool:
    return all(d is not None for d in bfs_distances(g, 0))


def shortest_path_length(g: Graph, pair: tuple[int, int]) -> int:
    source, target = pair
    g.check_node(source)
    g.check_node(target)
    if source == target:
        return 0
    d = bfs_distances(g, source)[target]
    if d is None:
        raise DisconnectedPairError(source, target)
    return d


def find_unreachable_pair(g: Graph) -> NodePair | None:
    """Return some pair ``(0, j)`` with ``j`` unreachable from 0, if any."""
    for j, d in enumerate(bfs_distances(g, 0)):
        if d is None:
            return NodePair(0, j)
    return None

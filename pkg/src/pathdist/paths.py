"""Exact simple-path length distributions by depth-limited search."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import _kernel
from .graph import (
    DisconnectedPairError,
    Graph,
    GraphValidationError,
    NodePair,
    bfs_distances,
    find_unreachable_pair,
)


@dataclass(frozen=True)
class PathLengthDistribution:
    """Simple-path counts between a pair for lengths ``1..limit``.

    ``counts[n - 1]`` is the number of simple paths with exactly n edges.
    ``shortest`` is the BFS distance of the pair, known even when ``limit``
    stops short of it (then every count is zero and ``below_shortest`` is set).
    """

    pair: NodePair
    counts: tuple[int, ...]
    node_count: int
    shortest: int

    @property
    def limit(self) -> int:
        return len(self.counts)

    def at(self, n: int) -> int:
        if n < 1:
            raise IndexError(f"length {n} < 1")
        return self.counts[n - 1] if n <= self.limit else 0

    @property
    def exhausted(self) -> bool:
        # only a depth bound of N-1 proves no longer path exists
        return self.limit >= self.node_count - 1

    @property
    def below_shortest(self) -> bool:
        return self.limit < self.shortest

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def longest_found(self) -> int:
        for n in range(self.limit, 0, -1):
            if self.counts[n - 1]:
                return n
        return 0

    def as_dict(self) -> dict[int, int]:
        return {n: c for n, c in enumerate(self.counts, start=1) if c}


@dataclass(frozen=True)
class PairStats:
    pair: NodePair
    total_paths: int
    min_length: int
    max_length: int
    mean_length: Fraction
    mode_length: int


def _check_pair(g: Graph, pair, limit: int) -> NodePair:
    pair = NodePair(*pair)
    g.check_node(pair.source)
    g.check_node(pair.target)
    if pair.source == pair.target:
        raise GraphValidationError("paths are open walks: source and target must differ")
    if limit < 1:
        raise GraphValidationError("limit must be >= 1")
    return pair


def default_threads() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else os.cpu_count() or 1


class _Prepared:
    """Kernel-ready arrays for one graph, reused across many pair queries."""

    def __init__(self, g: Graph):
        self.masks = _kernel.adjacency_bitsets(g.adjacency)
        self.ptr, self.nbrs = _kernel.csr_neighbors(g.adjacency)


def _count(g: Graph, prep: _Prepared, pair: NodePair, limit: int, threads: int | None) -> list[int]:
    # simple paths have at most N-1 edges; deeper levels are zero
    depth = min(limit, g.node_count - 1)
    roots = g.neighbors(pair.source)

    def branch(first):
        return _kernel.count_branch(prep.masks, prep.ptr, prep.nbrs, pair.source, pair.target, first, depth)

    threads = default_threads() if threads is None else threads
    if threads < 1:
        raise GraphValidationError("threads must be >= 1")
    if threads == 1 or len(roots) < 2:
        parts = [branch(r) for r in roots]
    else:
        with ThreadPoolExecutor(max_workers=min(threads, len(roots))) as pool:
            parts = list(pool.map(branch, roots))

    counts = [0] * limit
    for part in parts:
        for n in range(1, depth + 1):
            counts[n - 1] += int(part[n])
    return counts


def count_paths_by_length(
    g: Graph, pair: tuple[int, int], limit: int, threads: int | None = None
) -> PathLengthDistribution:
    """Count simple paths of each length ``1..limit`` between ``pair``.

    Paths are never materialized. The search is split at the source: each
    first-hop neighbour is an independent branch, and per-length counts are
    summed, so the result does not depend on ``threads``.
    """
    pair = _check_pair(g, pair, limit)
    shortest = bfs_distances(g, pair.source)[pair.target]
    if shortest is None:
        raise DisconnectedPairError(*pair)
    counts = _count(g, _Prepared(g), pair, limit, threads)
    return PathLengthDistribution(pair, tuple(counts), g.node_count, shortest)


def enumerate_paths(
    g: Graph, pair: tuple[int, int], limit: int, consumer: Callable[[list[int]], object]
) -> int:
    """Pass every simple path of at most ``limit`` edges to ``consumer``.

    Paths arrive in lexicographic order of their node sequences. Each list
    handed to ``consumer`` is a fresh copy. Returns the number of paths.
    """
    pair = _check_pair(g, pair, limit)
    source, target = pair
    path = [source]
    on_path = [False] * g.node_count
    on_path[source] = True
    emitted = 0

    def extend(u):
        nonlocal emitted
        for v in g.neighbors(u):
            if on_path[v]:
                continue
            if v == target:
                consumer(path + [v])
                emitted += 1
                continue
            if len(path) >= limit:
                continue
            on_path[v] = True
            path.append(v)
            extend(v)
            path.pop()
            on_path[v] = False

    extend(source)
    return emitted


def all_pairs_stats(g: Graph, limit: int, threads: int | None = None) -> list[PairStats]:
    """Summary row for every unordered pair ``i < j``, sorted by ``(i, j)``."""
    from .stats import summarize

    if limit < 1:
        raise GraphValidationError("limit must be >= 1")
    missing = find_unreachable_pair(g)
    if missing is not None:
        raise DisconnectedPairError(*missing)
    prep = _Prepared(g)
    rows = []
    for i in range(g.node_count):
        dist = bfs_distances(g, i)
        for j in range(i + 1, g.node_count):
            pair = NodePair(i, j)
            counts = _count(g, prep, pair, limit, threads)
            rows.append(summarize(PathLengthDistribution(pair, tuple(counts), g.node_count, dist[j])))
    return rows


def distribution_from_counts(pair: Sequence[int], counts: Sequence[int], node_count: int) -> PathLengthDistribution:
    """Wrap externally computed counts (e.g. a closed form) as a distribution."""
    shortest = next((n for n, c in enumerate(counts, start=1) if c), 0)
    return PathLengthDistribution(NodePair(*pair), tuple(int(c) for c in counts), node_count, shortest)

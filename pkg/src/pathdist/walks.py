"""Exact walk counts from integer adjacency-matrix powers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, GraphValidationError, NodePair, shortest_path_length


@dataclass(frozen=True)
class WalkCountSeries:
    """Walk counts between a fixed pair for lengths ``1..max_len``.

    ``counts[n - 1]`` is the (source, target) entry of ``A**n``.
    """

    pair: NodePair
    counts: tuple[int, ...]

    @property
    def max_len(self) -> int:
        return len(self.counts)

    def at(self, n: int) -> int:
        if not 1 <= n <= self.max_len:
            raise IndexError(f"length {n} outside 1..{self.max_len}")
        return self.counts[n - 1]

    @property
    def found(self) -> bool:
        """False when no walk of any length up to ``max_len`` exists."""
        return any(self.counts)

    @property
    def shortest_walk_length(self) -> int | None:
        for n, c in enumerate(self.counts, start=1):
            if c:
                return n
        return None

    @property
    def total(self) -> int:
        return sum(self.counts)


def _times_adjacency(row: list[int], g: Graph) -> list[int]:
    # (row . A)[c] = sum of row entries over the neighbours of c
    return [sum(row[j] for j in nbrs) for nbrs in g.adjacency]


def adjacency_powers(g: Graph, max_len: int):
    """Yield ``A**1 .. A**max_len`` as nested lists of Python ints."""
    power = []
    for nbrs in g.adjacency:
        row = [0] * g.node_count
        for j in nbrs:
            row[j] = 1
        power.append(row)
    yield power
    for _ in range(max_len - 1):
        power = [_times_adjacency(row, g) for row in power]
        yield power


def walk_counts(g: Graph, pair: tuple[int, int], max_len: int, row_only: bool = False) -> WalkCountSeries:
    """Count walks of every length ``1..max_len`` from ``pair[0]`` to ``pair[1]``.

    The default multiplies the full running power by ``A``; ``row_only``
    keeps only the source row, which gives the same counts with O(N) memory.
    """
    pair = NodePair(*pair)
    g.check_node(pair.source)
    g.check_node(pair.target)
    if max_len < 1:
        raise GraphValidationError("max_len must be >= 1")

    if row_only:
        row = [1 if j == pair.source else 0 for j in range(g.node_count)]
        counts = []
        for _ in range(max_len):
            row = _times_adjacency(row, g)
            counts.append(row[pair.target])
    else:
        counts = [p[pair.source][pair.target] for p in adjacency_powers(g, max_len)]

    series = WalkCountSeries(pair, tuple(counts))
    swl = series.shortest_walk_length
    if swl is not None and pair.source != pair.target:
        spl = shortest_path_length(g, pair)
        if swl != spl:
            raise RuntimeError(f"shortest walk length {swl} differs from shortest path length {spl}")
    return series


def windowed_mean(counts: dict[int, int] | tuple[int, ...], lo: int, hi: int) -> Fraction:
    """Exact mean length over lengths ``lo..hi`` weighted by ``counts``.

    A tuple is read as 1-indexed: ``counts[n - 1]`` is the count at length n.
    """
    def get(n):
        if isinstance(counts, dict):
            return counts.get(n, 0)
        return counts[n - 1] if 1 <= n <= len(counts) else 0

    num = sum(n * get(n) for n in range(lo, hi + 1))
    den = sum(get(n) for n in range(lo, hi + 1))
    if den == 0:
        raise GraphValidationError("empty truncation window")
    return Fraction(num, den)


def truncated_expected_walk_length(series: WalkCountSeries, k: int) -> Fraction:
    """Mean walk length over the window ``[sWL, sWL + k]``."""
    if k < 0:
        raise GraphValidationError("k must be non-negative")
    swl = series.shortest_walk_length
    if swl is None:
        raise GraphValidationError("empty truncation window")
    if swl + k > series.max_len:
        raise GraphValidationError(
            f"series truncated before window end: need length {swl + k}, have {series.max_len}"
        )
    return windowed_mean(series.counts, swl, swl + k)

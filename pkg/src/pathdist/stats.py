"""Truncated expected lengths, the delta measure, and convergence scans."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .graph import Graph, GraphValidationError, NodePair, shortest_path_length
from .paths import PairStats, PathLengthDistribution, count_paths_by_length
from .walks import WalkCountSeries, truncated_expected_walk_length, windowed_mean

DEFAULT_EPSILON = Fraction(1, 10**6)


def as_fraction(value) -> Fraction:
    """Exact rational from an int, Fraction, decimal string or float (via its repr)."""
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


def truncated_expected_path_length(dist: PathLengthDistribution, k: int) -> Fraction:
    """Mean path length over the window ``[sPL, sPL + k]``."""
    if k < 0:
        raise GraphValidationError("k must be non-negative")
    end = dist.shortest + k
    if end > dist.limit:
        raise GraphValidationError(
            f"distribution truncated before window end: need length {end}, limit is {dist.limit}"
        )
    return windowed_mean(dist.counts, dist.shortest, end)


def delta_measure(dist: Union[PathLengthDistribution, WalkCountSeries], k: int) -> Fraction:
    """Truncated expected length minus the shortest length, for paths or walks."""
    if isinstance(dist, WalkCountSeries):
        return truncated_expected_walk_length(dist, k) - dist.shortest_walk_length
    return truncated_expected_path_length(dist, k) - dist.shortest


@dataclass(frozen=True)
class ConvergenceEntry:
    k: int
    expected_length: Fraction
    delta: Fraction
    exhausted: bool


@dataclass
class ConvergenceReport:
    pair: NodePair
    shortest: int
    epsilon: Fraction
    entries: list[ConvergenceEntry] = field(default_factory=list)
    converged_at_k: int | None = None


def convergence_scan(
    g: Graph,
    pair: tuple[int, int],
    epsilon=DEFAULT_EPSILON,
    k_max: int | None = None,
    early_stop: bool = False,
    threads: int | None = None,
) -> ConvergenceReport:
    """Deepen the search one level per k and track the truncated expectation.

    Round k reruns the search with limit ``sPL + k``; no state is carried
    between rounds. ``converged_at_k`` is the first ``k >= 1`` with
    ``|E_k - E_{k-1}| < epsilon``. The scan covers ``k = 0..k_max``
    (default ``N - 1 - sPL``, at least 1) unless ``early_stop`` ends it at
    convergence.
    """
    pair = NodePair(*pair)
    if pair.source == pair.target:
        raise GraphValidationError("paths are open walks: source and target must differ")
    epsilon = as_fraction(epsilon)
    if epsilon <= 0:
        raise GraphValidationError("epsilon must be positive")
    spl = shortest_path_length(g, pair)
    if k_max is None:
        k_max = max(g.node_count - 1 - spl, 1)
    if k_max < 0:
        raise GraphValidationError("k_max must be non-negative")

    report = ConvergenceReport(pair, spl, epsilon)
    previous = None
    for k in range(k_max + 1):
        dist = count_paths_by_length(g, pair, spl + k, threads=threads)
        expected = truncated_expected_path_length(dist, k)
        report.entries.append(ConvergenceEntry(k, expected, expected - spl, dist.exhausted))
        if previous is not None and report.converged_at_k is None and abs(expected - previous) < epsilon:
            report.converged_at_k = k
            if early_stop:
                break
        previous = expected
    return report


def summarize(dist: PathLengthDistribution) -> PairStats:
    """Total, min, max, exact mean and mode (ties go to the shorter length)."""
    nonzero = dist.as_dict()
    if not nonzero:
        raise GraphValidationError(f"empty distribution for pair {tuple(dist.pair)}")
    lengths = sorted(nonzero)
    best = max(nonzero.values())
    mode = next(n for n in lengths if nonzero[n] == best)
    return PairStats(
        pair=dist.pair,
        total_paths=sum(nonzero.values()),
        min_length=lengths[0],
        max_length=lengths[-1],
        mean_length=windowed_mean(nonzero, lengths[0], lengths[-1]),
        mode_length=mode,
    )


def render_rational(value: Fraction, digits: int = 6, exact: bool = False) -> str:
    """Fixed-point decimal with round-half-even, or ``num/den`` when ``exact``."""
    if exact:
        return f"{value.numerator}/{value.denominator}"
    scaled = round(value * 10**digits)  # Fraction.__round__ rounds half to even
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"

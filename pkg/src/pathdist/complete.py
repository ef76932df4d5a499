"""Closed-form simple-path counts for complete graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import GraphValidationError
from .paths import PathLengthDistribution, distribution_from_counts


@dataclass(frozen=True)
class CompleteGraphSpec:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise GraphValidationError("a complete graph needs n >= 2")


def complete_path_count(spec: CompleteGraphSpec, length: int) -> int:
    """Simple paths with ``length`` edges between two fixed nodes of K_n.

    With ``k = length - 1`` intermediate nodes the count is the number of
    ordered selections of k nodes from the remaining n - 2:
    ``(n-2)(n-3)...(n-k-1)``.
    """
    if length < 1:
        raise GraphValidationError("length must be >= 1")
    k = length - 1
    if k >= spec.n - 1:
        return 0
    count = 1
    for r in range(2, k + 2):
        count *= spec.n - r
    return count


def complete_distribution(spec: CompleteGraphSpec) -> PathLengthDistribution:
    counts = [complete_path_count(spec, n) for n in range(1, spec.n)]
    return distribution_from_counts((0, 1), counts, spec.n)

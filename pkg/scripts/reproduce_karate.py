"""Recompute the karate-club and complete-graph numbers and print them next to the published ones.

Usage:
    python scripts/reproduce_karate.py [--threads N]
"""

import argparse
import time

from pathdist import (
    CompleteGraphSpec,
    builtin_graph,
    complete_distribution,
    count_paths_by_length,
    shortest_path_length,
    summarize,
    truncated_expected_path_length,
    walk_counts,
)
from pathdist.stats import render_rational
from pathdist.walks import truncated_expected_walk_length


def row(label, computed, published=None):
    status = "" if published is None else ("  ok" if computed == published else f"  MISMATCH (published {published})")
    print(f"{label:<44} {computed}{status}")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--threads", type=int, default=None)
    args = parser.parse_args()

    g = builtin_graph("karate")
    row("nodes", g.node_count, 34)
    row("edges", g.edge_count, 78)
    row("sPL(0,1)", shortest_path_length(g, (0, 1)), 1)

    walks = walk_counts(g, (0, 1), 18)
    row("(A^1)_01, (A^2)_01, (A^3)_01", walks.counts[:3], (1, 7, 37))
    row("walks 0->1 with length <= 18", walks.total, 8854467719776520000)

    start = time.perf_counter()
    paths = count_paths_by_length(g, (0, 1), 33, threads=args.threads)
    row("paths 0->1 of length 1..3", paths.counts[:3], (1, 7, 13))
    row("paths 0->1 (all)", paths.total, 80137)
    row("longest path 0->1", paths.longest_found, 18)
    print(f"{'':<44} ({time.perf_counter() - start:.2f}s)")

    row("E[PL_01], k=17", render_rational(truncated_expected_path_length(paths, 17)))
    row("E[wL_01], k=17", render_rational(truncated_expected_walk_length(walks, 17)))

    start = time.perf_counter()
    far = summarize(count_paths_by_length(g, (16, 25), 33, threads=args.threads))
    row("paths 16->25 (all)", far.total_paths, 4319868)
    row("path lengths 16->25", (far.min_length, far.max_length), (4, 23))
    print(f"{'':<44} ({time.perf_counter() - start:.2f}s)")

    c10 = complete_distribution(CompleteGraphSpec(10))
    row("K10 paths by length", c10.counts)


if __name__ == "__main__":
    main()

import networkx as nx
import pytest
from hypothesis import given, settings

from pathdist import (
    DisconnectedPairError,
    GraphValidationError,
    all_pairs_stats,
    builtin_graph,
    count_paths_by_length,
    enumerate_paths,
    parse_edge_list,
    walk_counts,
)

from conftest import connected_graphs
from oracles import brute_path_counts


def test_karate_first_three_lengths(karate):
    d = count_paths_by_length(karate, (0, 1), 3)
    assert d.counts == (1, 7, 13)
    assert d.shortest == 1 and not d.exhausted


def test_karate_full_pair_0_1(karate):
    d = count_paths_by_length(karate, (0, 1), 18)
    assert d.total == 80137
    assert d.longest_found == 18


def test_path_graph_ends():
    d = count_paths_by_length(builtin_graph("path:3"), (0, 2), 2)
    assert d.counts == (0, 1)
    assert d.exhausted


def test_same_endpoints_rejected(karate):
    with pytest.raises(GraphValidationError, match="open walks"):
        count_paths_by_length(karate, (5, 5), 3)


def test_limit_below_shortest_flags(karate):
    d = count_paths_by_length(karate, (16, 25), 3)
    assert d.counts == (0, 0, 0)
    assert d.below_shortest and d.shortest == 4 and d.longest_found == 0


def test_disconnected_pair_raises():
    with pytest.raises(DisconnectedPairError):
        count_paths_by_length(parse_edge_list("0 1\n2 3\n"), (0, 2), 3)


def test_limit_beyond_node_count_pads_zeros():
    d = count_paths_by_length(builtin_graph("complete:4"), (0, 1), 8)
    assert d.counts == (1, 2, 2, 0, 0, 0, 0, 0)


def test_multiword_bitsets_on_large_cycle():
    # 130 nodes needs three 64-bit words; a cycle has exactly two paths per pair
    g = builtin_graph("cycle:130")
    d = count_paths_by_length(g, (0, 100), 129)
    assert d.as_dict() == {30: 1, 100: 1}


def test_agrees_with_networkx_all_simple_paths():
    g = builtin_graph("karate")
    ref = nx.karate_club_graph()
    for pair in [(0, 1), (4, 10), (2, 9)]:
        lengths = [len(p) - 1 for p in nx.all_simple_paths(ref, *pair, cutoff=9)]
        d = count_paths_by_length(g, pair, 9)
        assert d.as_dict() == {n: lengths.count(n) for n in set(lengths)}


def test_enumerate_examples(karate):
    seen = []
    assert enumerate_paths(builtin_graph("path:3"), (0, 2), 2, seen.append) == 1
    assert seen == [[0, 1, 2]]
    assert enumerate_paths(builtin_graph("complete:4"), (0, 1), 3, lambda p: None) == 5
    assert enumerate_paths(karate, (0, 1), 2, lambda p: None) == 8


def test_enumerate_is_lexicographic_and_simple(karate):
    paths = []
    n = enumerate_paths(karate, (0, 33), 5, paths.append)
    assert n == len(paths) == count_paths_by_length(karate, (0, 33), 5).total
    assert paths == sorted(paths)
    assert all(len(set(p)) == len(p) for p in paths)


def test_threads_do_not_change_counts(karate):
    one = count_paths_by_length(karate, (16, 25), 12, threads=1)
    many = count_paths_by_length(karate, (16, 25), 12, threads=8)
    assert one == many


def test_all_pairs_small_graphs():
    rows = all_pairs_stats(builtin_graph("complete:4"), 3)
    assert len(rows) == 6 and {r.total_paths for r in rows} == {5}
    rows = all_pairs_stats(builtin_graph("path:3"), 2)
    assert [tuple(r.pair) for r in rows] == [(0, 1), (0, 2), (1, 2)]
    assert [r.total_paths for r in rows] == [1, 1, 1]


def test_all_pairs_disconnected_names_pair():
    with pytest.raises(DisconnectedPairError, match="node 2"):
        all_pairs_stats(parse_edge_list("0 1\n2 3\n"), 3)


@settings(max_examples=60, deadline=None)
@given(connected_graphs())
def test_matches_permutation_oracle(g):
    n = g.node_count
    for i in range(n):
        for j in range(i + 1, n):
            d = count_paths_by_length(g, (i, j), n - 1)
            assert d.as_dict() == dict(brute_path_counts(g, i, j))


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=10))
def test_dominated_by_walks_with_equality_at_shortest(g):
    n = g.node_count
    for i in range(n):
        for j in range(i + 1, n):
            d = count_paths_by_length(g, (i, j), n + 1)
            w = walk_counts(g, (i, j), n + 1)
            assert all(p <= c for p, c in zip(d.counts, w.counts))
            assert d.at(d.shortest) == w.at(d.shortest) >= 1
            assert all(d.at(m) == 0 for m in range(n, n + 2))


@settings(max_examples=40, deadline=None)
@given(connected_graphs())
def test_symmetry_and_monotone_truncation(g):
    n = g.node_count
    for i in range(n):
        for j in range(i + 1, n):
            full = count_paths_by_length(g, (i, j), n - 1)
            assert full.counts == count_paths_by_length(g, (j, i), n - 1).counts
            for limit in range(1, n - 1):
                assert count_paths_by_length(g, (i, j), limit).counts == full.counts[:limit]

from fractions import Fraction

import pytest
from hypothesis import given, settings

from pathdist import (
    CompleteGraphSpec,
    GraphValidationError,
    builtin_graph,
    complete_distribution,
    convergence_scan,
    count_paths_by_length,
    delta_measure,
    summarize,
    truncated_expected_path_length,
    walk_counts,
)
from pathdist.stats import render_rational
from pathdist.walks import windowed_mean

from conftest import connected_graphs

# first derived value of the k=17 expectation for karate (0, 1); kept as a regression constant
KARATE_01_FULL_MEAN = Fraction(961293, 80137)


@pytest.fixture(scope="module")
def karate_01(karate):
    return count_paths_by_length(karate, (0, 1), 18)


@pytest.mark.parametrize("k,expected", [(0, Fraction(1)), (1, Fraction(15, 8)), (2, Fraction(18, 7))])
def test_path_expectation_examples(karate_01, k, expected):
    assert truncated_expected_path_length(karate_01, k) == expected


def test_path_expectation_k17(karate_01):
    d = karate_01
    oracle = Fraction(sum(n * d.at(n) for n in range(1, 19)), d.total)
    assert truncated_expected_path_length(d, 17) == oracle == KARATE_01_FULL_MEAN
    assert render_rational(oracle) == "11.995620"


def test_window_past_limit(karate):
    d = count_paths_by_length(karate, (0, 1), 3)
    with pytest.raises(GraphValidationError, match="truncated before window end"):
        truncated_expected_path_length(d, 3)


def test_window_start_equivalence(karate):
    d = count_paths_by_length(karate, (16, 25), 20)
    for k in range(17):
        assert truncated_expected_path_length(d, k) == windowed_mean(d.counts, 1, 4 + k)


def test_delta_examples(karate, karate_01):
    assert delta_measure(karate_01, 0) == 0
    assert delta_measure(karate_01, 2) == Fraction(11, 7)
    walks = walk_counts(karate, (0, 1), 18)
    assert delta_measure(walks, 0) == 0
    assert delta_measure(karate_01, 17) < delta_measure(walks, 17)


def test_convergence_on_karate(karate, karate_01):
    report = convergence_scan(karate, (0, 1))
    assert len(report.entries) == 33
    values = [e.expected_length for e in report.entries]
    assert values[0] == 1 and report.entries[0].delta == 0
    assert all(b >= a for a, b in zip(values, values[1:]))
    # the longest path has 18 edges, so the window stops changing after k = 17
    assert values[16] != values[17]
    assert all(v == values[17] == KARATE_01_FULL_MEAN for v in values[17:])
    assert report.converged_at_k == 18
    assert report.entries[17].exhausted is False and report.entries[32].exhausted


def test_convergence_with_k_max_17(karate):
    report = convergence_scan(karate, (0, 1), epsilon=Fraction(1, 10**6), k_max=17)
    assert [e.k for e in report.entries] == list(range(18))
    assert report.converged_at_k is None


def test_convergence_loose_epsilon_and_early_stop(karate):
    full = convergence_scan(karate, (0, 1), epsilon="0.01")
    early = convergence_scan(karate, (0, 1), epsilon="0.01", early_stop=True)
    assert full.converged_at_k == early.converged_at_k == early.entries[-1].k
    assert full.entries[: len(early.entries)] == early.entries


def test_convergence_path_graph():
    report = convergence_scan(builtin_graph("path:3"), (0, 2), epsilon=0.5)
    assert report.converged_at_k == 1
    assert [e.expected_length for e in report.entries] == [2, 2]
    assert [e.delta for e in report.entries] == [0, 0]


def test_convergence_complete_tracks_formula():
    analytic = complete_distribution(CompleteGraphSpec(10))
    report = convergence_scan(builtin_graph("complete:10"), (0, 1))
    for e in report.entries:
        assert e.expected_length == truncated_expected_path_length(analytic, e.k)
    assert report.entries[-1].expected_length == summarize(analytic).mean_length


def test_convergence_argument_errors(karate):
    with pytest.raises(GraphValidationError):
        convergence_scan(karate, (3, 3))
    with pytest.raises(GraphValidationError):
        convergence_scan(karate, (0, 1), epsilon=0)


def test_summarize_examples(karate):
    s = summarize(count_paths_by_length(karate, (16, 25), 33))
    assert (s.total_paths, s.min_length, s.max_length) == (4319868, 4, 23)
    s = summarize(count_paths_by_length(builtin_graph("path:3"), (0, 2), 2))
    assert (s.total_paths, s.min_length, s.max_length, s.mode_length, s.mean_length) == (1, 2, 2, 2, 2)
    s = summarize(complete_distribution(CompleteGraphSpec(5)))
    assert (s.total_paths, s.mode_length) == (16, 3)


def test_summarize_empty(karate):
    with pytest.raises(GraphValidationError):
        summarize(count_paths_by_length(karate, (16, 25), 2))


@pytest.mark.parametrize("value,text", [
    (Fraction(18, 7), "2.571429"),
    (Fraction(1, 2 * 10**6), "0.000000"),
    (Fraction(3, 2 * 10**6), "0.000002"),
    (Fraction(-15, 8), "-1.875000"),
    (Fraction(5), "5.000000"),
])
def test_render_half_even(value, text):
    assert render_rational(value) == text


def test_render_exact():
    assert render_rational(Fraction(126, 45), exact=True) == "14/5"


@settings(max_examples=40, deadline=None)
@given(connected_graphs())
def test_path_invariants(g):
    n = g.node_count
    for i in range(n):
        for j in range(i + 1, n):
            d = count_paths_by_length(g, (i, j), n - 1)
            ks = range(n - d.shortest)
            values = [truncated_expected_path_length(d, k) for k in ks]
            assert all(b >= a for a, b in zip(values, values[1:]))
            saturate = d.longest_found - d.shortest
            assert all(v == values[saturate] for v in values[saturate:])
            for k in ks:
                assert 0 <= delta_measure(d, k) <= n - 1 - d.shortest
            s = summarize(d)
            assert s.min_length <= s.mode_length <= s.max_length
            assert s.min_length <= s.mean_length <= s.max_length

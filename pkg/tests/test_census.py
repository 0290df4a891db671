from __future__ import annotations

import itertools

import pytest

from conftest import cached_census
from etgraph import appendix
from etgraph.census import (
    MAX_FAST_N,
    census_edge_transitive,
    enumerate_connected,
    et_degree_filter,
    iter_census_graphs,
    oeis_counts,
)
from etgraph.graph import Graph, GraphError, bipartition, from_edges, is_biregular, is_connected, to_graph6
from etgraph.symmetry import andersen_edge_transitive, canonical_graph6, is_vertex_transitive


def brute_canonical(g: Graph) -> tuple[tuple[int, int], ...]:
    """Lexicographically least sorted edge list over all relabelings."""
    return min(
        tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in g.edges()))
        for p in itertools.permutations(range(g.n))
    )


def labeled_connected(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = from_edges(n, [e for k, e in enumerate(pairs) if mask >> k & 1])
        if is_connected(g):
            yield g


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21)])
def test_enumeration_counts_by_brute_force(n, expected):
    classes = {brute_canonical(g) for g in labeled_connected(n)}
    assert len(classes) == expected
    seen = []
    assert enumerate_connected(n, seen.append) == expected
    assert {brute_canonical(g) for g in seen} == classes


def test_enumeration_n6_against_labeled_dedup():
    classes = {canonical_graph6(g) for g in labeled_connected(6)}
    assert len(classes) == 112
    seen = []
    enumerate_connected(6, seen.append)
    codes = [canonical_graph6(g) for g in seen]
    assert len(codes) == len(set(codes)) == 112
    assert set(codes) == classes


def test_enumeration_n7_count():
    assert enumerate_connected(7) == 853


def test_guards():
    with pytest.raises(GraphError):
        enumerate_connected(11)
    with pytest.raises(GraphError):
        census_edge_transitive(MAX_FAST_N + 1)


def test_degree_filter_is_necessary():
    for n in range(2, 7):
        seen = []
        enumerate_connected(n, seen.append)
        for g in seen:
            if andersen_edge_transitive(g):
                assert et_degree_filter(g.rows, n)


def test_census_small_against_brute_force():
    for n in range(2, 7):
        brute = {canonical_graph6(g) for g in labeled_connected(n) if andersen_edge_transitive(g)} if n <= 5 else None
        report = census_edge_transitive(n)
        found = {e.graph6 for e in report.entries}
        if brute is not None:
            assert found == brute
        assert all(andersen_edge_transitive(g) for g in iter_census_graphs(report))


@pytest.mark.parametrize("n", [6, 7, 8, 9])
def test_census_counts(n):
    report = cached_census(n)
    assert report.count == oeis_counts()[n]
    for e, g in zip(report.entries, iter_census_graphs(report)):
        assert to_graph6(g) == e.graph6
        assert e.m == g.m
        assert e.vertex_transitive or e.biregular is not None
        assert e.vertex_transitive == is_vertex_transitive(g)
        assert e.bipartite == (bipartition(g) is not None)
        if e.bipartite:
            assert e.biregular == is_biregular(g)
    assert [e.graph6 for e in report.entries] == sorted(e.graph6 for e in report.entries)


@pytest.mark.parametrize("n", [6, 7, 8, 9])
def test_census_matches_appendix_rows(n):
    report = cached_census(n)
    rows = {canonical_graph6(r.build()): r.label for r in appendix.rows_for(n)}
    assert {e.graph6 for e in report.entries} == set(rows)
    assert all(e.family == rows[e.graph6] for e in report.entries)


def test_census_is_independent_of_threads():
    one = census_edge_transitive(8, threads=1)
    two = census_edge_transitive(8, threads=2)
    assert one.entries == two.entries and one.inspected == two.inspected


def test_oeis_counts():
    counts = oeis_counts()
    assert (counts[12], counts[17], counts[20]) == (19, 12, 43)
    assert list(counts) == list(range(6, 21))

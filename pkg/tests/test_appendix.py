from __future__ import annotations

import pytest

from etgraph import appendix
from etgraph.appendix import AppendixRow, check_row, rows_for, verify_appendix
from etgraph.census import oeis_counts
from etgraph.families import cycle, path
from etgraph.graph import GraphError
from etgraph.symmetry import is_isomorphic


@pytest.mark.parametrize("n", range(appendix.FIRST_N, appendix.LAST_N + 1))
def test_every_table_verifies(n):
    report = verify_appendix(n)
    assert report.failures == []
    assert report.duplicates == ()
    assert report.distinct == report.expected == oeis_counts()[n]
    assert report.ok


def test_thirteen_vertex_edge_counts():
    rows = rows_for(13)
    assert len(rows) == 10
    assert sorted(r.e for r in rows) == [12, 13, 22, 26, 30, 36, 39, 40, 42, 78]


def test_twenty_vertex_table_size():
    assert len(rows_for(20)) == 43


def test_two_distinct_graphs_with_36_edges_on_12_vertices():
    a, b = [r.build() for r in rows_for(12) if r.e == 36]
    assert not is_isomorphic(a, b)[0]


def test_rows_sorted_and_sources_known():
    for n in range(appendix.FIRST_N, appendix.LAST_N + 1):
        rows = rows_for(n)
        assert [(r.e, r.label) for r in rows] == sorted((r.e, r.label) for r in rows)
        assert {r.source for r in rows} <= {"generator", "fixture"}


def test_ten_vertex_typos_are_noted():
    notes = {r.label: r.note for r in rows_for(10)}
    assert "K_12" in notes["K_10"]
    assert "C_1_0" in notes["C_10"]


def test_check_row_reports_problems():
    bad = check_row(AppendixRow(5, 4, "P_5", lambda: path(5)))
    assert not bad.ok
    assert "not edge-transitive" in bad.problems
    wrong = check_row(AppendixRow(6, 7, "C_6", lambda: cycle(6)))
    assert any("edges" in p for p in wrong.problems)


def test_out_of_range_n():
    with pytest.raises(GraphError):
        rows_for(21)

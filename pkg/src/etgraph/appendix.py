"""The published tables of connected edge-transitive graphs on 6 to 20 vertices.

Each row names one graph and says how to build it: a generator from this
package, or a graph6 fixture for names without a construction here. Edge
counts are the tabulated ``e=`` values; the lists for ``n <= 11`` give no
edge counts, so those rows carry the count of the named graph.

:func:`verify_appendix` builds every row for one ``n`` and checks order,
size, connectivity, edge-transitivity and pairwise non-isomorphism.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import Callable

from .biregular import (
    extend,
    k4n_et_subgraph,
    nontrivial_et_subgraph,
    ring_construction,
    subdivided_multigraph,
    swap_sides,
)
from .families import (
    complete,
    complete_bipartite,
    complete_bipartite_minus_pm,
    complete_minus_pm,
    complete_multipartite,
    complement_product_complete,
    circulant,
    cycle,
    cycle_power,
    hypercube,
    johnson,
    kneser,
    load_fixture,
    paley,
    petersen,
    wreath,
)
from .graph import Graph, GraphError, cartesian_product, complement, is_connected, line_graph
from .symmetry import is_edge_transitive, search

FIRST_N = 6
LAST_N = 20


@dataclass(frozen=True)
class AppendixRow:
    n: int
    e: int
    label: str
    builder: Callable[[], Graph] = field(compare=False, repr=False)
    source: str = "generator"
    note: str = ""

    def build(self) -> Graph:
        return self.builder()


def _row(n: int, e: int, label: str, builder: Callable[[], Graph], note: str = "") -> AppendixRow:
    return AppendixRow(n, e, label, builder, "generator", note)


def _fx(n: int, e: int, label: str, name: str, note: str = "") -> AppendixRow:
    return AppendixRow(n, e, label, lambda: load_fixture(name), "fixture", note or f"fixture {name}")


def _subdivided(k: int, edges) -> Callable[[], Graph]:
    return lambda: subdivided_multigraph(k, list(edges))


def _pairs(k: int):
    return itertools.combinations(range(k), 2)


def _standard(n: int) -> list[AppendixRow]:
    """Stars, complete bipartite graphs, the cycle and the complete graph."""
    rows = [_row(n, a * (n - a), f"K_{{{a},{n - a}}}", lambda a=a: complete_bipartite(a, n - a))
            for a in range(1, n // 2 + 1)]
    rows.append(_row(n, n, f"C_{n}", lambda: cycle(n)))
    rows.append(_row(n, n * (n - 1) // 2, f"K_{n}", lambda: complete(n)))
    return rows


def _km_pm(n: int) -> AppendixRow:
    return _row(n, n * (n - 2) // 2, f"K_{n}-PM", lambda: complete_minus_pm(n))


def _kmm_pm(k: int) -> AppendixRow:
    return _row(2 * k, k * (k - 1), f"K_{{{k},{k}}}-PM", lambda: complete_bipartite_minus_pm(k))


def _multi(s: int, parts: int) -> AppendixRow:
    n = s * parts
    e = (n * n - parts * s * s) // 2
    return _row(n, e, "K_{" + ",".join([str(s)] * parts) + "}", lambda: complete_multipartite([s] * parts))


def _cbar(a: int, b: int) -> AppendixRow:
    n = a * b
    e = n * (n - 1) // 2 - n * (a + b - 2) // 2
    return _row(n, e, f"complement of K_{a} x K_{b}", lambda: complement_product_complete(a, b))


def _wreath(k: int, s: int) -> AppendixRow:
    return _row(k * s, k * s * s, f"Wreath({k},{s})", lambda: wreath(k, s))


def _octahedron_edges():
    return [(u, v) for u, v in _pairs(6) if u // 2 != v // 2]


def _k33_edges():
    return [(u, v) for u in range(3) for v in range(3, 6)]


def _rows_6() -> list[AppendixRow]:
    return _standard(6) + [_row(6, 12, "C_6^2", lambda: cycle_power(6, 2))]


def _rows_8() -> list[AppendixRow]:
    return _standard(8) + [
        _row(8, 24, "C_8^3", lambda: cycle_power(8, 3)),
        _row(8, 12, "Cube", lambda: hypercube(3)),
    ]


def _rows_9() -> list[AppendixRow]:
    return _standard(9) + [
        _row(9, 18, "C_3 x C_3", lambda: cartesian_product(cycle(3), cycle(3))),
        _multi(3, 3),
        _row(9, 12, "(4,2) subgraph of K_{3,6}", lambda: ring_construction(3, 4)),
    ]


_N10_NOTES = {
    "C_10": "typeset as C_1_0 in the table",
    "K_10": "printed as K_12 in the table; only the complete graph on 10 vertices fits",
}


def _rows_10() -> list[AppendixRow]:
    return [replace(r, note=_N10_NOTES.get(r.label, r.note)) for r in _standard(10)] + [
        _row(10, 12, "(3,2) subgraph of K_{4,6}", lambda: k4n_et_subgraph(6)),
        _row(10, 15, "Petersen", petersen),
        _kmm_pm(5),
        _wreath(5, 2),
        _row(10, 30, "complement of Petersen", lambda: complement(petersen())),
        _km_pm(10),
    ]


def _rows_12() -> list[AppendixRow]:
    return _standard(12) + [
        _row(12, 16, "(4,2) subgraph of K_{4,8}", lambda: ring_construction(4, 4)),
        _row(12, 18, "(6,2) subgraph of K_{3,9}", lambda: nontrivial_et_subgraph(3, 9)),
        _row(12, 24, "(3,6) subgraph of K_{8,4}", lambda: nontrivial_et_subgraph(4, 8),
             note="built with the degree-6 side first"),
        _wreath(6, 2),
        _fx(12, 24, "Cuboctahedral", "Cuboctahedral"),
        _kmm_pm(6),
        _fx(12, 30, "Icosahedral", "Icosahedral"),
        _cbar(3, 4),
        _multi(4, 3),
        _multi(3, 4),
        _km_pm(12),
    ]


def _rows_13() -> list[AppendixRow]:
    return _standard(13) + [
        _row(13, 26, "C_13(1,5)", lambda: circulant(13, [1, 5])),
        _row(13, 39, "Paley(13)", lambda: paley(13)),
    ]


def _rows_14() -> list[AppendixRow]:
    return _standard(14) + [
        _fx(14, 21, "Heawood", "Heawood"),
        _fx(14, 24, "(4,3) subgraph of K_{6,8} (first)", "bireg-14-4-3-a"),
        _fx(14, 24, "(4,3) subgraph of K_{6,8} (second)", "bireg-14-4-3-b"),
        _wreath(7, 2),
        _fx(14, 28, "(4,4) subgraph of K_{7,7}", "bireg-14-4-4"),
        _kmm_pm(7),
        _km_pm(14),
    ]


def _rows_15() -> list[AppendixRow]:
    return _standard(15) + [
        _row(15, 18, "(3,2) subgraph of K_{6,9}", _subdivided(6, _k33_edges())),
        _row(15, 20, "(4,2) subgraph of K_{5,10} (subdivided K_5)", _subdivided(5, _pairs(5))),
        _row(15, 20, "(4,2) subgraph of K_{5,10} (ring)", lambda: ring_construction(5, 4)),
        _row(15, 24, "(8,2) subgraph of K_{3,12}", lambda: nontrivial_et_subgraph(3, 12)),
        _fx(15, 30, "(6,3) subgraph of K_{5,10}", "bireg-15-6-3"),
        _row(15, 30, "L(Petersen)", lambda: line_graph(petersen())),
        _row(15, 30, "C_15(1,4)", lambda: circulant(15, [1, 4])),
        _fx(15, 36, "(6,4) subgraph of K_{6,9} (first)", "bireg-15-6-4-a"),
        _fx(15, 36, "(6,4) subgraph of K_{6,9} (second)", "bireg-15-6-4-b"),
        _row(15, 40, "(8,4) subgraph of K_{5,10}", lambda: nontrivial_et_subgraph(5, 10)),
        _row(15, 45, "(6,2) Kneser graph", lambda: kneser(6, 2)),
        _fx(15, 45, "Trpl(C_5)", "Trpl(C_5)"),
        _cbar(3, 5),
        _row(15, 60, "(6,2) Johnson graph", lambda: johnson(6, 2)),
        _multi(5, 3),
        _multi(3, 5),
    ]


def _rows_16() -> list[AppendixRow]:
    return _standard(16) + [
        _fx(16, 24, "Mobius-Kantor", "Mobius-Kantor"),
        _row(16, 24, "(6,2) subgraph of K_{4,12} (ring)", lambda: ring_construction(4, 6)),
        _row(16, 24, "(6,2) subgraph of K_{4,12} (subdivided K_4, edges doubled)", _subdivided(4, list(_pairs(4)) * 2)),
        _fx(16, 30, "(5,3) subgraph of K_{6,10}", "bireg-16-5-3"),
        _row(16, 32, "Q_4", lambda: hypercube(4)),
        _wreath(8, 2),
        _row(16, 36, "(9,3) subgraph of K_{4,12}", lambda: nontrivial_et_subgraph(4, 12)),
        _fx(16, 40, "Clebsch", "Clebsch"),
        _fx(16, 48, "Shrikhande", "Shrikhande"),
        _row(16, 48, "K_4 x K_4", lambda: cartesian_product(complete(4), complete(4))),
        _fx(16, 48, "Haar(187)", "Haar(187)"),
        _kmm_pm(8),
        _cbar(4, 4),
        _row(16, 80, "complement of Clebsch", lambda: complement(load_fixture("Clebsch"))),
        _multi(4, 4),
        _km_pm(16),
    ]


def _rows_17() -> list[AppendixRow]:
    return _standard(17) + [
        _row(17, 34, "C_17(1,4)", lambda: circulant(17, [1, 4])),
        _row(17, 68, "Paley(17)", lambda: paley(17)),
    ]


def _rows_18() -> list[AppendixRow]:
    return _standard(18) + [
        _row(18, 24, "(4,2) subgraph of K_{6,12} (ring)", lambda: ring_construction(6, 4)),
        _row(18, 24, "(4,2) subgraph of K_{6,12} (subdivided octahedron)", _subdivided(6, _octahedron_edges())),
        _fx(18, 27, "Pappus", "Pappus"),
        _row(18, 30, "(10,2) subgraph of K_{3,15}", lambda: nontrivial_et_subgraph(3, 15)),
        _row(18, 36, "(6,3) subgraph of K_{6,12}",
             lambda: extend(swap_sides(k4n_et_subgraph(6)), 3, 1)),
        _fx(18, 36, "(4,4) subgraph of K_{9,9}", "bireg-18-4-4"),
        _wreath(9, 2),
        _row(18, 48, "(8,4) subgraph of K_{6,12}", lambda: extend(complete_bipartite_minus_pm(3), 4, 2)),
        _fx(18, 54, "(6,6) subgraph of K_{9,9} (first)", "bireg-18-6-6-a"),
        _fx(18, 54, "(6,6) subgraph of K_{9,9} (second)", "bireg-18-6-6-b"),
        _row(18, 60, "(10,5) subgraph of K_{6,12}", lambda: nontrivial_et_subgraph(6, 12)),
        _kmm_pm(9),
        _fx(18, 72, "H_1", "H_1"),
        _cbar(6, 3),
        _multi(6, 3),
        _multi(3, 6),
        _km_pm(18),
    ]


def _rows_19() -> list[AppendixRow]:
    return _standard(19) + [_row(19, 57, "C_19(1,7,8)", lambda: circulant(19, [1, 7, 8]))]


def _k43_deg3_first(name: str) -> Callable[[], Graph]:
    def build() -> Graph:
        g = load_fixture(name)
        return g if g.degree(0) == 3 else swap_sides(g)

    return build


def _rows_20() -> list[AppendixRow]:
    return _standard(20) + [
        _fx(20, 24, "(3,2) subgraph of K_{8,12} (1-Menger sponge)", "1-Menger-sponge"),
        _row(20, 30, "(6,2) subgraph of K_{5,15}", lambda: ring_construction(5, 6)),
        _fx(20, 30, "Desargues", "Desargues"),
        _fx(20, 30, "Dodecahedral", "Dodecahedral"),
        _row(20, 32, "(8,2) subgraph of K_{4,16}", lambda: ring_construction(4, 8)),
        _fx(20, 40, "Folkman", "Folkman"),
        _wreath(10, 2),
        _fx(20, 40, "Haar(525)", "Haar(525)"),
        _fx(20, 40, "NoncayleyTransitive(20,4)", "NoncayleyTransitive(20,4)"),
        _row(20, 48, "(6,4) subgraph of K_{8,12} (subdivided K_4 blown up)",
             lambda: extend(k4n_et_subgraph(6), 2, 2)),
        _row(20, 48, "(6,4) subgraph of K_{8,12} (ring blown up)",
             lambda: extend(ring_construction(4, 6), 1, 2)),
        _row(20, 48, "(6,4) subgraph of K_{8,12} ((4,3) graph blown up)",
             lambda: extend(_k43_deg3_first("bireg-14-4-3-a")(), 2, 1)),
        _fx(20, 48, "(6,4) subgraph of K_{8,12} (affine planes)", "bireg-20-6-4"),
        _row(20, 48, "(12,3) subgraph of K_{4,16}", lambda: nontrivial_et_subgraph(4, 16)),
        _row(20, 60, "(12,4) subgraph of K_{5,15}", lambda: nontrivial_et_subgraph(5, 15)),
        _fx(20, 60, "NoncayleyTransitive(20,12)", "NoncayleyTransitive(20,12)"),
        _fx(20, 60, "(6,6) subgraph of K_{10,10}", "bireg-20-6-6"),
        _row(20, 60, "C_20(1,6,9)", lambda: circulant(20, [1, 6, 9])),
        _fx(20, 60, "G_1", "G_1"),
        _fx(20, 60, "G_2", "G_2"),
        _fx(20, 60, "(5,2)-arrangement", "(5,2)-arrangement"),
        _row(20, 72, "(9,6) subgraph of K_{8,12}", lambda: nontrivial_et_subgraph(8, 12)),
        _row(20, 80, "(8,8) subgraph of K_{10,10}", lambda: extend(complete_bipartite_minus_pm(5), 2, 2)),
        _wreath(5, 4),
        _kmm_pm(10),
        _fx(20, 90, "6-tetrahedral (Johnson)", "6-tetrahedral-Johnson"),
        _cbar(5, 4),
        _fx(20, 120, "G_3", "G_3"),
        _multi(5, 4),
        _multi(4, 5),
        _km_pm(20),
    ]


_TABLES: dict[int, Callable[[], list[AppendixRow]]] = {
    6: _rows_6,
    7: lambda: _standard(7),
    8: _rows_8,
    9: _rows_9,
    10: _rows_10,
    11: lambda: _standard(11),
    12: _rows_12,
    13: _rows_13,
    14: _rows_14,
    15: _rows_15,
    16: _rows_16,
    17: _rows_17,
    18: _rows_18,
    19: _rows_19,
    20: _rows_20,
}

# stated totals; for n <= 11 the length of the printed list
EXPECTED_COUNTS = {6: 6, 7: 5, 8: 8, 9: 9, 10: 13, 11: 7, 12: 19, 13: 10, 14: 16,
                   15: 25, 16: 26, 17: 12, 18: 28, 19: 12, 20: 43}


def rows_for(n: int) -> list[AppendixRow]:
    if n not in _TABLES:
        raise GraphError(f"the tables cover n = {FIRST_N}..{LAST_N}, not {n}")
    return sorted(_TABLES[n](), key=lambda r: (r.e, r.label))


@dataclass(frozen=True)
class RowCheck:
    row: AppendixRow
    canonical: Graph | None
    problems: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.problems


@dataclass(frozen=True)
class AppendixReport:
    n: int
    expected: int
    checks: tuple[RowCheck, ...]
    duplicates: tuple[tuple[str, str], ...]

    @property
    def distinct(self) -> int:
        return len({c.canonical for c in self.checks if c.canonical is not None})

    @property
    def failures(self) -> list[RowCheck]:
        return [c for c in self.checks if not c.ok]

    @property
    def ok(self) -> bool:
        return not self.failures and not self.duplicates and self.distinct == self.expected


def check_row(row: AppendixRow) -> RowCheck:
    try:
        g = row.build()
    except GraphError as exc:
        return RowCheck(row, None, (f"build failed: {exc}",))
    problems = []
    if g.n != row.n:
        problems.append(f"has {g.n} vertices, expected {row.n}")
    if g.m != row.e:
        problems.append(f"has {g.m} edges, expected {row.e}")
    if not is_connected(g):
        problems.append("disconnected")
    elif not is_edge_transitive(g):
        problems.append("not edge-transitive")
    return RowCheck(row, search(g).canonical, tuple(problems))


def verify_appendix(n: int) -> AppendixReport:
    checks = tuple(check_row(r) for r in rows_for(n))
    first: dict[Graph, str] = {}
    dups = []
    for c in checks:
        if c.canonical is None:
            continue
        if c.canonical in first:
            dups.append((first[c.canonical], c.row.label))
        else:
            first[c.canonical] = c.row.label
    return AppendixReport(n, EXPECTED_COUNTS[n], checks, tuple(dups))

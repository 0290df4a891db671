"""Census of connected edge-transitive graphs on few vertices.

Connected graphs are generated by canonical augmentation: a graph on ``k+1``
vertices is produced from a connected parent on ``k`` vertices by adding a
vertex joined to a nonempty set ``S``, one ``S`` per ``Aut(parent)`` orbit.
The child is kept only when the new vertex lies in the orbit singled out by
an isomorphism-invariant deletion rule, so every class is visited once.

The deletion rule, in order: non-cut vertices; of those, minimum degree;
of those, the last cell of the equitable refinement of the unit partition;
if several vertices remain, the one with the largest canonical position.
"""

from __future__ import annotations

import concurrent.futures as cf
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

import numpy as np

from .graph import Graph, GraphError, bipartition, is_biregular, iter_bits, to_graph6
from .symmetry import _refine, _State, is_edge_transitive, is_vertex_transitive, search

MAX_FAST_N = 9
MAX_N = 10

Visitor = Callable[[Graph], None]


def _connected_without(rows: tuple[int, ...], n: int, v: int) -> bool:
    full = ((1 << n) - 1) & ~(1 << v)
    if not full:
        return True
    start = full & -full
    comp = frontier = start
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= rows[u]
        frontier = nxt & full & ~comp
        comp |= frontier
    return comp == full


def _cut_mask(rows: tuple[int, ...], n: int) -> int:
    cut = 0
    for v in range(n):
        if not _connected_without(rows, n, v):
            cut |= 1 << v
    return cut


def _refined_cells(rows: tuple[int, ...], n: int) -> tuple[list[int], int]:
    """Cell start of every vertex after refining the unit partition, and cell count."""
    st = _State(list(range(n)), [0] * n, [n] + [0] * (n - 1), 1)
    _refine(rows, st, [0], [])
    return st.cell_of, st.ncells


class _Augmenter:
    def __init__(self, n: int, final_filter: Callable[[tuple[int, ...], int], bool] | None):
        self.n = n
        self.final_filter = final_filter
        self._masks: dict[int, np.ndarray] = {}
        self._bits: dict[int, np.ndarray] = {}

    def masks(self, k: int) -> tuple[np.ndarray, np.ndarray]:
        if k not in self._masks:
            m = np.arange(1, 1 << k, dtype=np.int64)
            bits = ((m[None, :] >> np.arange(k, dtype=np.int64)[:, None]) & 1).astype(np.int16)
            self._masks[k] = m
            self._bits[k] = bits
        return self._masks[k], self._bits[k]

    def subset_reps(self, rows: tuple[int, ...], k: int, gens) -> list[int]:
        """Nonempty masks passing the degree prefilter, one per Aut-orbit."""
        masks, bits = self.masks(k)
        degs = np.array([r.bit_count() for r in rows], dtype=np.int16)
        cut = _cut_mask(rows, k)
        size = bits.sum(axis=0)
        keep = np.ones(len(masks), dtype=bool)
        noncut = [v for v in range(k) if not cut >> v & 1]
        if noncut:
            child_deg = degs[noncut, None] + bits[noncut, :]
            keep = size <= child_deg.min(axis=0)
        if gens:
            label = np.arange(1 << k, dtype=np.int64)
            images = []
            for g in gens:
                img = np.zeros(1 << k, dtype=np.int64)
                allm = np.arange(1 << k, dtype=np.int64)
                for i in range(k):
                    img |= ((allm >> i) & 1) << g[i]
                images.append(img)
            while True:
                old = label
                for img in images:
                    label = np.minimum(label, label[img])
                    inv = np.empty_like(img)
                    inv[img] = np.arange(1 << k, dtype=np.int64)
                    label = np.minimum(label, label[inv])
                if np.array_equal(old, label):
                    break
            keep &= label[1:] == masks
        return [int(x) for x in masks[keep]]

    def accept(self, rows: tuple[int, ...], k1: int, parent_cut: int, s: int):
        """Canonical-parent test for a child on ``k1`` vertices, new vertex ``k1-1``.

        Returns ``(accepted, search_result_or_None)``.
        """
        x = k1 - 1
        suspects = parent_cut | (s if s & (s - 1) == 0 else 0)
        cut = 0
        for v in iter_bits(suspects):
            if not _connected_without(rows, k1, v):
                cut |= 1 << v
        degs = [r.bit_count() for r in rows]
        dx = degs[x]
        noncut = [v for v in range(k1) if not cut >> v & 1]
        dmin = min(degs[v] for v in noncut)
        if dx != dmin:
            return False, None
        cands = [v for v in noncut if degs[v] == dmin]
        if len(cands) == 1:
            return True, None
        cell_of, ncells = _refined_cells(rows, k1)
        top = max(cell_of[v] for v in cands)
        if cell_of[x] != top:
            return False, None
        cands = [v for v in cands if cell_of[v] == top]
        if len(cands) == 1:
            return True, None
        res = search(Graph._trusted(k1, rows))
        pos = res.position
        chosen = max(cands, key=lambda v: pos[v])
        if chosen == x:
            return True, res
        for orb in res.group().orbits:
            if chosen in orb:
                return x in orb, res
        raise AssertionError("vertex missing from orbit partition")

    def children(self, rows: tuple[int, ...], k: int, gens) -> Iterator[tuple[tuple[int, ...], object]]:
        parent_cut = _cut_mask(rows, k)
        final = k + 1 == self.n
        newbit = 1 << k
        for s in self.subset_reps(rows, k, gens):
            child = tuple(r | newbit if s >> v & 1 else r for v, r in enumerate(rows)) + (s,)
            if final and self.final_filter is not None and not self.final_filter(child, k + 1):
                continue
            ok, res = self.accept(child, k + 1, parent_cut, s)
            if ok:
                yield child, res

    def walk(self, rows: tuple[int, ...], k: int, res, visit: Callable[[tuple[int, ...]], None]) -> None:
        if k == self.n:
            visit(rows)
            return
        if res is None:
            res = search(Graph._trusted(k, rows))
        for child, cres in self.children(rows, k, res.generators):
            self.walk(child, k + 1, cres, visit)


def _check_n(n: int, slow: bool) -> None:
    if n < 1:
        raise GraphError("n must be positive")
    if n > MAX_N:
        raise GraphError(f"enumeration is limited to n <= {MAX_N}; larger orders use verify_appendix")
    if n > MAX_FAST_N and not slow:
        raise GraphError(f"n = {n} takes tens of minutes; pass slow=True (--slow) to run it")


def enumerate_connected(
    n: int,
    visitor: Visitor | None = None,
    slow: bool = False,
    final_filter: Callable[[tuple[int, ...], int], bool] | None = None,
) -> int:
    """Visit each connected graph on ``n`` vertices once up to isomorphism.

    ``final_filter(rows, n)`` may reject last-level children before the
    canonical-parent test; rejected graphs are neither visited nor counted.
    Returns the number of graphs visited.
    """
    _check_n(n, slow)
    count = 0

    def visit(rows: tuple[int, ...]) -> None:
        nonlocal count
        count += 1
        if visitor is not None:
            visitor(Graph._trusted(n, rows))

    _Augmenter(n, final_filter).walk((0,), 1, None, visit)
    return count


def et_degree_filter(rows: tuple[int, ...], n: int) -> bool:
    """Necessary condition for a connected edge-transitive graph.

    Such a graph is regular, or bipartite with each side of constant degree.
    """
    degs = {r.bit_count() for r in rows}
    if len(degs) == 1:
        return True
    if len(degs) != 2:
        return False
    # two degree classes: they must be the two colour classes
    d0 = rows[0].bit_count()
    side = 0
    for v, r in enumerate(rows):
        if r.bit_count() == d0:
            side |= 1 << v
    return all((r & side) == 0 if side >> v & 1 else (r & ~side) == 0 for v, r in enumerate(rows))


# census -----------------------------------------------------------------------


@dataclass(frozen=True)
class CensusEntry:
    graph6: str
    m: int
    vertex_transitive: bool
    bipartite: bool
    biregular: tuple[int, int] | None
    family: str | None


@dataclass
class CensusReport:
    n: int
    inspected: int
    entries: list[CensusEntry] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.entries)


def _entry(g: Graph) -> CensusEntry:
    res = search(g)
    group = res.group()
    bip = bipartition(g) is not None
    return CensusEntry(
        graph6=to_graph6(res.canonical),
        m=g.m,
        vertex_transitive=is_vertex_transitive(g, group),
        bipartite=bip,
        biregular=is_biregular(g) if bip else None,
        family=identify_family(res.canonical),
    )


def _et_worker(args: tuple[int, list[tuple[int, ...]], int]) -> tuple[int, list[str]]:
    n, parents, k = args
    aug = _Augmenter(n, et_degree_filter)
    found: list[str] = []
    count = 0

    def visit(rows: tuple[int, ...]) -> None:
        nonlocal count
        count += 1
        g = Graph._trusted(n, rows)
        if is_edge_transitive(g):
            found.append(to_graph6(search(g).canonical))

    for rows in parents:
        aug.walk(rows, k, None, visit)
    return count, found


def _split_level(n: int) -> int:
    return max(1, min(n - 2, 7))


def census_edge_transitive(n: int, slow: bool = False, threads: int = 1) -> CensusReport:
    """Connected edge-transitive graphs on ``n`` vertices by full enumeration.

    Candidates must pass :func:`et_degree_filter` first, so ``inspected``
    counts the regular or side-regular bipartite connected graphs examined.
    The result is identical for every ``threads`` value.
    """
    _check_n(n, slow)
    if n == 1:
        return CensusReport(1, 1, [_entry(Graph(1, (0,)))])
    k = _split_level(n)
    parents: list[tuple[int, ...]] = []
    if k == 1:
        parents = [(0,)]
    else:
        _Augmenter(k, None).walk((0,), 1, None, parents.append)
    chunks = [parents[i::max(1, threads)] for i in range(max(1, threads))]
    jobs = [(n, chunk, k) for chunk in chunks if chunk]
    if threads > 1 and len(jobs) > 1:
        with cf.ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_et_worker, jobs))
    else:
        results = [_et_worker(job) for job in jobs]
    inspected = sum(c for c, _ in results)
    codes = sorted({code for _, found in results for code in found})
    from .graph import from_graph6

    entries = [_entry(from_graph6(code)) for code in codes]
    return CensusReport(n, inspected, entries)


# family identification ----------------------------------------------------------


def _family_catalog(n: int) -> dict[Graph, str]:
    from . import appendix

    out: dict[Graph, str] = {}
    if not appendix.FIRST_N <= n <= appendix.LAST_N:
        return out
    for row in appendix.rows_for(n):
        try:
            g = row.build()
        except GraphError:
            continue
        out.setdefault(search(g).canonical, row.label)
    return out


_CATALOG_CACHE: dict[int, dict[Graph, str]] = {}


def identify_family(canonical: Graph) -> str | None:
    """Best-effort name from the appendix catalogue; never affects counts."""
    n = canonical.n
    if n not in _CATALOG_CACHE:
        _CATALOG_CACHE[n] = _family_catalog(n)
    return _CATALOG_CACHE[n].get(canonical)


# known counts ---------------------------------------------------------------------

_APPENDIX_COUNTS = (6, 5, 8, 9, 13, 7, 19, 10, 16, 25, 26, 12, 28, 12, 43)


def oeis_counts() -> dict[int, int]:
    """Connected edge-transitive graph counts for n = 6..20, as tabulated."""
    return {n: c for n, c in zip(range(6, 21), _APPENDIX_COUNTS)}


def iter_census_graphs(report: CensusReport) -> Iterable[Graph]:
    from .graph import from_graph6

    for e in report.entries:
        yield from_graph6(e.graph6)

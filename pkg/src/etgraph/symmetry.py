"""Automorphisms, canonical forms and transitivity tests.

The engine is a compact individualization-refinement search in the style of
nauty. Partitions are kept as a vertex array ``lab`` split into cells; a cell
is named by the index of its first position, which never changes once the
cell exists. Equitable refinement counts neighbours with ``&`` and
``bit_count`` on adjacency rows.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError, iter_bits
from .permgroup import Permutation, PermutationGroup, UnionFind, orbits_of

BRUTE_FORCE_MAX_N = 8


@dataclass(frozen=True)
class OrderedPartition:
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for cell in self.cells:
            if not cell:
                raise GraphError("partition has an empty cell")
            for v in cell:
                if v in seen:
                    raise GraphError(f"vertex {v} appears in two cells")
                seen.add(v)
        if seen != set(range(len(seen))):
            raise GraphError("partition cells must cover 0..n-1")

    @classmethod
    def unit(cls, n: int) -> OrderedPartition:
        return cls((tuple(range(n)),))

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.cells)

    def cell_index(self) -> list[int]:
        index = [0] * self.n
        for i, cell in enumerate(self.cells):
            for v in cell:
                index[v] = i
        return index

    def is_discrete(self) -> bool:
        return len(self.cells) == self.n


# refinement ----------------------------------------------------------------


class _State:
    """Mutable partition used inside one search."""

    __slots__ = ("lab", "cell_of", "cell_end", "ncells")

    def __init__(self, lab, cell_of, cell_end, ncells):
        self.lab = lab
        self.cell_of = cell_of
        self.cell_end = cell_end
        self.ncells = ncells

    @classmethod
    def from_cells(cls, n: int, cells: Sequence[Sequence[int]]) -> _State:
        lab: list[int] = []
        cell_of = [0] * n
        cell_end = [0] * n
        for cell in cells:
            start = len(lab)
            lab.extend(cell)
            for v in cell:
                cell_of[v] = start
            cell_end[start] = len(lab)
        return cls(lab, cell_of, cell_end, len(cells))

    def copy(self) -> _State:
        return _State(self.lab[:], self.cell_of[:], self.cell_end[:], self.ncells)

    def starts(self) -> list[int]:
        out = []
        s = 0
        n = len(self.lab)
        while s < n:
            out.append(s)
            s = self.cell_end[s]
        return out

    def cells(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.lab[s:self.cell_end[s]]) for s in self.starts())


def _refine(rows: Sequence[int], st: _State, active: list[int], trace: list) -> None:
    """Refine ``st`` to the coarsest equitable partition below it.

    ``active`` lists the starts of cells to use as splitters. Each split
    appends a label-invariant record to ``trace``.
    """
    n = len(st.lab)
    lab, cell_of, cell_end = st.lab, st.cell_of, st.cell_end
    queue = deque(active)
    queued = bytearray(n)
    for s in active:
        queued[s] = 1
    while queue and st.ncells < n:
        w = queue.popleft()
        queued[w] = 0
        mask = 0
        hit = 0
        for i in range(w, cell_end[w]):
            v = lab[i]
            mask |= 1 << v
            hit |= rows[v]
        touched = sorted({cell_of[v] for v in iter_bits(hit)})
        for s in touched:
            e = cell_end[s]
            if e - s == 1:
                continue
            seg = lab[s:e]
            counts = [(rows[v] & mask).bit_count() for v in seg]
            c0 = counts[0]
            if all(c == c0 for c in counts):
                continue
            groups: dict[int, list[int]] = {}
            for v, c in zip(seg, counts):
                groups.setdefault(c, []).append(v)
            keys = sorted(groups)
            pos = s
            frags = []
            for k in keys:
                g = groups[k]
                lab[pos:pos + len(g)] = g
                for v in g:
                    cell_of[v] = pos
                cell_end[pos] = pos + len(g)
                frags.append(pos)
                pos += len(g)
            st.ncells += len(keys) - 1
            trace.append((s, tuple((k, len(groups[k])) for k in keys)))
            if queued[s]:
                add = frags[1:]
            else:
                big = max(frags, key=lambda f: cell_end[f] - f)
                add = [f for f in frags if f != big]
            for f in add:
                queued[f] = 1
                queue.append(f)


def equitable_refinement(g: Graph, partition: OrderedPartition | None = None) -> OrderedPartition:
    """Coarsest equitable refinement; split fragments ordered by count ascending."""
    partition = partition or OrderedPartition.unit(g.n)
    if partition.n != g.n:
        raise GraphError("partition and graph disagree on vertex count")
    st = _State.from_cells(g.n, partition.cells)
    _refine(g.rows, st, st.starts(), [])
    return OrderedPartition(st.cells())


# canonical search -------------------------------------------------------------


@dataclass(frozen=True)
class SearchResult:
    labeling: tuple[int, ...]  # labeling[i] = vertex placed at canonical position i
    canonical: Graph
    generators: tuple[Permutation, ...]
    order: int

    @property
    def position(self) -> tuple[int, ...]:
        """``position[v]`` = canonical position of vertex ``v``."""
        pos = [0] * len(self.labeling)
        for i, v in enumerate(self.labeling):
            pos[v] = i
        return tuple(pos)

    def group(self) -> PermutationGroup:
        return PermutationGroup(len(self.labeling), self.generators, known_order=self.order)


class _Search:
    def __init__(self, g: Graph, cells: Sequence[Sequence[int]] | None = None):
        self.g = g
        self.n = g.n
        self.rows = g.rows
        self.cells = cells if cells is not None else (tuple(range(g.n)),)
        self.gens: list[Permutation] = []
        self.first_path: list[int] | None = None
        self.first_traces: list[tuple] = []
        self.first_lab: list[int] = []
        self.first_cert: tuple[int, ...] = ()
        self.best_path: list[int] = []
        self.best_traces: list[tuple] = []
        self.best_lab: list[int] = []
        self.best_cert: tuple[int, ...] = ()
        self.best_version = 0

    def run(self) -> SearchResult:
        st = _State.from_cells(self.n, self.cells)
        trace: list = []
        _refine(self.rows, st, st.starts(), trace)
        self._node(st, [], [tuple(trace)], True, 0)
        labeling = tuple(self.best_lab)
        canonical = Graph._trusted(self.n, self.best_cert)
        return SearchResult(labeling, canonical, tuple(self.gens), self._order())

    def _cert(self, lab: list[int]) -> tuple[int, ...]:
        pos = [0] * self.n
        for i, v in enumerate(lab):
            pos[v] = i
        rows = self.rows
        out = []
        for v in lab:
            r = 0
            for u in iter_bits(rows[v]):
                r |= 1 << pos[u]
            out.append(r)
        return tuple(out)

    def _leaf(self, st: _State, path: list[int], traces: list[tuple], eq_first: bool, cmp_best: int) -> int:
        depth = len(path)
        lab = st.lab
        cert = self._cert(lab)
        if self.first_path is None:
            self.first_path = path[:]
            self.first_traces = traces[:]
            self.first_lab = lab[:]
            self.first_cert = cert
            self._set_best(path, traces, lab, cert)
            return depth
        if eq_first and cert == self.first_cert:
            gamma = [0] * self.n
            for a, b in zip(self.first_lab, lab):
                gamma[a] = b
            self.gens.append(tuple(gamma))
            return _common_prefix(path, self.first_path)
        if cmp_best == 0:
            if cert == self.best_cert:
                gamma = [0] * self.n
                for a, b in zip(self.best_lab, lab):
                    gamma[a] = b
                self.gens.append(tuple(gamma))
                return _common_prefix(path, self.best_path)
            if cert > self.best_cert:
                self._set_best(path, traces, lab, cert)
        elif cmp_best > 0:
            self._set_best(path, traces, lab, cert)
        return depth

    def _set_best(self, path, traces, lab, cert) -> None:
        self.best_path = path[:]
        self.best_traces = traces[:]
        self.best_lab = lab[:]
        self.best_cert = cert
        self.best_version += 1

    def _node(self, st: _State, path: list[int], traces: list[tuple], eq_first: bool, cmp_best: int) -> int:
        depth = len(path)
        n = self.n
        if st.ncells == n:
            return self._leaf(st, path, traces, eq_first, cmp_best)
        # target cell: first non-singleton cell of minimum size
        target = -1
        size = n + 1
        s = 0
        cell_end = st.cell_end
        while s < n:
            e = cell_end[s]
            if 1 < e - s < size:
                target, size = s, e - s
                if size == 2:
                    break
            s = e
        candidates = st.lab[target:target + size]
        explored: list[int] = []
        ngens_seen = -1
        uf: UnionFind | None = None
        for w in candidates:
            if explored:
                if len(self.gens) != ngens_seen:
                    ngens_seen = len(self.gens)
                    uf = UnionFind(n)
                    for gamma in self.gens:
                        if all(gamma[p] == p for p in path):
                            for x in range(n):
                                uf.union(x, gamma[x])
                if uf is not None:
                    rw = uf.find(w)
                    if any(uf.find(x) == rw for x in explored):
                        continue
            explored.append(w)
            child = st.copy()
            # individualize w at the front of the target cell
            lab = child.lab
            i = lab.index(w, target, target + size)
            lab[i], lab[target] = lab[target], w
            child.cell_end[target] = target + 1
            child.cell_end[target + 1] = target + size
            for j in range(target + 1, target + size):
                child.cell_of[lab[j]] = target + 1
            child.ncells += 1
            trace: list = []
            _refine(self.rows, child, [target], trace)
            t = (target, tuple(trace))
            path.append(w)
            traces.append(t)
            if self.first_path is None:
                # still descending the first path, which is also the best so far
                child_eq, child_cmp = True, 0
            else:
                child_eq = eq_first and depth + 1 < len(self.first_traces) and self.first_traces[depth + 1] == t
                child_cmp = cmp_best
                if cmp_best == 0:
                    if depth + 1 < len(self.best_traces):
                        other = self.best_traces[depth + 1]
                        child_cmp = (t > other) - (t < other)
                    else:
                        child_cmp = 1
            version = self.best_version
            back = depth
            if child_eq or child_cmp >= 0:
                back = self._node(child, path, traces, child_eq, child_cmp)
            path.pop()
            traces.pop()
            if self.best_version != version:
                cmp_best = 0
            if back < depth:
                return back
        return depth

    def _order(self) -> int:
        # product over the first path of orbit sizes of the stabiliser chain
        order = 1
        path = self.first_path or []
        for k, v in enumerate(path):
            fixed = path[:k]
            gens = [g for g in self.gens if all(g[p] == p for p in fixed)]
            orb = orbits_of(self.n, gens)
            order *= next(len(o) for o in orb if v in o)
        return order


def _common_prefix(a: Sequence[int], b: Sequence[int]) -> int:
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k


def search(g: Graph, partition: OrderedPartition | None = None) -> SearchResult:
    """Run the canonical search once; labeling, canonical graph and generators.

    With a ``partition`` the search respects the colouring: only
    colour-preserving automorphisms are found and the canonical form is
    canonical for coloured graphs with that ordered colour sequence.
    """
    cells = partition.cells if partition is not None else None
    return _Search(g, cells).run()


def canonical_form(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Canonical graph and the relabeling ``perm`` with ``g.relabel(perm)`` equal to it."""
    res = search(g)
    return res.canonical, res.position


def canonical_graph6(g: Graph) -> str:
    from .graph import to_graph6

    return to_graph6(search(g).canonical)


def is_isomorphic(g: Graph, h: Graph) -> tuple[bool, tuple[int, ...] | None]:
    """``(True, w)`` with ``h.has_edge(w[u], w[v]) == g.has_edge(u, v)``, else ``(False, None)``."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False, None
    rg, rh = search(g), search(h)
    if rg.canonical != rh.canonical:
        return False, None
    w = [0] * g.n
    for a, b in zip(rg.labeling, rh.labeling):
        w[a] = b
    return True, tuple(w)


def automorphism_group(g: Graph) -> PermutationGroup:
    return search(g).group()


def vertex_orbits(g: Graph, group: PermutationGroup | None = None) -> list[list[int]]:
    group = group or automorphism_group(g)
    return [list(o) for o in group.orbits]


def edge_orbits(g: Graph, group: PermutationGroup | None = None) -> list[list[tuple[int, int]]]:
    """Orbits of the unordered edge set, each sorted, ordered by first edge."""
    group = group or automorphism_group(g)
    edges = g.edges()
    index = {e: i for i, e in enumerate(edges)}
    uf = UnionFind(len(edges))
    for gamma in group.generators:
        for i, (u, v) in enumerate(edges):
            a, b = gamma[u], gamma[v]
            uf.union(i, index[(a, b) if a < b else (b, a)])
    return [[edges[i] for i in cls] for cls in uf.classes()]


def is_vertex_transitive(g: Graph, group: PermutationGroup | None = None) -> bool:
    return len(vertex_orbits(g, group)) == 1


def is_edge_transitive(g: Graph, group: PermutationGroup | None = None) -> bool:
    """True when Aut(g) has at most one edge orbit (edgeless graphs qualify)."""
    if g.m == 0:
        return True
    return len(edge_orbits(g, group)) == 1


def andersen_edge_transitive(g: Graph) -> bool:
    """Edge-transitivity decided by comparing all one-edge-deleted subgraphs."""
    edges = g.edges()
    if not edges:
        raise GraphError("criterion needs at least one edge")
    ref = search(g.without_edge(*edges[0])).canonical
    return all(search(g.without_edge(u, v)).canonical == ref for u, v in edges[1:])


def brute_force_automorphisms(g: Graph) -> PermutationGroup:
    """All automorphisms by trying every permutation; ``n <= 8`` only."""
    n = g.n
    if n > BRUTE_FORCE_MAX_N:
        raise GraphError(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}, got {n}")
    edges = g.edges()
    found = []
    for p in itertools.permutations(range(n)):
        if all(g.has_edge(p[u], p[v]) for u, v in edges):
            found.append(p)
    return PermutationGroup(n, found, known_order=len(found))


def search_order_consistent(g: Graph) -> bool:
    """Search-derived order agrees with Schreier-Sims on its generators."""
    res = search(g)
    return res.order == PermutationGroup(g.n, res.generators).order


__all__ = [
    "OrderedPartition",
    "SearchResult",
    "andersen_edge_transitive",
    "automorphism_group",
    "brute_force_automorphisms",
    "canonical_form",
    "canonical_graph6",
    "edge_orbits",
    "equitable_refinement",
    "is_edge_transitive",
    "is_isomorphic",
    "is_vertex_transitive",
    "search",
    "vertex_orbits",
]

"""Biregular bipartite subgraphs of ``K_{m,n}``.

Convention: the degree-``r`` side has ``m`` vertices and is listed first,
so every constructor here returns left vertices ``0..m-1`` and right
vertices ``m..m+n-1``.

An ``(r, 2)`` biregular graph is the subdivision of an ``r``-regular
multigraph on its left side: each right vertex joins two left vertices.
The partition descriptor of a left vertex counts, for every other left
vertex, how many right vertices the two share.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .families import complete_bipartite_minus_pm
from .graph import (
    Graph,
    GraphError,
    NotBipartiteError,
    bipartition,
    from_edges,
    is_connected,
    iter_bits,
    line_graph,
    to_graph6,
)
from .symmetry import OrderedPartition, equitable_refinement, is_edge_transitive, search

Descriptor = tuple[int, ...]


@dataclass(frozen=True)
class BiregularDims:
    m: int
    n: int
    r: int
    s: int

    def __post_init__(self):
        if self.m * self.r != self.n * self.s:
            raise GraphError(f"m*r must equal n*s, got {self.m}*{self.r} != {self.n}*{self.s}")
        if not (1 <= self.r <= self.n and 1 <= self.s <= self.m):
            raise GraphError("degrees must satisfy 1 <= r <= n and 1 <= s <= m")


def admissible_pairs(m: int, n: int) -> list[tuple[int, int]]:
    """Every ``(r, s)`` a biregular subgraph of ``K_{m,n}`` can have."""
    if m < 1 or n < 1:
        raise GraphError("side sizes must be positive")
    g = math.gcd(m, n)
    out = []
    for k in range(1, g + 1):
        r = n // g * k
        out.append((r, m * r // n))
    return out


def sides(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``(left, right)`` of a connected bipartite graph; raises otherwise."""
    if not is_connected(g):
        raise GraphError("expected a connected graph")
    w = bipartition(g)
    if w is None:
        raise NotBipartiteError("graph contains an odd cycle")
    return w.left, w.right


def swap_sides(g: Graph) -> Graph:
    """Relabel so the right side comes first; ``extend`` then copies the other way."""
    left, right = sides(g)
    perm = [0] * g.n
    for i, v in enumerate(right + left):
        perm[v] = i
    return g.relabel(perm)


def _side_degrees(g: Graph, left: Sequence[int], right: Sequence[int]) -> tuple[int, int]:
    ld = {g.degree(v) for v in left}
    rd = {g.degree(v) for v in right}
    if len(ld) != 1 or len(rd) != 1:
        raise GraphError("graph is not biregular")
    return ld.pop(), rd.pop()


def extend(g: Graph, a: int, b: int, check: bool = True) -> Graph:
    """Blow up ``g``: ``b`` copies of the left side, ``a`` copies of the right.

    Each copy keeps the neighbourhood of its original, so an ``(r, s)``
    graph on ``K_{m,n}`` becomes ``(r*a, s*b)`` on ``K_{m*b, n*a}``. Left copy
    ``c`` of left vertex ``i`` is ``c*m + i``; right copy ``c`` of right
    vertex ``j`` is ``m*b + c*n + j``. The left side is the colour class of
    vertex 0.
    """
    if a < 1 or b < 1:
        raise GraphError("copy counts must be positive")
    left, right = sides(g)
    _side_degrees(g, left, right)
    if check and not is_edge_transitive(g):
        raise GraphError("extend needs an edge-transitive seed")
    m, n = len(left), len(right)
    lidx = {v: i for i, v in enumerate(left)}
    ridx = {v: j for j, v in enumerate(right)}
    base = [(lidx[u], ridx[v]) if u in lidx else (lidx[v], ridx[u]) for u, v in g.edges()]
    edges = [
        (cl * m + i, m * b + cr * n + j)
        for i, j in base
        for cl in range(b)
        for cr in range(a)
    ]
    return from_edges(m * b + n * a, edges)


def nontrivial_et_subgraph(m: int, n: int) -> Graph:
    """Connected, edge-transitive, non-complete biregular subgraph of ``K_{m,n}``.

    Seeds with ``K_{l,l}`` minus a perfect matching and blows it up; needs
    ``gcd(m, n) > 2`` because ``K_{2,2}`` minus a matching is disconnected.
    """
    g = math.gcd(m, n)
    if g <= 2:
        raise GraphError(
            f"gcd({m}, {n}) = {g}: the blow-up needs gcd > 2, since removing a "
            "perfect matching from K_{2,2} or K_{1,1} leaves a disconnected graph"
        )
    if n % m == 0:
        return extend(complete_bipartite_minus_pm(m), n // m, 1, check=False)
    return extend(complete_bipartite_minus_pm(g), n // g, m // g, check=False)


def subdivided_multigraph(m: int, multi_edges: Sequence[tuple[int, int]]) -> Graph:
    """Left vertices ``0..m-1``; right vertex ``m+t`` joins the ends of edge ``t``."""
    edges = []
    for t, (u, v) in enumerate(multi_edges):
        if u == v:
            raise GraphError("multigraph loops are not allowed")
        edges += [(u, m + t), (v, m + t)]
    return from_edges(m + len(multi_edges), edges)


def ring_construction(m: int, r: int) -> Graph:
    """Edge-transitive ``(r, 2)`` subgraph of ``K_{m, m*r/2}`` for even ``r``.

    Left vertex ``i`` shares ``r/2`` right vertices with each of ``i-1`` and
    ``i+1`` (mod ``m``), so every descriptor is ``[r/2, r/2, 0, ...]``.
    Right vertex ``m + i*(r/2) + t`` joins ``i`` and ``i+1``.
    """
    if r % 2:
        raise GraphError(f"ring construction needs even r, got {r}")
    if m < 3:
        raise GraphError(f"ring construction needs m >= 3, got {m}")
    half = r // 2
    return subdivided_multigraph(m, [(i, (i + 1) % m) for i in range(m) for _ in range(half)])


def _r2_sides(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    left, right = sides(g)
    r, s = _side_degrees(g, left, right)
    if s != 2 and r == 2:
        left, right, r, s = right, left, s, r
    if s != 2:
        raise GraphError("descriptors are defined for (r, 2) biregular graphs")
    return left, right, r


def _share_counts(g: Graph, left, right) -> dict[int, dict[int, int]]:
    shared = {i: {j: 0 for j in left if j != i} for i in left}
    for b in right:
        u, v = iter_bits(g.rows[b])
        shared[u][v] += 1
        shared[v][u] += 1
    return shared


def partition_descriptors(g: Graph) -> list[Descriptor]:
    """Descriptor of each left vertex, as a non-increasing tuple, in left order."""
    left, right, _ = _r2_sides(g)
    shared = _share_counts(g, left, right)
    return [tuple(sorted(shared[i].values(), reverse=True)) for i in left]


def is_uniform(descriptor: Sequence[int]) -> bool:
    return len({a for a in descriptor if a}) <= 1


def is_uniformly_partitioned(descriptors: Sequence[Sequence[int]]) -> bool:
    """Every descriptor uniform and all equal as multisets."""
    if not descriptors:
        return True
    first = sorted(descriptors[0])
    return all(is_uniform(d) and sorted(d) == first for d in descriptors)


@dataclass(frozen=True)
class ReductionGraph:
    graph: Graph
    blocks: tuple[tuple[int, ...], ...]
    block_size: int
    d: int


def reduction_graph(g: Graph, d: int) -> ReductionGraph | None:
    """Collapse each ``d``-bundle of the line graph of ``g`` to one vertex.

    ``g`` is the ``(r, 2)`` graph itself, which fixes the block structure of
    its line graph. Vertex ``(i, t)`` of the result stands for the ``t``-th
    bundle (ordered by partner) leaving block ``i``; blocks are cliques and
    bundles joined one-to-one become adjacent. Returns ``None`` when ``d`` is
    not the common nonzero descriptor value.
    """
    left, right, r = _r2_sides(g)
    desc = partition_descriptors(g)
    if not is_uniformly_partitioned(desc):
        raise GraphError("reduction needs uniformly partitioned blocks")
    values = {a for a in desc[0] if a}
    if values != {d} or r % d:
        return None
    shared = _share_counts(g, left, right)
    bundle: dict[tuple[int, int], int] = {}
    blocks = []
    for i in left:
        block = []
        for j in sorted(shared[i]):
            if shared[i][j]:
                bundle[(i, j)] = len(bundle)
                block.append(bundle[(i, j)])
        blocks.append(tuple(block))
    edges = [(x, y) for block in blocks for x, y in itertools.combinations(block, 2)]
    edges += [(bundle[(i, j)], bundle[(j, i)]) for (i, j) in bundle if i < j]
    return ReductionGraph(from_edges(len(bundle), edges), tuple(blocks), r // d, d)


def line_graph_blocks(g: Graph) -> tuple[Graph, list[list[int]]]:
    """Line graph of an ``(r, 2)`` graph with its clique blocks (one per left vertex)."""
    left, _, _ = _r2_sides(g)
    lg = line_graph(g)
    edges = g.edges()
    pos = {v: k for k, v in enumerate(left)}
    blocks: list[list[int]] = [[] for _ in left]
    for idx, (u, v) in enumerate(edges):
        blocks[pos[u] if u in pos else pos[v]].append(idx)
    return lg, blocks


def k4n_et_subgraph(n: int) -> Graph | None:
    """The edge-transitive ``(n/2, 2)`` subgraph of ``K_{4,n}`` when ``gcd(4, n) = 2``.

    ``None`` unless ``6 | n``; otherwise ``K_4`` subdivided with every edge
    taken ``n/6`` times, i.e. the ``(3, 2)`` graph on ``K_{4,6}`` with its
    right side copied ``n/6`` times.
    """
    if math.gcd(4, n) != 2:
        raise GraphError(f"needs gcd(4, n) = 2, got gcd(4, {n}) = {math.gcd(4, n)}")
    if n % 6:
        return None
    seed = subdivided_multigraph(4, list(itertools.combinations(range(4), 2)))
    return extend(seed, n // 6, 1, check=False)


# exhaustive search -------------------------------------------------------------

DEFAULT_NODE_LIMIT = 50_000_000


class SearchLimitError(GraphError):
    pass


@dataclass(frozen=True)
class SearchHit:
    graph: Graph
    canonical_g6: str
    descriptors: tuple[Descriptor, ...] | None


def exhaustive_et_search(
    m: int, n: int, r: int, s: int, node_limit: int = DEFAULT_NODE_LIMIT
) -> list[SearchHit]:
    """All connected edge-transitive ``(r, s)`` subgraphs of ``K_{m,n}`` up to isomorphism.

    Right vertices receive ``s``-subsets of the left side in non-decreasing
    lexicographic order, and fresh left vertices are used in increasing
    order; both restrictions keep at least one labelling of every graph.
    Results are sorted by canonical graph6.
    """
    BiregularDims(m, n, r, s)
    subsets = [sum(1 << v for v in c) for c in itertools.combinations(range(m), s)]
    first = [min(iter_bits(x)) for x in subsets]
    deg = [0] * m
    chosen: list[int] = []
    found: dict[Graph, Graph] = {}
    nodes = 0

    def record() -> None:
        edges = [(v, m + j) for j, mask in enumerate(chosen) for v in iter_bits(mask)]
        g = from_edges(m + n, edges)
        if not is_connected(g):
            return
        # an edge-transitive biregular graph has at most two vertex orbits
        if len(equitable_refinement(g, OrderedPartition.unit(g.n)).cells) > 2:
            return
        res = search(g)
        if res.canonical in found:
            return
        if is_edge_transitive(g, res.group()):
            found[res.canonical] = g

    def go(j: int, start: int, used: int) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise SearchLimitError(f"search for ({m},{n},{r},{s}) exceeded {node_limit} nodes")
        if j == n:
            record()
            return
        remaining = n - j
        for idx in range(start, len(subsets)):
            f = first[idx]
            # vertices below f never appear again
            if any(deg[v] != r for v in range(f)):
                break
            mask = subsets[idx]
            fresh = mask >> used
            if fresh & (fresh + 1):
                continue
            ok = True
            for v in iter_bits(mask):
                if deg[v] >= r:
                    ok = False
                    break
            if not ok:
                continue
            for v in iter_bits(mask):
                deg[v] += 1
            if all(r - deg[v] <= remaining - 1 for v in range(m)):
                chosen.append(mask)
                go(j + 1, idx, used + fresh.bit_length())
                chosen.pop()
            for v in iter_bits(mask):
                deg[v] -= 1

    go(0, 0, 0)
    hits = []
    for canon, g in found.items():
        desc = tuple(partition_descriptors(g)) if s == 2 and r >= 2 else None
        hits.append(SearchHit(g, to_graph6(canon), desc))
    hits.sort(key=lambda h: h.canonical_g6)
    return hits

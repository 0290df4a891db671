from __future__ import annotations

import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from etgraph.biregular import (
    BiregularDims,
    SearchLimitError,
    admissible_pairs,
    exhaustive_et_search,
    extend,
    is_uniformly_partitioned,
    k4n_et_subgraph,
    line_graph_blocks,
    nontrivial_et_subgraph,
    partition_descriptors,
    reduction_graph,
    ring_construction,
    subdivided_multigraph,
    swap_sides,
)
from etgraph.families import complete_bipartite, complete_bipartite_minus_pm, cycle, load_fixture
from etgraph.graph import Graph, GraphError, is_biregular, is_connected
from etgraph.symmetry import canonical_graph6, is_edge_transitive, is_isomorphic


def iso(g: Graph, h: Graph) -> bool:
    return is_isomorphic(g, h)[0]


def assert_et_biregular(g: Graph, rs: tuple[int, int]) -> None:
    assert is_connected(g)
    assert is_edge_transitive(g)
    assert is_biregular(g) == rs


def mixed_310() -> Graph:
    # four left vertices, each sharing 3 right vertices with one partner and 1 with another
    return subdivided_multigraph(4, [(0, 1)] * 3 + [(0, 2), (1, 3)] + [(2, 3)] * 3)


def test_admissible_pairs_examples():
    assert admissible_pairs(4, 10) == [(5, 2), (10, 4)]
    assert admissible_pairs(7, 5) == [(5, 7)]
    assert admissible_pairs(6, 6) == [(k, k) for k in range(1, 7)]


@given(st.integers(1, 40), st.integers(1, 40))
def test_admissible_pairs_balance(m, n):
    pairs = admissible_pairs(m, n)
    assert len(pairs) == math.gcd(m, n)
    for r, s in pairs:
        BiregularDims(m, n, r, s)
    assert pairs[-1] == (n, m)


def test_dims_validation():
    with pytest.raises(GraphError):
        BiregularDims(4, 10, 4, 2)


def test_extend_examples():
    seed = complete_bipartite_minus_pm(3)
    assert_et_biregular(extend(seed, 1, 2), (2, 4))
    assert extend(complete_bipartite(2, 2), 1, 1) == complete_bipartite(2, 2)
    g = extend(seed, 2, 3)
    assert g.n == 15
    assert_et_biregular(g, (4, 6))


def test_extend_rejects_non_et_seed():
    with pytest.raises(GraphError):
        extend(mixed_310(), 1, 2)


@pytest.mark.parametrize("a, b", [(1, 2), (2, 1), (2, 3), (3, 2)])
def test_extend_order_does_not_matter(a, b):
    seed = ring_construction(4, 2)
    one_shot = extend(seed, a, b)
    stepwise = extend(extend(seed, a, 1), 1, b)
    assert iso(one_shot, stepwise)


def test_swap_sides_puts_right_first():
    g = swap_sides(complete_bipartite(2, 5))
    assert is_biregular(g) == (2, 5)


def test_nontrivial_examples():
    g = nontrivial_et_subgraph(3, 6)
    assert g.n == 9
    assert_et_biregular(g, (4, 2))
    assert_et_biregular(nontrivial_et_subgraph(6, 9), (6, 4))
    with pytest.raises(GraphError, match="gcd"):
        nontrivial_et_subgraph(4, 10)


@given(st.integers(3, 12), st.integers(3, 12))
def test_nontrivial_property(m, n):
    if math.gcd(m, n) <= 2:
        return
    g = nontrivial_et_subgraph(m, n)
    assert g.n == m + n
    assert g.m < m * n
    assert is_connected(g) and is_edge_transitive(g)
    assert is_biregular(g) is not None


def test_ring_construction_examples():
    g = ring_construction(4, 6)
    assert_et_biregular(g, (6, 2))
    assert partition_descriptors(g) == [(3, 3, 0)] * 4
    assert_et_biregular(ring_construction(5, 4), (4, 2))
    # three blocks with one shared vertex per neighbour pair close up to a hexagon
    assert iso(ring_construction(3, 2), cycle(6))
    for bad in ((4, 3), (2, 4)):
        with pytest.raises(GraphError):
            ring_construction(*bad)


@pytest.mark.parametrize("m", range(3, 7))
@pytest.mark.parametrize("r", [2, 4, 6])
def test_ring_construction_property(m, r):
    assert_et_biregular(ring_construction(m, r), (r, 2))


def test_descriptor_examples():
    assert partition_descriptors(complete_bipartite(2, 2)) == [(2,), (2,)]
    desc = partition_descriptors(mixed_310())
    assert desc == [(3, 1, 0)] * 4
    assert not is_uniformly_partitioned(desc)
    assert not is_edge_transitive(mixed_310())
    with pytest.raises(GraphError):
        partition_descriptors(complete_bipartite(3, 3))


def test_uniform_partition_examples():
    assert is_uniformly_partitioned([[3, 3, 0]] * 4)
    assert not is_uniformly_partitioned([[3, 1, 0]] * 4)
    assert is_uniformly_partitioned([[2, 2, 2]] * 4)
    assert not is_uniformly_partitioned([[2, 2, 0], [1, 1, 1, 1]])


def test_reduction_graph_examples():
    red = reduction_graph(ring_construction(4, 6), 3)
    assert red is not None
    assert red.block_size == 2 and len(red.blocks) == 4
    assert red.graph.n == 8

    hits = {h.descriptors[0]: h.graph for h in exhaustive_et_search(4, 12, 6, 2)}
    red = reduction_graph(hits[(2, 2, 2)], 2)
    k46 = k4n_et_subgraph(6)
    assert iso(red.graph, line_graph_blocks(k46)[0])

    single = reduction_graph(complete_bipartite(2, 2), 2)
    assert single.block_size == 1 and single.blocks == ((0,), (1,))
    assert reduction_graph(ring_construction(4, 6), 2) is None
    with pytest.raises(GraphError):
        reduction_graph(mixed_310(), 1)


def test_reduction_blocks_are_cliques_with_one_neighbour_per_block():
    red = reduction_graph(ring_construction(5, 4), 2)
    where = {v: i for i, b in enumerate(red.blocks) for v in b}
    for b in red.blocks:
        assert all(red.graph.has_edge(u, v) for u, v in itertools.combinations(b, 2))
        for v in b:
            foreign = [where[w] for w in red.graph.neighbors(v) if where[w] != where[v]]
            assert len(foreign) == len(set(foreign))


def test_k4n_examples():
    assert k4n_et_subgraph(10) is None
    g = k4n_et_subgraph(6)
    assert g.n == 10
    assert_et_biregular(g, (3, 2))
    g18 = k4n_et_subgraph(18)
    assert_et_biregular(g18, (9, 2))
    (hit,) = exhaustive_et_search(4, 18, 9, 2)
    assert iso(hit.graph, g18)
    with pytest.raises(GraphError):
        k4n_et_subgraph(8)


@pytest.mark.parametrize("m, n, r, s, expected", [
    (5, 10, 4, 2, {(2, 2, 0, 0), (1, 1, 1, 1)}),
    (4, 10, 5, 2, set()),
    (4, 12, 6, 2, {(3, 3, 0), (2, 2, 2)}),
    (4, 6, 3, 2, {(1, 1, 1)}),
])
def test_search_ground_truth(m, n, r, s, expected):
    hits = exhaustive_et_search(m, n, r, s)
    assert {h.descriptors[0] for h in hits} == expected
    assert len(hits) == len(expected)
    for h in hits:
        assert is_uniformly_partitioned(h.descriptors)
        assert_et_biregular(h.graph, (r, s))


def test_search_results_pairwise_distinct_and_sorted():
    hits = exhaustive_et_search(6, 9, 6, 4)
    keys = [h.canonical_g6 for h in hits]
    assert keys == sorted(set(keys))
    assert all(canonical_graph6(h.graph) == h.canonical_g6 for h in hits)


def test_ring_construction_is_one_of_the_k510_hits():
    hits = exhaustive_et_search(5, 10, 4, 2)
    assert any(iso(h.graph, ring_construction(5, 4)) for h in hits)


def test_222_0_has_no_realization():
    hits = exhaustive_et_search(5, 15, 6, 2)
    assert all(h.descriptors[0] != (2, 2, 2, 0) for h in hits)


@pytest.mark.parametrize("m, n", [(2, 3), (3, 5), (3, 4), (4, 5)])
def test_coprime_sides_give_only_complete(m, n):
    (hit,) = exhaustive_et_search(m, n, n, m)
    assert hit.graph.m == m * n


def test_search_limit():
    with pytest.raises(SearchLimitError):
        exhaustive_et_search(5, 15, 6, 2, node_limit=100)


@pytest.mark.parametrize("dims, names", [
    ((6, 8, 4, 3), ["bireg-14-4-3-a", "bireg-14-4-3-b"]),
    ((7, 7, 4, 4), ["bireg-14-4-4"]),
    ((5, 10, 6, 3), ["bireg-15-6-3"]),
    ((6, 9, 6, 4), ["bireg-15-6-4-a", "bireg-15-6-4-b"]),
    ((6, 10, 5, 3), ["bireg-16-5-3"]),
])
def test_search_fixtures_match_search(dims, names):
    found = sorted(h.canonical_g6 for h in exhaustive_et_search(*dims))
    assert found == sorted(canonical_graph6(load_fixture(nm)) for nm in names)

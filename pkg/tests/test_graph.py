from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import connected_graphs, graphs
from etgraph.families import complete, complete_bipartite, complete_bipartite_minus_pm, cycle, path, star
from etgraph.graph import (
    Graph,
    Graph6Error,
    GraphError,
    NotBipartiteError,
    bipartition,
    cartesian_product,
    complement,
    components,
    degree_profile,
    disjoint_union,
    empty_graph,
    from_edge_list,
    from_edges,
    from_graph6,
    is_biregular,
    is_connected,
    line_graph,
    to_edge_list,
    to_graph6,
)
from etgraph.symmetry import is_isomorphic


def oracle_graph6(n: int, edges: set[tuple[int, int]]) -> str:
    """Straight transcription of the format for n <= 62: column-wise bits, 6 per char."""
    bits = "".join("1" if (i, j) in edges else "0" for j in range(1, n) for i in range(j))
    bits += "0" * (-len(bits) % 6)
    return chr(n + 63) + "".join(chr(int(bits[k:k + 6], 2) + 63) for k in range(0, len(bits), 6))


def iso(g: Graph, h: Graph) -> bool:
    return is_isomorphic(g, h)[0]


def test_from_edges_examples():
    k3 = from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert k3 == complete(3) and k3.m == 3
    assert from_edges(2, [(0, 1), (1, 0)]).m == 1


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 4)], [(-1, 2)]])
def test_from_edges_rejects(edges):
    with pytest.raises(GraphError):
        from_edges(4, edges)


def test_vertex_cap():
    with pytest.raises(GraphError):
        empty_graph(0)


def test_graph6_examples():
    assert oracle_graph6(4, set(itertools.combinations(range(4), 2))) == "C~"
    assert to_graph6(complete(4)) == "C~"
    g = from_graph6("A?")
    assert g.n == 2 and g.m == 0


def test_graph6_matches_oracle_on_random_graphs():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 12)
        edges = {e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5}
        assert to_graph6(from_edges(n, edges)) == oracle_graph6(n, edges)


def test_graph6_roundtrip_1000():
    rng = random.Random(1)
    for _ in range(1000):
        n = rng.randint(1, 12)
        g = from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5])
        assert from_graph6(to_graph6(g)) == g


def test_graph6_large_size_field():
    g = cycle(70)
    s = to_graph6(g)
    assert s[0] == "~"
    assert from_graph6(s) == g


@given(graphs(max_n=12))
def test_graph6_roundtrip_property(g):
    assert from_graph6(to_graph6(g)) == g


@pytest.mark.parametrize("text, offset", [
    ("C~~", 2),      # trailing byte
    ("C", 1),        # missing data
    ("C\x07", 1),    # non-printable
    ("B@", 1),       # padding bits set (n=3 uses 3 of 6 bits)
])
def test_graph6_errors(text, offset):
    with pytest.raises(Graph6Error) as info:
        from_graph6(text)
    assert info.value.offset == offset


def test_edge_list_roundtrip_and_errors():
    g = cycle(5)
    assert from_edge_list(to_edge_list(g)) == g
    with pytest.raises(Graph6Error):
        from_edge_list("3 2\n0 1\n")
    with pytest.raises(Graph6Error) as info:
        from_edge_list("3 1\n0 x\n")
    assert info.value.offset == 6


def test_complement_examples():
    assert complement(complete(5)).m == 0
    assert iso(complement(cycle(5)), cycle(5))


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert g.m + complement(g).m == g.n * (g.n - 1) // 2


def test_line_graph_examples():
    assert iso(line_graph(star(4)), complete(3))
    assert iso(line_graph(cycle(6)), cycle(6))
    with pytest.raises(GraphError):
        line_graph(empty_graph(3))


def test_line_graph_of_k46_32_subgraph():
    from etgraph.biregular import k4n_et_subgraph, line_graph_blocks

    g = k4n_et_subgraph(6)
    lg, blocks = line_graph_blocks(g)
    assert lg.n == 12
    assert sorted(len(b) for b in blocks) == [3, 3, 3, 3]
    for b in blocks:
        assert all(lg.has_edge(u, v) for u, v in itertools.combinations(b, 2))


@given(graphs())
def test_line_graph_counts(g):
    if g.m == 0:
        return
    lg = line_graph(g)
    assert lg.n == g.m
    assert lg.m == sum(d * (d - 1) // 2 for d in g.degrees())


def test_cartesian_product_examples():
    assert iso(cartesian_product(complete(2), complete(2)), cycle(4))
    c33 = cartesian_product(cycle(3), cycle(3))
    assert (c33.n, c33.m) == (9, 18)
    k34 = cartesian_product(complete(3), complete(4))
    assert (k34.n, k34.m) == (12, 30)
    assert complement(k34).m == 36


@given(graphs(max_n=5), graphs(max_n=5))
def test_cartesian_product_counts(g, h):
    p = cartesian_product(g, h)
    assert p.n == g.n * h.n
    assert p.m == g.n * h.m + h.n * g.m


def test_connectivity_examples():
    assert is_connected(cycle(7))
    two = disjoint_union(complete(3), complete(3))
    assert not is_connected(two)
    assert len(components(two)) == 2
    assert is_connected(complete_bipartite_minus_pm(5))


def test_bipartition_examples():
    w = bipartition(cycle(6))
    assert (len(w.left), len(w.right)) == (3, 3)
    assert bipartition(cycle(5)) is None


def test_bipartition_of_k510_subgraph():
    from etgraph.biregular import ring_construction

    g = ring_construction(5, 4)
    w = bipartition(g)
    assert (len(w.left), len(w.right)) == (5, 10)
    assert (w.left_degrees, w.right_degrees) == ({4}, {2})


def test_bipartition_disconnected_side_rule():
    g = from_edges(4, [(1, 3)])
    w = bipartition(g)
    assert w.left == (0, 1, 2) and w.right == (3,)


@given(graphs())
def test_bipartition_has_no_inner_edges(g):
    w = bipartition(g)
    if w is None:
        return
    assert sorted(w.left + w.right) == list(range(g.n))
    for side in (w.left, w.right):
        assert not any(g.has_edge(u, v) for u, v in itertools.combinations(side, 2))


def test_biregular_examples():
    assert is_biregular(complete_bipartite(3, 4)) == (4, 3)
    assert is_biregular(star(6)) == (5, 1)
    assert is_biregular(path(4)) is None
    with pytest.raises(NotBipartiteError):
        is_biregular(cycle(5))
    assert degree_profile(path(4)) == (1, 1, 2, 2)


@given(connected_graphs(), st.randoms(use_true_random=False))
def test_relabel_preserves_structure(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    h = g.relabel(perm)
    assert h.m == g.m
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())


def test_graph_is_hashable_and_immutable():
    g = cycle(5)
    assert {g: 1}[from_edges(5, g.edges())] == 1
    with pytest.raises(AttributeError):
        g.n = 3

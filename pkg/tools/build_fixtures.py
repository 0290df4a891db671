"""Regenerate the graph6 fixtures and manifest under src/etgraph/fixtures.

Classical named graphs come from networkx. The rest are built here from
short constructions, and the exhaustive-search ones are rerun. Each graph
is checked for order, size, connectivity and edge-transitivity before it
is written; the manifest records how it was obtained.

    python3 tools/build_fixtures.py [--skip-slow]

``--skip-slow`` takes the (4,4) graph on ``K_{9,9}`` from its construction
as a bipartite double instead of rerunning the search, which takes minutes.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import sys
from pathlib import Path

import networkx as nx

from etgraph.biregular import exhaustive_et_search, extend, sides, subdivided_multigraph
from etgraph.families import complete, complete_multipartite, johnson, petersen, wreath
from etgraph.graph import (
    Graph,
    cartesian_product,
    complement,
    from_edges,
    is_connected,
)
from etgraph.symmetry import canonical_graph6, is_edge_transitive

OUT = Path(__file__).resolve().parents[1] / "src" / "etgraph" / "fixtures"


def from_nx(g: nx.Graph) -> Graph:
    g = nx.convert_node_labels_to_integers(g, ordering="sorted")
    return from_edges(g.number_of_nodes(), g.edges())


def lex_empty(g: Graph, k: int) -> Graph:
    """``g[kK_1]``: every vertex becomes ``k`` twins."""
    return from_edges(g.n * k, [(u * k + r, v * k + s) for u, v in g.edges() for r in range(k) for s in range(k)])


def bipartite_double(g: Graph) -> Graph:
    n = g.n
    return from_edges(2 * n, [e for u, v in g.edges() for e in ((u, n + v), (v, n + u))])


def bipartite_complement(g: Graph) -> Graph:
    left, right = sides(g)
    return from_edges(g.n, [(u, v) for u in left for v in right if not g.has_edge(u, v)])


def haar(code: int) -> Graph:
    """Bipartite circulant read off the binary digits of ``code``."""
    bits = bin(code)[2:]
    n = len(bits)
    conn = [i for i, c in enumerate(bits) if c == "1"]
    return from_edges(2 * n, [(i, n + (i + s) % n) for i in range(n) for s in conn])


def cayley_abelian(mods: tuple[int, ...], conn: list[tuple[int, ...]]) -> Graph:
    elems = list(itertools.product(*(range(m) for m in mods)))
    index = {e: i for i, e in enumerate(elems)}
    edges = set()
    for e in elems:
        for s in conn:
            f = tuple((a + b) % m for a, b, m in zip(e, s, mods))
            edges.add(tuple(sorted((index[e], index[f]))))
    return from_edges(len(elems), edges)


def distance_graph(g: Graph, d: int) -> Graph:
    dist = dict(nx.all_pairs_shortest_path_length(nx.Graph(list(g.edges()))))
    return from_edges(g.n, [(u, v) for u, v in itertools.combinations(range(g.n), 2) if dist[u][v] == d])


def rose_window(n: int, a: int, r: int) -> Graph:
    edges = []
    for i in range(n):
        edges += [(i, (i + 1) % n), (i, n + i), ((i + a) % n, n + i), (n + i, n + (i + r) % n)]
    return from_edges(2 * n, edges)


def arrangement(k: int) -> Graph:
    """Ordered pairs of distinct symbols, adjacent when they agree in exactly one position."""
    pairs = [(i, j) for i in range(k) for j in range(k) if i != j]
    return from_edges(len(pairs), [
        (a, b) for a, b in itertools.combinations(range(len(pairs)), 2)
        if (pairs[a][0] == pairs[b][0]) != (pairs[a][1] == pairs[b][1])
    ])


def affine_planes_minus_class() -> Graph:
    """Points of AG(3,2) against the 12 planes outside one parallel class."""
    planes = {frozenset((a, b, c, a ^ b ^ c)) for a, b, c in itertools.combinations(range(8), 3)}
    drop = {frozenset({0, 1, 2, 3}), frozenset({4, 5, 6, 7})}
    keep = sorted((p for p in planes if p not in drop), key=sorted)
    return from_edges(20, [(v, 8 + i) for i, p in enumerate(keep) for v in p])


def subdivided_k(n: int) -> Graph:
    return subdivided_multigraph(n, list(itertools.combinations(range(n), 2)))


def search_hits(m: int, n: int, r: int, s: int) -> list[Graph]:
    return [h.graph for h in exhaustive_et_search(m, n, r, s)]


def build(skip_slow: bool) -> list[tuple[str, Graph, str]]:
    q3 = from_nx(nx.cubical_graph())
    k3k3 = cartesian_product(complete(3), complete(3))
    desargues = from_nx(nx.desargues_graph())
    folkman = extend(subdivided_k(5), 1, 2)
    out = [
        ("Heawood", from_nx(nx.heawood_graph()), "networkx heawood_graph"),
        ("Pappus", from_nx(nx.pappus_graph()), "networkx pappus_graph"),
        ("Desargues", desargues, "networkx desargues_graph"),
        ("Mobius-Kantor", from_nx(nx.moebius_kantor_graph()), "networkx moebius_kantor_graph"),
        ("Dodecahedral", from_nx(nx.dodecahedral_graph()), "networkx dodecahedral_graph"),
        ("Icosahedral", from_nx(nx.icosahedral_graph()), "networkx icosahedral_graph"),
        ("Cuboctahedral", from_nx(nx.line_graph(nx.cubical_graph())), "line graph of the cube (networkx)"),
        ("Clebsch", cayley_abelian((2,) * 4, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 1, 1)]),
         "Cayley graph of Z2^4 on the unit vectors and 1111 (folded 5-cube)"),
        ("Shrikhande", cayley_abelian((4, 4), [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)]),
         "Cayley graph of Z4xZ4 on +-(1,0) +-(0,1) +-(1,1)"),
        ("Folkman", folkman, "subdivided K5 with the K5 side doubled: extend(S(K5), 1, 2)"),
        ("Haar(187)", haar(187), "Haar graph of Z8 on the positions of the 1-bits of 10111011"),
        ("Haar(525)", haar(525), "Haar graph of Z10 on the positions of the 1-bits of 1000001101"),
        ("NoncayleyTransitive(20,4)", rose_window(10, 3, 4),
         "rose window graph R_10(3,4); the only 4-regular vertex-transitive ET class on 20 vertices "
         "besides Wreath(10,2) and Haar(525) among all rose window graphs R_10(a,r), identified by elimination"),
        ("NoncayleyTransitive(20,12)", distance_graph(desargues, 3),
         "distance-3 graph of the Desargues graph; the vertex-transitive one of the two (6,6) graphs on K_{10,10}"),
        ("H_1", lex_empty(k3k3, 2), "(K3 x K3)[2K1]; the only 8-regular ET candidate on 18 vertices besides K_{9,9}-PM"),
        ("G_1", lex_empty(petersen(), 2), "Petersen[2K1]; G_1/G_2 order is a labelling choice"),
        ("G_2", distance_graph(from_nx(nx.dodecahedral_graph()), 2), "distance-2 graph of the dodecahedron"),
        ("G_3", lex_empty(complement(petersen()), 2), "complement of Petersen, [2K1]"),
        ("1-Menger-sponge", subdivided_multigraph(8, list(q3.edges())),
         "subdivided cube: 8 corner cubes and 12 edge cubes of the level-1 sponge"),
        ("Trpl(C_5)", wreath(5, 3), "C5[3K1] = Wreath(5,3)"),
        ("(5,2)-arrangement", arrangement(5), "ordered pairs from 5 symbols, adjacent when one coordinate agrees"),
        ("6-tetrahedral-Johnson", johnson(6, 3), "Johnson graph J(6,3)"),
    ]
    a, b = search_hits(6, 8, 4, 3)
    out += [
        ("bireg-14-4-3-a", a, "exhaustive_et_search(6, 8, 4, 3), hit 1 of 2"),
        ("bireg-14-4-3-b", b, "exhaustive_et_search(6, 8, 4, 3), hit 2 of 2"),
    ]
    (h,) = search_hits(7, 7, 4, 4)
    out.append(("bireg-14-4-4", h, "exhaustive_et_search(7, 7, 4, 4), unique hit"))
    (h,) = search_hits(5, 10, 6, 3)
    out.append(("bireg-15-6-3", h, "exhaustive_et_search(5, 10, 6, 3), unique hit"))
    a, b = search_hits(6, 9, 6, 4)
    out += [
        ("bireg-15-6-4-a", a, "exhaustive_et_search(6, 9, 6, 4), hit 1 of 2"),
        ("bireg-15-6-4-b", b, "exhaustive_et_search(6, 9, 6, 4), hit 2 of 2"),
    ]
    (h,) = search_hits(6, 10, 5, 3)
    out.append(("bireg-16-5-3", h, "exhaustive_et_search(6, 10, 5, 3), unique hit"))
    if skip_slow:
        out.append(("bireg-18-4-4", bipartite_double(k3k3), "bipartite double of K3 x K3"))
    else:
        (h,) = search_hits(9, 9, 4, 4)
        out.append(("bireg-18-4-4", h, "exhaustive_et_search(9, 9, 4, 4), unique hit"))
    pappus = from_nx(nx.pappus_graph())
    out += [
        ("bireg-18-6-6-a", bipartite_complement(pappus), "bipartite complement of the Pappus graph"),
        ("bireg-18-6-6-b", bipartite_double(complete_multipartite([3, 3, 3])), "bipartite double of K_{3,3,3}"),
        ("bireg-20-6-6", bipartite_complement(folkman), "bipartite complement of the Folkman graph"),
        ("bireg-20-6-4", affine_planes_minus_class(),
         "points of AG(3,2) versus the 12 planes outside one parallel class"),
    ]
    return out


def validate(name: str, g: Graph) -> None:
    if not is_connected(g) or not is_edge_transitive(g):
        sys.exit(f"{name}: not a connected edge-transitive graph")


def main(argv: list[str] | None = None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--skip-slow", action="store_true")
    args = ap.parse_args(argv)
    rows = build(args.skip_slow)
    seen: dict[str, str] = {}
    for name, g, _ in rows:
        validate(name, g)
        key = canonical_graph6(g)
        if key in seen:
            sys.exit(f"{name} duplicates {seen[key]}")
        seen[key] = name
    with open(OUT / "manifest.csv", "w", newline="", encoding="utf-8") as fh:
        fh.write("# regenerate with tools/build_fixtures.py; graph6 files hold canonical forms\n")
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["name", "file", "n", "m", "provenance"])
        for name, g, prov in rows:
            fname = safe_name(name) + ".g6"
            (OUT / fname).write_text(canonical_graph6(g) + "\n", encoding="ascii")
            w.writerow([name, fname, g.n, g.m, prov])
    print(f"wrote {len(rows)} fixtures to {OUT}")


def safe_name(name: str) -> str:
    return "".join(c if c.isalnum() or c in "-_" else "_" for c in name).strip("_").lower()


if __name__ == "__main__":
    main()

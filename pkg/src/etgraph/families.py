"""Generators for the named graph families, plus the fixture catalogue.

Labelling conventions are part of the contract, so tests can rely on them:
blocks are numbered consecutively, ``wreath`` puts vertex ``r`` of block
``i`` at ``i*k + r``, subset families list subsets in lexicographic order.
"""

from __future__ import annotations

import csv
import itertools
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Sequence

from .graph import Graph, GraphError, cartesian_product, complement, from_edges, from_graph6


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return from_edges(n, itertools.combinations(range(n), 2))


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """``K_{1,n-1}`` with centre 0."""
    _need(n >= 2, "star needs n >= 2")
    return from_edges(n, [(0, i) for i in range(1, n)])


def complete_bipartite(m: int, n: int) -> Graph:
    """Left side ``0..m-1``, right side ``m..m+n-1``."""
    return complete_multipartite([m, n])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    _need(len(sizes) >= 1 and all(s >= 1 for s in sizes), "part sizes must be positive")
    part = []
    for i, s in enumerate(sizes):
        part += [i] * s
    n = len(part)
    return from_edges(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if part[u] != part[v]])


def complete_minus_pm(n: int) -> Graph:
    """``K_n`` without the matching ``{2i, 2i+1}``."""
    _need(n >= 2 and n % 2 == 0, "K_n minus a perfect matching needs even n >= 2")
    return from_edges(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if u // 2 != v // 2])


def complete_bipartite_minus_pm(n: int) -> Graph:
    """``K_{n,n}`` without the matching ``{i, n+i}``."""
    _need(n >= 2, "K_{n,n} minus a perfect matching needs n >= 2")
    return from_edges(2 * n, [(i, n + j) for i in range(n) for j in range(n) if i != j])


def normalize_chords(n: int, chords: Sequence[int]) -> tuple[int, ...]:
    """Reduce chord lengths mod ``n`` into ``1..n//2``; drops duplicates."""
    out = set()
    for j in chords:
        j %= n
        j = min(j, n - j)
        if j == 0:
            raise GraphError(f"chord {j} is 0 mod {n}")
        out.add(j)
    return tuple(sorted(out))


def circulant(n: int, chords: Sequence[int]) -> Graph:
    _need(n >= 3, "circulant needs n >= 3")
    if len(set(chords)) != len(chords):
        raise GraphError(f"duplicate chords in {list(chords)}")
    for j in chords:
        _need(1 <= j <= n // 2, f"chord {j} outside 1..{n // 2}")
    return from_edges(n, [(i, (i + j) % n) for j in chords for i in range(n)])


def cycle_power(n: int, k: int) -> Graph:
    _need(n >= 3 and k >= 1, "cycle power needs n >= 3 and k >= 1")
    return circulant(n, list(range(1, min(k, n // 2) + 1)))


def wreath(n: int, k: int) -> Graph:
    _need(n >= 3 and k >= 1, "wreath needs n >= 3 and k >= 1")
    edges = []
    for i in range(n):
        j = (i + 1) % n
        edges += [(i * k + r, j * k + s) for r in range(k) for s in range(k)]
    return from_edges(n * k, edges)


def _subsets(n: int, k: int) -> list[frozenset[int]]:
    return [frozenset(c) for c in itertools.combinations(range(n), k)]


def kneser(n: int, k: int) -> Graph:
    _need(k >= 1 and n >= 2 * k, "Kneser graph needs n >= 2k >= 2")
    subs = _subsets(n, k)
    return from_edges(len(subs), [(a, b) for a, b in itertools.combinations(range(len(subs)), 2)
                                  if not subs[a] & subs[b]])


def johnson(n: int, k: int) -> Graph:
    _need(n > k >= 1, "Johnson graph needs n > k >= 1")
    subs = _subsets(n, k)
    return from_edges(len(subs), [(a, b) for a, b in itertools.combinations(range(len(subs)), 2)
                                  if len(subs[a] & subs[b]) == k - 1])


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q ** 0.5) + 1))


def paley(q: int) -> Graph:
    """Paley graph for a prime ``q = 1 mod 4`` (prime powers are not supported)."""
    _need(_is_prime(q), f"paley needs a prime order, got {q}")
    _need(q % 4 == 1, f"paley needs q = 1 mod 4, got {q}")
    residues = {x * x % q for x in range(1, q)}
    return from_edges(q, [(a, b) for a, b in itertools.combinations(range(q), 2) if (b - a) % q in residues])


def hypercube(d: int) -> Graph:
    _need(d >= 1, "hypercube needs d >= 1")
    n = 1 << d
    return from_edges(n, [(v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)])


def complement_product_complete(m: int, n: int) -> Graph:
    """Complement of ``K_m x K_n``; vertex ``(i, j)`` is ``i*n + j``."""
    _need(m >= 2 and n >= 2, "needs m, n >= 2")
    return complement(cartesian_product(complete(m), complete(n)))


def generalized_petersen(n: int, k: int) -> Graph:
    """Outer cycle ``0..n-1``, spokes ``i -- n+i``, inner edges ``n+i -- n+(i+k)``."""
    _need(n >= 3 and 1 <= k < n / 2, "generalized Petersen needs n >= 3 and 1 <= k < n/2")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    edges += [(n + i, n + (i + k) % n) for i in range(n)]
    return from_edges(2 * n, edges)


def petersen() -> Graph:
    return generalized_petersen(5, 2)


def _need(ok: bool, message: str) -> None:
    if not ok:
        raise GraphError(message)


# fixtures --------------------------------------------------------------------


@dataclass(frozen=True)
class Fixture:
    name: str
    file: str
    n: int
    m: int
    provenance: str


@lru_cache(maxsize=1)
def fixture_catalog() -> dict[str, Fixture]:
    text = resources.files("etgraph.fixtures").joinpath("manifest.csv").read_text(encoding="utf-8")
    rows = csv.DictReader(line for line in text.splitlines() if not line.startswith("#"))
    return {
        r["name"]: Fixture(r["name"], r["file"], int(r["n"]), int(r["m"]), r["provenance"])
        for r in rows
    }


class FixtureError(GraphError):
    pass


def load_fixture(name: str, validate: bool = True) -> Graph:
    """Graph stored under ``name`` in the fixture catalogue.

    Validation checks the catalogued vertex and edge counts, connectivity and
    edge-transitivity; a failure means the fixture file is wrong.
    """
    catalog = fixture_catalog()
    if name not in catalog:
        raise FixtureError(f"unknown fixture {name!r}")
    fx = catalog[name]
    text = resources.files("etgraph.fixtures").joinpath(fx.file).read_text(encoding="ascii")
    g = from_graph6(text.strip())
    if validate:
        _validate_fixture(fx, g)
    return g


@lru_cache(maxsize=None)
def _validate_fixture(fx: Fixture, g: Graph) -> None:
    from .graph import is_connected
    from .symmetry import is_edge_transitive

    if (g.n, g.m) != (fx.n, fx.m):
        raise FixtureError(f"fixture {fx.name}: expected n={fx.n} m={fx.m}, file has n={g.n} m={g.m}")
    if not is_connected(g):
        raise FixtureError(f"fixture {fx.name} is disconnected")
    if not is_edge_transitive(g):
        raise FixtureError(f"fixture {fx.name} is not edge-transitive")


# generator registry used by the CLI -----------------------------------------------

GENERATORS = {
    "complete": complete,
    "cycle": cycle,
    "path": path,
    "star": star,
    "complete-bipartite": complete_bipartite,
    "complete-minus-pm": complete_minus_pm,
    "complete-bipartite-minus-pm": complete_bipartite_minus_pm,
    "cycle-power": cycle_power,
    "wreath": wreath,
    "kneser": kneser,
    "johnson": johnson,
    "paley": paley,
    "hypercube": hypercube,
    "complement-product-complete": complement_product_complete,
    "generalized-petersen": generalized_petersen,
}

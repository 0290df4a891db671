from __future__ import annotations

import functools
import itertools
import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from etgraph.census import CensusReport, census_edge_transitive, enumerate_connected
from etgraph.graph import Graph, from_edges, is_connected

settings.register_profile("etgraph", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("etgraph")


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edges(n, [p for p, b in zip(pairs, bits) if b])


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    # random spanning tree plus random extra edges
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    edges = {(p, v) for v, p in zip(range(1, n), parents)}
    pairs = list(itertools.combinations(range(n), 2))
    extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
    return from_edges(n, edges | set(extra))


@st.composite
def permutations(draw, n: int) -> list[int]:
    return draw(st.permutations(list(range(n))))


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    while True:
        g = random_graph(rng, n, rng.uniform(0.2, 0.8))
        if is_connected(g):
            return g


def relabel_randomly(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


@pytest.fixture(scope="session")
def connected_upto_6() -> list[Graph]:
    out: list[Graph] = []
    for n in range(1, 7):
        enumerate_connected(n, out.append)
    return out


@functools.lru_cache(maxsize=None)
def cached_census(n: int, slow: bool = False) -> CensusReport:
    """Shared across test modules; a census is deterministic."""
    return census_edge_transitive(n, slow=slow)


# acceptance summary: tests/test_acceptance.py appends (number, passed, detail)
ACCEPTANCE: list[tuple[int, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'} criterion {number:>2}: {detail}")

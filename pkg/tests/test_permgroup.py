from __future__ import annotations

import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from etgraph.permgroup import PermutationGroup, UnionFind, compose, identity, inverse, orbits_of


def cyc(n: int) -> tuple[int, ...]:
    return tuple((i + 1) % n for i in range(n))


def transposition(n: int, a: int, b: int) -> tuple[int, ...]:
    p = list(range(n))
    p[a], p[b] = b, a
    return tuple(p)


@pytest.mark.parametrize("n", range(1, 8))
def test_symmetric_group_order(n):
    gens = [cyc(n), transposition(n, 0, 1)] if n > 1 else []
    assert PermutationGroup(n, gens).order == math.factorial(n)


@pytest.mark.parametrize("n", range(3, 10))
def test_dihedral_order(n):
    flip = tuple((-i) % n for i in range(n))
    assert PermutationGroup(n, [cyc(n), flip]).order == 2 * n


def test_alternating_group_order():
    gens = [(1, 2, 0, 3, 4), (0, 2, 3, 1, 4), (0, 1, 3, 4, 2)]
    assert PermutationGroup(5, gens).order == 60


def test_known_order_is_trusted_but_recomputable():
    g = PermutationGroup(4, [cyc(4)], known_order=99)
    assert g.order == 99
    assert g.schreier_sims_order() == 4


def test_invalid_generator():
    with pytest.raises(ValueError):
        PermutationGroup(3, [(0, 0, 1)])


def test_orbits_and_membership():
    g = PermutationGroup(6, [(1, 0, 2, 3, 4, 5), (0, 1, 3, 4, 2, 5)])
    assert [list(o) for o in g.orbits] == [[0, 1], [2, 3, 4], [5]]
    assert g.orbit_of(4) == (2, 3, 4)
    assert g.contains((1, 0, 3, 4, 2, 5))
    assert not g.contains((0, 1, 3, 2, 4, 5))


@given(st.lists(st.permutations(list(range(6))), max_size=3))
def test_order_matches_closure(gens):
    g = PermutationGroup(6, gens)
    elems = g.elements()
    assert g.order == len(elems)
    assert all(g.contains(x) for x in elems)


@given(st.permutations(list(range(7))), st.permutations(list(range(7))))
def test_compose_and_inverse(p, q):
    pq = compose(p, q)
    assert pq == tuple(q[p[i]] for i in range(7))
    assert compose(p, inverse(p)) == identity(7)


@given(st.lists(st.permutations(list(range(8))), max_size=3))
def test_orbits_are_closed(gens):
    orbs = orbits_of(8, gens)
    where = {x: i for i, o in enumerate(orbs) for x in o}
    for g in gens:
        assert all(where[g[x]] == where[x] for x in range(8))


def test_union_find_roots_are_smallest():
    uf = UnionFind(5)
    uf.union(4, 2)
    uf.union(2, 3)
    assert uf.find(4) == 2
    assert sorted(map(sorted, uf.classes())) == [[0], [1], [2, 3, 4]]
    assert not uf.union(3, 4)


def test_brute_force_closure_small():
    # S_3 acting on pairs: closure size 6
    g = PermutationGroup(3, list(itertools.permutations(range(3))))
    assert len(g.elements()) == 6

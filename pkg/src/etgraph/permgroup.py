"""Permutation groups given by generators: orbits and order."""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

Permutation = tuple[int, ...]


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        # smaller index becomes the root so classes have stable representatives
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return True

    def classes(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return list(groups.values())


def identity(n: int) -> Permutation:
    return tuple(range(n))


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """Apply ``p`` first, then ``q``."""
    return tuple(q[x] for x in p)


def inverse(p: Sequence[int]) -> Permutation:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def orbits_of(n: int, generators: Iterable[Sequence[int]]) -> list[list[int]]:
    uf = UnionFind(n)
    for g in generators:
        for x in range(n):
            uf.union(x, g[x])
    return uf.classes()


def _moved_point(g: Permutation) -> int:
    for x, y in enumerate(g):
        if x != y:
            return x
    raise ValueError("identity moves no point")


def _schreier_sims(
    n: int, generators: Sequence[Permutation]
) -> tuple[list[int], list[dict[int, Permutation]]]:
    """Deterministic Schreier-Sims.

    Returns the base and one transversal per base point; ``t[x]`` maps the
    base point to ``x``. The group order is the product of transversal sizes.
    """
    ident = identity(n)
    gens = [g for g in generators if g != ident]
    base: list[int] = []
    for g in gens:
        if all(g[b] == b for b in base):
            base.append(_moved_point(g))
    level_gens = [[g for g in gens if all(g[b] == b for b in base[:lvl])] for lvl in range(len(base))]

    def orbit(lvl: int) -> dict[int, Permutation]:
        b = base[lvl]
        trans = {b: ident}
        frontier = [b]
        while frontier:
            nxt = []
            for x in frontier:
                tx = trans[x]
                for g in level_gens[lvl]:
                    y = g[x]
                    if y not in trans:
                        trans[y] = compose(tx, g)
                        nxt.append(y)
            frontier = nxt
        return trans

    trans = [orbit(lvl) for lvl in range(len(base))]

    def strip(g: Permutation, start: int) -> tuple[Permutation, int]:
        for lvl in range(start, len(base)):
            t = trans[lvl].get(g[base[lvl]])
            if t is None:
                return g, lvl
            g = compose(g, inverse(t))
        return g, len(base)

    i = len(base) - 1
    while i >= 0:
        extended = False
        for x, u in list(trans[i].items()):
            for s in level_gens[i]:
                sg = compose(compose(u, s), inverse(trans[i][s[x]]))
                if sg == ident:
                    continue
                h, j = strip(sg, i + 1)
                if h == ident:
                    continue
                if j == len(base):
                    base.append(_moved_point(h))
                    level_gens.append([])
                    trans.append({})
                for lvl in range(i + 1, j + 1):
                    level_gens[lvl].append(h)
                    trans[lvl] = orbit(lvl)
                i = j
                extended = True
                break
            if extended:
                break
        if not extended:
            i -= 1
    return base, trans


class PermutationGroup:
    """Group generated by permutations of ``0..n-1``.

    ``known_order`` lets a producer that already knows the order (for example
    the canonical search) skip Schreier-Sims; it is trusted as given.
    """

    def __init__(self, n: int, generators: Iterable[Sequence[int]] = (), known_order: int | None = None):
        gens = []
        seen = set()
        ident = identity(n)
        for g in generators:
            g = tuple(g)
            if len(g) != n or not is_permutation(g):
                raise ValueError(f"not a permutation of 0..{n - 1}: {g}")
            if g != ident and g not in seen:
                seen.add(g)
                gens.append(g)
        self._n = n
        self._generators = tuple(gens)
        if known_order is not None:
            self.__dict__["order"] = known_order

    @property
    def n(self) -> int:
        return self._n

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return self._generators

    @cached_property
    def orbits(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(c) for c in orbits_of(self._n, self._generators))

    @cached_property
    def order(self) -> int:
        return self.schreier_sims_order()

    def schreier_sims_order(self) -> int:
        """Order recomputed from scratch, ignoring any ``known_order``."""
        total = 1
        for trans in _schreier_sims(self._n, self._generators)[1]:
            total *= len(trans)
        return total

    def orbit_of(self, x: int) -> tuple[int, ...]:
        for orb in self.orbits:
            if x in orb:
                return orb
        raise ValueError(f"point {x} out of range")

    def contains(self, g: Sequence[int]) -> bool:
        g = tuple(g)
        base, transversals = _schreier_sims(self._n, self._generators)
        for point, trans in zip(base, transversals):
            t = trans.get(g[point])
            if t is None:
                return False
            g = compose(g, inverse(t))
        return g == identity(self._n)

    def elements(self) -> list[Permutation]:
        """Every element, by closure; only for small groups."""
        ident = identity(self._n)
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self._generators:
                    y = compose(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    def __repr__(self) -> str:
        return f"PermutationGroup(n={self._n}, generators={len(self._generators)})"

"""Immutable simple graphs stored as packed adjacency bit rows.

Vertices are the integers ``0..n-1``. Row ``v`` is a Python int whose bit
``u`` is set iff ``u`` and ``v`` are adjacent, so common-neighbour counts are
a single ``&`` followed by ``bit_count()``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 1 << 16


class GraphError(ValueError):
    """Invalid graph input or an operation outside its domain."""


class NotBipartiteError(GraphError):
    pass


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class Graph:
    """Undirected simple graph on ``0..n-1``; immutable and hashable."""

    __slots__ = ("_n", "_rows", "_m")

    def __init__(self, n: int, rows: Sequence[int]):
        if not 1 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        if len(rows) != n:
            raise GraphError("need exactly one adjacency row per vertex")
        rows = tuple(rows)
        full = (1 << n) - 1
        for v, r in enumerate(rows):
            if r & ~full or r >> v & 1:
                raise GraphError(f"row {v} has a loop or an out-of-range bit")
        for v, r in enumerate(rows):
            x = r
            while x:
                low = x & -x
                u = low.bit_length() - 1
                if not rows[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at ({v}, {u})")
                x ^= low
        self._n = n
        self._rows = rows
        self._m = sum(r.bit_count() for r in rows) // 2

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> Graph:
        # skips validation; rows must already be symmetric and loop-free
        g = object.__new__(cls)
        g._n = n
        g._rows = rows
        g._m = sum(r.bit_count() for r in rows) // 2
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self._rows]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self._rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in ascending lexicographic order."""
        out = []
        for u, r in enumerate(self._rows):
            out.extend((u, v) for v in iter_bits(r >> (u + 1) << (u + 1)))
        return out

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph in which vertex ``perm[v]`` plays the role of ``v``."""
        n = self._n
        rows = [0] * n
        for v, r in enumerate(self._rows):
            img = 0
            for u in iter_bits(r):
                img |= 1 << perm[u]
            rows[perm[v]] = img
        return Graph._trusted(n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> Graph:
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            img = 0
            for u in iter_bits(self._rows[v]):
                i = index.get(u)
                if i is not None:
                    img |= 1 << i
            rows.append(img)
        return Graph._trusted(len(vertices), tuple(rows))

    def without_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        rows = list(self._rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._trusted(self._n, tuple(rows))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m}, g6={to_graph6(self)!r})"


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._trusted(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return from_edges(n, ())


# graph6 ---------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    n = g.n
    rows = g.rows
    chars = []
    acc = 0
    nbits = 0
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            acc = acc << 1 | (rj >> i & 1)
            nbits += 1
            if nbits == 6:
                chars.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        chars.append(chr((acc << (6 - nbits)) + 63))
    return _encode_size(n) + "".join(chars)


def from_graph6(text: str) -> Graph:
    s = text.strip("\r\n")
    base = 0
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
        base = len(_G6_HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside the graph6 range", base + i)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) > 1 and vals[1] != 63:
        if len(vals) < 4:
            raise Graph6Error("truncated size field", base + len(vals))
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        pos = 4
    else:
        if len(vals) < 8:
            raise Graph6Error("truncated size field", base + len(vals))
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        pos = 8
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} unsupported", base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) < need:
        raise Graph6Error(f"expected {need} data bytes, found {len(body)}", base + len(vals))
    if len(body) > need:
        raise Graph6Error("trailing characters after graph data", base + pos + need)
    pad = need * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", base + pos + need - 1)
    rows = [0] * n
    k = 0
    i, j = 0, 1
    for byte in body:
        for shift in range(5, -1, -1):
            if k == nbits:
                break
            if byte >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph._trusted(n, tuple(rows))


# plain edge-list text ---------------------------------------------------------

def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    offset = 0
    tokens: list[tuple[str, int]] = []
    for line in text.splitlines(keepends=True):
        stripped = line.split("#", 1)[0]
        col = 0
        for tok in stripped.split():
            col = stripped.index(tok, col)
            tokens.append((tok, offset + col))
            col += len(tok)
        offset += len(line)
    if len(tokens) < 2:
        raise Graph6Error("edge list needs an 'n m' header", offset)
    nums = []
    for tok, off in tokens:
        try:
            nums.append(int(tok))
        except ValueError:
            raise Graph6Error(f"non-integer token {tok!r}", off) from None
    n, m = nums[0], nums[1]
    pairs = nums[2:]
    if len(pairs) != 2 * m:
        raise Graph6Error(f"header promises {m} edges, found {len(pairs) / 2:g}", tokens[-1][1])
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} outside 1..{MAX_VERTICES}", tokens[0][1])
    for k in range(0, len(pairs), 2):
        u, v = pairs[k], pairs[k + 1]
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise Graph6Error(f"bad edge ({u}, {v}) for n={n}", tokens[2 + k][1])
    return from_edges(n, zip(pairs[0::2], pairs[1::2]))


# operators -----------------------------------------------------------------------

def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph._trusted(g.n, tuple(~r & full & ~(1 << v) for v, r in enumerate(g.rows)))


def line_graph(g: Graph) -> Graph:
    edges = g.edges()
    if not edges:
        raise GraphError("line graph of an edgeless graph is empty")
    at_vertex: list[int] = [0] * g.n
    for i, (u, v) in enumerate(edges):
        at_vertex[u] |= 1 << i
        at_vertex[v] |= 1 << i
    rows = tuple((at_vertex[u] | at_vertex[v]) & ~(1 << i) for i, (u, v) in enumerate(edges))
    return Graph._trusted(len(edges), rows)


def cartesian_product(h: Graph, k: Graph) -> Graph:
    """Vertex ``(i, j)`` of the product is ``i * k.n + j``."""
    nk = k.n
    rows = []
    for i in range(h.n):
        hi = list(iter_bits(h.rows[i]))
        for j in range(nk):
            r = k.rows[j] << (i * nk)
            for i2 in hi:
                r |= 1 << (i2 * nk + j)
            rows.append(r)
    return Graph._trusted(h.n * nk, tuple(rows))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph._trusted(g.n + h.n, g.rows + tuple(r << g.n for r in h.rows))


# connectivity and bipartiteness ------------------------------------------------------

def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = 0
    out = []
    rows = g.rows
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= rows[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(iter_bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    rows = g.rows
    comp = frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~comp
        comp |= frontier
    return comp == (1 << g.n) - 1


@dataclass(frozen=True)
class BipartitionWitness:
    left: tuple[int, ...]
    right: tuple[int, ...]
    left_degrees: frozenset[int]
    right_degrees: frozenset[int]


def bipartition(g: Graph) -> BipartitionWitness | None:
    """Two-colouring with the smallest vertex of every component on the left.

    Returns ``None`` when an odd cycle exists.
    """
    rows = g.rows
    left = right = 0
    for comp in components(g):
        side = [1 << comp[0], 0]
        frontier = side[0]
        colour = 0
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= rows[v]
            colour ^= 1
            if nxt & side[colour ^ 1]:
                return None
            frontier = nxt & ~side[colour]
            side[colour] |= frontier
        left |= side[0]
        right |= side[1]
    lv = tuple(iter_bits(left))
    rv = tuple(iter_bits(right))
    return BipartitionWitness(
        lv, rv,
        frozenset(rows[v].bit_count() for v in lv),
        frozenset(rows[v].bit_count() for v in rv),
    )


def degree_profile(g: Graph) -> tuple[int, ...]:
    return tuple(sorted(g.degrees()))


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees())) == 1


def is_biregular(g: Graph) -> tuple[int, int] | None:
    """Side degrees ``(r, s)``, left side (containing vertex 0) first.

    ``None`` when a side has mixed degrees or is empty; raises
    :class:`NotBipartiteError` on an odd cycle.
    """
    if not is_connected(g):
        raise GraphError("is_biregular expects a connected graph")
    w = bipartition(g)
    if w is None:
        raise NotBipartiteError("graph contains an odd cycle")
    if not w.right or len(w.left_degrees) != 1 or len(w.right_degrees) != 1:
        return None
    (r,) = w.left_degrees
    (s,) = w.right_degrees
    return r, s

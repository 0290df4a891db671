"""Edge-transitivity results for circulant graphs.

Vertex ``i`` of ``C_n(L)`` is joined to ``i +- j (mod n)`` for every chord
``j`` in ``L``. Chords are stored reduced into ``1..n//2``. Congruences of
the form ``x = +-y (mod n)`` are tested as membership of ``x mod n`` in
``{y mod n, -y mod n}``.

The explicit isomorphisms for classes 1-3 are transcribed on vertices
``1..N`` (with ``N`` standing for 0). :func:`from_one_based` and
:func:`to_one_based` are the only places where that indexing is converted.
"""

from __future__ import annotations

import enum
import itertools
import math
import warnings
from dataclasses import dataclass
from typing import Sequence

from .families import circulant, cycle_power, normalize_chords, wreath
from .graph import Graph, GraphError, is_connected
from .permgroup import Permutation
from .symmetry import andersen_edge_transitive, is_edge_transitive, search

SCAN_MAX_N = 64


@dataclass(frozen=True)
class CirculantSpec:
    n: int
    chords: tuple[int, ...]

    def __post_init__(self):
        if self.n < 3:
            raise GraphError("circulant needs n >= 3")
        if len(set(self.chords)) != len(self.chords):
            raise GraphError(f"duplicate chords in {self.chords}")
        if any(not 1 <= j <= self.n // 2 for j in self.chords):
            raise GraphError(f"chords of C_{self.n} must lie in 1..{self.n // 2}")
        if tuple(sorted(self.chords)) != self.chords:
            object.__setattr__(self, "chords", tuple(sorted(self.chords)))

    @classmethod
    def normalized(cls, n: int, chords: Sequence[int]) -> CirculantSpec:
        return cls(n, normalize_chords(n, chords))

    def graph(self) -> Graph:
        return circulant(self.n, list(self.chords))

    @property
    def degree(self) -> int:
        return sum(1 if 2 * j == self.n else 2 for j in self.chords)

    def __str__(self) -> str:
        return f"C_{self.n}({','.join(map(str, self.chords))})"


def pm(x: int, y: int, n: int) -> bool:
    """``x = +-y (mod n)``."""
    return x % n in {y % n, -y % n}


# cycle powers ----------------------------------------------------------------------


def cycle_power_is_et(n: int, k: int) -> bool:
    """Closed-form criterion for ``C_n^k``.

    ``k = 1`` is the cycle itself. The triangle count that separates the
    chord-1 edges from the chord-k edges needs ``k >= 2``.
    """
    if n < 3 or k < 1:
        raise GraphError("needs n >= 3 and k >= 1")
    return k == 1 or k >= n // 2 or (n % 2 == 0 and k == n // 2 - 1)


def triangles_through_edge(g: Graph, u: int, v: int) -> int:
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    return (g.rows[u] & g.rows[v]).bit_count()


# non edge-transitive family ----------------------------------------------------------


@dataclass(frozen=True)
class NonETCertificate:
    spec: CirculantSpec
    diameter_edge: tuple[int, int]  # lies in no triangle
    unit_edge: tuple[int, int]  # lies in at least one triangle
    diameter_triangles: int
    unit_triangles: int


def non_et_family_member(n: int, i: int, s_prime: Sequence[int] = ()) -> NonETCertificate:
    """``C_{2n}({1, i, i+1, n} + S')`` with ``i, i+1`` and ``S'`` inside ``{2, ..., ceil(n/2)-1}``.

    The certificate pairs the edge ``{0, n}`` (no common neighbour) with
    ``{0, 1}`` (in the triangle ``{0, 1, i+1}``).
    """
    if n < 5:
        raise GraphError("family needs n >= 5")
    top = math.ceil(n / 2) - 1
    allowed = set(range(2, top + 1))
    if i not in allowed or i + 1 not in allowed:
        raise GraphError(f"i and i+1 must lie in 2..{top}")
    if not set(s_prime) <= allowed:
        raise GraphError(f"S' must be a subset of 2..{top}")
    spec = CirculantSpec.normalized(2 * n, {1, i, i + 1, n} | set(s_prime))
    g = spec.graph()
    return NonETCertificate(
        spec, (0, n), (0, 1), triangles_through_edge(g, 0, n), triangles_through_edge(g, 0, 1)
    )


# explicit classes ----------------------------------------------------------------


def class_order(class_id: int, n: int) -> int:
    return {1: 16 * n + 4, 2: 16 * n + 12, 3: 6 * n + 6, 4: 3 * n + 6}[class_id]


def class_spec(class_id: int, n: int) -> CirculantSpec:
    if class_id not in (1, 2, 3, 4) or n < 1:
        raise GraphError("class id must be 1..4 and n >= 1")
    order = class_order(class_id, n)
    chords = {
        1: (1, 2 + 4 * n, 1 + 8 * n),
        2: (1, 2 + 4 * n, 5 + 8 * n),
        3: (1, 2 * n + 1, 2 * n + 3),
        4: (1, 1 + n, 3 + n),
    }[class_id]
    return CirculantSpec.normalized(order, chords)


def from_one_based(p: int, order: int) -> int:
    return (p - 1) % order


def to_one_based(v: int, order: int) -> int:
    return v + 1


def _residue_tables(class_id: int, n: int) -> tuple[int, dict[int, int], dict[int, int]]:
    """Period and the two maps on residues ``1..period`` in one-based labels."""
    if class_id == 1:
        phi1 = {1: 1, 2: 3 + 4 * n, 3: 12 * n + 6, 4: 4}
        phi2 = {1: 8 * n + 2, 2: 1, 3: 8 * n + 4, 4: 3}
        return 4, phi1, phi2
    if class_id == 2:
        phi1 = {1: 4 * n + 3, 2: 1, 3: 2, 4: 12 * n + 12}
        phi2 = {1: 8 * n + 6, 2: 1, 3: 8 * n + 8, 4: 3}
        return 4, phi1, phi2
    if class_id == 3:
        period = 2 * n + 2
        phi1 = {1: 2 * n + 2}
        phi1.update({i: i - 1 for i in range(2, period + 1)})
        phi2 = {1: 2 * n + 4, period: 1}
        phi2.update({i: i + 1 for i in range(2, period)})
        return period, phi1, phi2
    raise GraphError("explicit maps exist for classes 1-3 only")


def _extend_map(table: dict[int, int], period: int, order: int) -> Permutation:
    """``(i + period*k) -> table[i] + period*k (mod order)``, converted to 0-based."""
    image = [0] * order
    for k in range(order // period):
        for i, target in table.items():
            src = from_one_based(i + period * k, order)
            image[src] = from_one_based(target + period * k, order)
    return tuple(image)


@dataclass(frozen=True)
class ClassWitness:
    class_id: int
    n: int
    spec: CirculantSpec
    phi1: Permutation | None
    phi2: Permutation | None
    # designated edges, 0-based: phi1 sends edges[0] to edges[1], phi2 sends edges[2] to edges[3]
    edges: tuple[tuple[int, int], ...]
    wreath_isomorphism: Permutation | None = None


def _is_automorphism(g: Graph, p: Sequence[int]) -> bool:
    if sorted(p) != list(range(g.n)):
        return False
    return all(g.has_edge(p[u], p[v]) for u, v in g.edges())


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def class_witness(class_id: int, n: int) -> ClassWitness:
    """Transcribed maps for a class member, verified; class 4 gets a wreath isomorphism.

    Raises :class:`GraphError` when a map fails to be an automorphism or
    misses its designated edge: that signals a transcription error.
    """
    spec = class_spec(class_id, n)
    g = spec.graph()
    order = spec.n
    if class_id == 4:
        from .symmetry import is_isomorphic

        ok, w = is_isomorphic(g, wreath(n + 2, 3))
        if not ok:
            raise GraphError(f"class 4 member {spec} is not isomorphic to W({n + 2}, 3)")
        return ClassWitness(4, n, spec, None, None, (), w)
    period, t1, t2 = _residue_tables(class_id, n)
    phi1 = _extend_map(t1, period, order)
    phi2 = _extend_map(t2, period, order)

    def one(p: int) -> int:
        return from_one_based(p, order)

    if class_id == 1:
        designated = ((1, 2), (1, 3 + 4 * n), (1, 2), (1, 2 + 8 * n))
    elif class_id == 2:
        designated = ((1, 2), (1, 3 + 4 * n), (1, 2), (1, 6 + 8 * n))
    else:
        designated = ((1, 2), (1, 2 * n + 2), (1, 2 * n + 2), (1, 2 * n + 4))
    edges = tuple(_edge(one(a), one(b)) for a, b in designated)
    for name, phi in (("phi1", phi1), ("phi2", phi2)):
        if not _is_automorphism(g, phi):
            raise GraphError(f"class {class_id}, n={n}: {name} is not an automorphism of {spec}")
    if _edge(phi1[edges[0][0]], phi1[edges[0][1]]) != edges[1]:
        raise GraphError(f"class {class_id}, n={n}: phi1 misses its target edge")
    if _edge(phi2[edges[2][0]], phi2[edges[2][1]]) != edges[3]:
        raise GraphError(f"class {class_id}, n={n}: phi2 misses its target edge")
    return ClassWitness(class_id, n, spec, phi1, phi2, edges)


# 4-regular and 6-regular conditions --------------------------------------------------------


class WilsonCase(enum.Enum):
    CASE1 = "Case1"
    CASE2 = "Case2"
    NOT_COVERED = "NotCovered"


def wilson_classify_4regular(n: int, a: int) -> WilsonCase:
    """Which form of the 4-regular classification ``C_n(1, a)`` has.

    ``CASE1``: ``a^2 = +-1 (mod n)``. ``CASE2``: ``n = 2m`` and
    ``a = +-(m+1)``. ``CASE1`` is reported when both hold.
    """
    spec = CirculantSpec.normalized(n, (1, a))
    if len(spec.chords) != 2 or spec.degree != 4:
        raise GraphError(f"C_{n}(1,{a}) is not 4-regular")
    if pm(a * a, 1, n):
        return WilsonCase.CASE1
    if n % 2 == 0 and pm(a, n // 2 + 1, n):
        return WilsonCase.CASE2
    return WilsonCase.NOT_COVERED


def wilson_candidates(n: int) -> list[CirculantSpec]:
    """Every 4-regular ``C_n(1, a)`` that falls under Case 1 or Case 2."""
    out = []
    for a in range(2, (n + 1) // 2):
        spec = CirculantSpec.normalized(n, (1, a))
        if spec.degree == 4 and len(spec.chords) == 2 and wilson_classify_4regular(n, a) != WilsonCase.NOT_COVERED:
            out.append(spec)
    return out


def onkey_conditions(n: int, a: int, b: int) -> tuple[bool, bool, bool]:
    """``(ab = +-1, a^2 = +-b, b^2 = +-a)`` modulo ``n`` for ``C_n(1, a, b)``."""
    spec = CirculantSpec.normalized(n, (1, a, b))
    if len(spec.chords) != 3 or spec.degree != 6:
        raise GraphError(f"C_{n}(1,{a},{b}) is not a 6-regular 3-circulant")
    return pm(a * b, 1, n), pm(a * a, b, n), pm(b * b, a, n)


@dataclass(frozen=True)
class CorollaryForm:
    form: str
    a: int
    d: int
    spec: CirculantSpec


def corollary_forms(a: int, d: int) -> list[CorollaryForm]:
    """Members ``C_{(a^3+-1)/d}(1, a, a^2)`` and ``C_{(a^2+a+1)/d}(1, a, a+1)``.

    Forms whose divisibility fails are skipped; a form whose chords do not
    reduce to three distinct chords of a 6-regular graph is dropped as
    degenerate. Raises when no form is divisible at all.
    """
    if d < 1 or a < 2:
        raise GraphError("needs a >= 2 and d >= 1")
    raw = [
        ("cube+1", a ** 3 + 1, (1, a, a * a)),
        ("cube-1", a ** 3 - 1, (1, a, a * a)),
        ("quadratic", a * a + a + 1, (1, a, a + 1)),
    ]
    divisible = [(name, num // d, chords) for name, num, chords in raw if num % d == 0]
    if not divisible:
        raise GraphError(f"{d} divides none of a^3+1, a^3-1, a^2+a+1 for a={a}")
    out = []
    for name, n, chords in divisible:
        if n < 7 or any(c % n == 0 for c in chords):
            continue
        spec = CirculantSpec.normalized(n, chords)
        if len(spec.chords) == 3 and spec.degree == 6:
            out.append(CorollaryForm(name, a, d, spec))
    return out


def group_of_units_et(n: int, chords: Sequence[int]) -> bool:
    """True when ``{+-l mod n}`` is a multiplicative group of units.

    That suffices for edge-transitivity; False means only "not decided here".
    """
    elems = {x % n for l in chords for x in (l, -l)}
    if any(math.gcd(x, n) != 1 for x in elems):
        return False
    return all(x * y % n in elems for x in elems for y in elems)


# scans ---------------------------------------------------------------------


@dataclass(frozen=True)
class ScanRecord:
    spec: CirculantSpec
    edge_transitive: bool
    conditions: tuple[bool, ...]


@dataclass(frozen=True)
class ScanReport:
    name: str
    limit: int
    examined: int
    edge_transitive: int
    counterexamples: tuple[ScanRecord, ...]
    oracle_confirmed: tuple[bool, ...]  # andersen check per counterexample
    per_n: tuple[tuple[int, int, int], ...] = ()  # (n, examined, edge-transitive)


def _guard(limit: int) -> None:
    if limit > SCAN_MAX_N:
        raise GraphError(f"scan limit {limit} exceeds guard {SCAN_MAX_N}")
    if limit < 3:
        raise GraphError("scan limit must be at least 3")


def _et(spec: CirculantSpec) -> bool:
    g = spec.graph()
    return is_edge_transitive(g)


def _finish(name: str, limit: int, tally: dict[int, list[int]], bad: list[ScanRecord]) -> ScanReport:
    confirmed = tuple(andersen_edge_transitive(r.spec.graph()) for r in bad)
    for r in bad:
        warnings.warn(f"{name}: counterexample {r.spec} conditions={r.conditions}", stacklevel=3)
    per_n = tuple((n, ex, et) for n, (ex, et) in sorted(tally.items()))
    examined = sum(ex for _, ex, _ in per_n)
    et_count = sum(et for _, _, et in per_n)
    return ScanReport(name, limit, examined, et_count, tuple(bad), confirmed, per_n)


def conjecture1_scan(limit: int) -> ScanReport:
    """Every edge-transitive ``C_n(1, a, b)``, ``n <= limit``, against the three congruences.

    Scans 6-regular specs ``1 < a < b < n/2``. A counterexample is an
    edge-transitive spec meeting none of ``ab``, ``a^2``, ``b^2 = +-1``.
    """
    _guard(limit)
    tally: dict[int, list[int]] = {}
    bad = []
    for n in range(7, limit + 1):
        t = tally.setdefault(n, [0, 0])
        for a, b in itertools.combinations(range(2, (n + 1) // 2), 2):
            spec = CirculantSpec(n, (1, a, b))
            t[0] += 1
            if not _et(spec):
                continue
            t[1] += 1
            conds = (pm(a * b, 1, n), pm(a * a, 1, n), pm(b * b, 1, n))
            if not any(conds):
                bad.append(ScanRecord(spec, True, conds))
    return _finish("conjecture1", limit, tally, bad)


def conjecture2_scan(
    limit: int, max_chords: int = 4, min_chords: int = 3, include_diameter: bool = False
) -> ScanReport:
    """Edge-transitive ``C_n(1, a_2, ..., a_m)`` with ``min_chords <= m <= max_chords``.

    A counterexample has no pair ``a_i a_j = +-1`` with ``i, j >= 2``
    (``i = j`` allowed). By default chords stay below ``n/2``, so every
    scanned graph is ``2m``-regular, the same domain as
    :func:`conjecture1_scan`. Two choices widen it. ``include_diameter``
    admits the chord ``n/2``, which flags ``C_6(1,2,3) = K_6``.
    ``min_chords=2`` admits the Wilson Case 2 graphs such as ``C_10(1,4)``.
    """
    _guard(limit)
    if min_chords < 2:
        raise GraphError("the statement concerns at least two chords")
    tally: dict[int, list[int]] = {}
    bad = []
    for n in range(4, limit + 1):
        t = tally.setdefault(n, [0, 0])
        top = n // 2 if include_diameter else (n - 1) // 2
        others = range(2, top + 1)
        for m in range(min_chords, max_chords + 1):
            for rest in itertools.combinations(others, m - 1):
                spec = CirculantSpec(n, (1,) + rest)
                t[0] += 1
                if not _et(spec):
                    continue
                t[1] += 1
                hit = any(pm(x * y, 1, n) for x, y in itertools.combinations_with_replacement(rest, 2))
                if not hit:
                    bad.append(ScanRecord(spec, True, (hit,)))
    return _finish("conjecture2", limit, tally, bad)


@dataclass(frozen=True)
class SoundnessReport:
    examined: int
    onkey_all_true: int
    units_true: int
    violations: tuple[CirculantSpec, ...]


def sufficient_condition_soundness(limit: int) -> SoundnessReport:
    """Every 3-chord circulant with ``n <= limit``: all-true Onkey flags or a
    unit group must imply edge-transitivity."""
    _guard(limit)
    examined = onkey_hits = unit_hits = 0
    bad = []
    for n in range(6, limit + 1):
        for chords in itertools.combinations(range(1, n // 2 + 1), 3):
            spec = CirculantSpec(n, chords)
            examined += 1
            onkey = False
            if chords[0] == 1 and spec.degree == 6:
                onkey = all(onkey_conditions(n, chords[1], chords[2]))
            units = group_of_units_et(n, chords)
            onkey_hits += onkey
            unit_hits += units
            if (onkey or units) and not _et(spec):
                bad.append(spec)
    return SoundnessReport(examined, onkey_hits, unit_hits, tuple(bad))


@dataclass(frozen=True)
class WilsonReport:
    n: int
    et_classes: frozenset[Graph]
    candidate_classes: frozenset[Graph]
    candidates_not_et: tuple[CirculantSpec, ...]

    @property
    def agrees(self) -> bool:
        return self.et_classes == self.candidate_classes


def wilson_scan(n: int) -> WilsonReport:
    """Connected 4-regular ``C_n(a, b)`` that are edge-transitive versus the candidates, up to isomorphism."""
    et = set()
    for a, b in itertools.combinations(range(1, (n + 1) // 2), 2):
        g = circulant(n, [a, b])
        if is_connected(g) and is_edge_transitive(g):
            et.add(search(g).canonical)
    cands = set()
    not_et = []
    for spec in wilson_candidates(n):
        g = spec.graph()
        cands.add(search(g).canonical)
        if not is_edge_transitive(g):
            not_et.append(spec)
    return WilsonReport(n, frozenset(et), frozenset(cands), tuple(not_et))


def cycle_power_agreement(limit: int) -> list[tuple[int, int]]:
    """Pairs ``(n, k)`` where the closed form and the orbit computation disagree."""
    bad = []
    for n in range(3, limit + 1):
        for k in range(1, n // 2 + 1):
            if cycle_power_is_et(n, k) != is_edge_transitive(cycle_power(n, k)):
                bad.append((n, k))
    return bad


def section_conditions(spec: CirculantSpec) -> dict[str, object]:
    """Which circulant conditions hold for ``spec``; used by the analyze report."""
    out: dict[str, object] = {"group_of_units": group_of_units_et(spec.n, spec.chords)}
    ch = spec.chords
    if len(ch) == 2 and ch[0] == 1 and spec.degree == 4:
        out["wilson"] = wilson_classify_4regular(spec.n, ch[1]).value
    if len(ch) == 3 and ch[0] == 1 and spec.degree == 6:
        out["onkey"] = onkey_conditions(spec.n, ch[1], ch[2])
    if ch == tuple(range(1, len(ch) + 1)):
        out["cycle_power_et"] = cycle_power_is_et(spec.n, len(ch))
    return out

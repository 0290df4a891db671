"""Command-line front end: ``etgraph <subcommand> ...``.

Data lines are deterministic; errors go to stderr as one line starting
with ``error: <kind>:`` and the exit status is nonzero. ``--machine``
switches to tab-separated ``key=value`` records carrying the same counts
and graph6 strings as the human tables.
"""

from __future__ import annotations

import argparse
import inspect
import os
import sys
import warnings
from typing import Callable, Sequence, TextIO

from . import appendix as appendix_mod
from . import biregular, census, circulant, families, plotting
from .graph import (
    Graph,
    Graph6Error,
    GraphError,
    bipartition,
    from_edge_list,
    from_graph6,
    is_biregular,
    is_connected,
    to_edge_list,
    to_graph6,
)
from .symmetry import automorphism_group, edge_orbits, vertex_orbits

EXIT_OK = 0
EXIT_FAIL = 1  # verification mismatch or counterexample
EXIT_ERROR = 2  # bad input or usage


class CliError(Exception):
    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


class Output:
    """Human tables or machine records, written to one stream."""

    def __init__(self, stream: TextIO, machine: bool):
        self.stream = stream
        self.machine = machine

    def line(self, text: str = "") -> None:
        self.stream.write(text + "\n")

    def record(self, kind: str, **fields: object) -> None:
        parts = [kind] + [f"{k}={_fmt(v)}" for k, v in fields.items()]
        self.line("\t".join(parts))

    def pair(self, key: str, value: object) -> None:
        if self.machine:
            self.record("field", key=key, value=value)
        else:
            self.line(f"{key + ':':<22}{_fmt(value)}")


def _fmt(v: object) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return "-"
    if isinstance(v, (tuple, list)):
        return ",".join(_fmt(x) for x in v)
    return str(v)


# input ---------------------------------------------------------------------------


def read_graphs(text: str, fmt: str | None) -> list[Graph]:
    """Parse graph6 lines or one edge list; ``fmt=None`` guesses from the first line."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise CliError("input", "no graph in input")
    if fmt is None:
        first = lines[0].split("#", 1)[0].split()
        fmt = "edges" if len(first) >= 2 and all(t.lstrip("-").isdigit() for t in first[:2]) else "graph6"
    if fmt == "edges":
        return [from_edge_list(text)]
    out = []
    offset = 0
    for raw in text.splitlines(keepends=True):
        s = raw.strip()
        if s:
            try:
                out.append(from_graph6(s))
            except Graph6Error as exc:
                raise Graph6Error(str(exc).rsplit(" (byte offset", 1)[0], offset + raw.index(s) + exc.offset) from None
        offset += len(raw.encode("utf-8"))
    return out


def _read_input(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError("input", f"cannot read {path}: {exc.strerror}") from None


def _write_graph(out: Output, g: Graph, fmt: str) -> None:
    if fmt == "edges":
        out.stream.write(to_edge_list(g))
        if not to_edge_list(g).endswith("\n"):
            out.line()
    else:
        out.line(to_graph6(g))


# analyze ---------------------------------------------------------------------------


def _analyze_one(out: Output, g: Graph, spec: circulant.CirculantSpec | None) -> None:
    group = automorphism_group(g)
    vorb = vertex_orbits(g, group)
    eorb = edge_orbits(g, group)
    bip = bipartition(g) if is_connected(g) else None
    bireg = is_biregular(g) if bip is not None else None
    rows: list[tuple[str, object]] = [
        ("graph6", to_graph6(g)),
        ("vertices", g.n),
        ("edges", g.m),
        ("connected", is_connected(g)),
        ("bipartite", bip is not None),
        ("biregular degrees", bireg),
        ("automorphisms", group.order),
        ("vertex orbits", len(vorb)),
        ("edge orbits", len(eorb)),
        ("vertex-transitive", len(vorb) == 1),
        ("edge-transitive", len(eorb) <= 1),
    ]
    if bip is not None:
        rows.insert(5, ("bipartition sizes", (len(bip.left), len(bip.right))))
    if spec is not None:
        rows.insert(0, ("circulant", str(spec)))
        for key, value in circulant.section_conditions(spec).items():
            rows.append((key.replace("_", " "), value))
    if out.machine:
        out.record("graph", **{k.replace(" ", "_"): v for k, v in rows})
    else:
        for k, v in rows:
            out.pair(k, v)


def cmd_analyze(args: argparse.Namespace, out: Output) -> int:
    if args.circulant:
        n, chords = _parse_circulant(args.circulant)
        spec = circulant.CirculantSpec.normalized(n, chords)
        _analyze_one(out, spec.graph(), spec)
        return EXIT_OK
    graphs = read_graphs(_read_input(args.input), args.format)
    for i, g in enumerate(graphs):
        if i and not out.machine:
            out.line()
        _analyze_one(out, g, None)
    return EXIT_OK


def _parse_circulant(tokens: Sequence[str]) -> tuple[int, list[int]]:
    try:
        nums = [int(x) for tok in tokens for x in tok.replace(",", " ").split()]
    except ValueError:
        raise CliError("usage", "circulant needs integers: N CHORD [CHORD ...]") from None
    if len(nums) < 2:
        raise CliError("usage", "circulant needs N and at least one chord")
    return nums[0], nums[1:]


# generate --------------------------------------------------------------------------


def _int_args(name: str, params: Sequence[str], count: int | None = None) -> list[int]:
    try:
        vals = [int(p) for p in params]
    except ValueError:
        raise CliError("usage", f"{name} takes integer parameters") from None
    if count is not None and len(vals) != count:
        raise CliError("usage", f"{name} takes {count} integer parameter(s), got {len(vals)}")
    return vals


def _gen_family(name: str) -> Callable[[Sequence[str]], list[Graph]]:
    fn = families.GENERATORS[name]
    arity = len(inspect.signature(fn).parameters)

    def run(params: Sequence[str]) -> list[Graph]:
        return [fn(*_int_args(name, params, arity))]

    return run


def _usage(name: str) -> str:
    return " ".join(p.upper() for p in inspect.signature(families.GENERATORS[name]).parameters)


def _gen_circulant(params: Sequence[str]) -> list[Graph]:
    n, chords = _parse_circulant(params)
    return [circulant.CirculantSpec.normalized(n, chords).graph()]


def _gen_class(params: Sequence[str]) -> list[Graph]:
    c, n = _int_args("class", params, 2)
    return [circulant.class_spec(c, n).graph()]


def _gen_fixture(params: Sequence[str]) -> list[Graph]:
    if len(params) != 1:
        raise CliError("usage", "fixture takes one name; see 'generate --list'")
    return [families.load_fixture(params[0])]


def _gen_search(params: Sequence[str]) -> list[Graph]:
    m, n, r, s = _int_args("biregular-search", params, 4)
    return [h.graph for h in biregular.exhaustive_et_search(m, n, r, s)]


GENERATE: dict[str, tuple[str, Callable[[Sequence[str]], list[Graph]]]] = {
    name: (_usage(name), _gen_family(name)) for name in families.GENERATORS
}
GENERATE.update({
    "complete-multipartite": ("SIZE SIZE ...",
                              lambda p: [families.complete_multipartite(_int_args("complete-multipartite", p))]),
    "petersen": ("", lambda p: [families.petersen()]),
    "circulant": ("N CHORD [CHORD ...]", _gen_circulant),
    "class": ("CLASS N  (classes 1-4)", _gen_class),
    "ring-construction": ("M R", lambda p: [biregular.ring_construction(*_int_args("ring-construction", p, 2))]),
    "nontrivial-subgraph": ("M N", lambda p: [biregular.nontrivial_et_subgraph(*_int_args("nontrivial-subgraph", p, 2))]),
    "k4n": ("N", lambda p: [biregular.k4n_et_subgraph(*_int_args("k4n", p, 1))]),
    "biregular-search": ("M N R S  (all ET hits)", _gen_search),
    "fixture": ("NAME", _gen_fixture),
})


def cmd_generate(args: argparse.Namespace, out: Output) -> int:
    if args.list or not args.family:
        for name in sorted(GENERATE):
            out.line(f"{name:30s}{GENERATE[name][0]}")
        if args.list:
            out.line()
            for name in sorted(families.fixture_catalog()):
                out.line(f"fixture {name}")
        return EXIT_OK
    if args.family not in GENERATE:
        raise CliError("usage", f"unknown family {args.family!r}; see 'generate --list'")
    graphs = GENERATE[args.family][1](args.params)
    for g in graphs:
        _write_graph(out, g, args.format or "graph6")
    return EXIT_OK


# census / appendix / scan ------------------------------------------------------------


def cmd_census(args: argparse.Namespace, out: Output) -> int:
    report = census.census_edge_transitive(args.n, slow=args.slow, threads=args.threads)
    known = census.oeis_counts().get(args.n)
    if out.machine:
        out.record("census", n=report.n, inspected=report.inspected, count=report.count, tabulated=known)
        for e in report.entries:
            out.record("graph", graph6=e.graph6, m=e.m, vertex_transitive=e.vertex_transitive,
                       bipartite=e.bipartite, biregular=e.biregular, family=e.family)
    else:
        out.line(f"{report.count} edge-transitive connected graphs on {report.n} vertices")
        out.line(f"candidates inspected: {report.inspected}")
        if known is not None:
            out.line(f"tabulated count: {known}")
        out.line()
        out.line(f"{'graph6':<24}{'m':>5}  {'VT':<4}{'bip':<5}{'degrees':<9}family")
        for e in report.entries:
            out.line(f"{e.graph6:<24}{e.m:>5}  {_fmt(e.vertex_transitive):<4}{_fmt(e.bipartite):<5}"
                     f"{_fmt(e.biregular):<9}{_fmt(e.family)}")
    if args.figure:
        plotting.census_figure(report, args.figure)
    return EXIT_OK if known is None or known == report.count else EXIT_FAIL


def cmd_verify_appendix(args: argparse.Namespace, out: Output) -> int:
    if args.n == "all":
        ns = list(range(appendix_mod.FIRST_N, appendix_mod.LAST_N + 1))
    else:
        ns = _int_args("verify-appendix", [args.n], 1)
        if not appendix_mod.FIRST_N <= ns[0] <= appendix_mod.LAST_N:
            raise CliError("usage", f"tables cover n = {appendix_mod.FIRST_N}..{appendix_mod.LAST_N} or 'all'")
    status = EXIT_OK
    for n in ns:
        report = appendix_mod.verify_appendix(n)
        if not report.ok:
            status = EXIT_FAIL
        if out.machine:
            out.record("appendix", n=n, rows=len(report.checks), distinct=report.distinct,
                       expected=report.expected, ok=report.ok)
            for c in report.checks:
                out.record("row", n=n, e=c.row.e, label=c.row.label, source=c.row.source,
                           ok=c.ok, problems="; ".join(c.problems) or None)
        else:
            out.line(f"n={n}: {report.distinct} distinct graphs, {report.expected} tabulated"
                     f" -> {'all rows pass' if report.ok else 'MISMATCH'}")
            for c in report.checks:
                mark = "ok" if c.ok else "FAIL " + "; ".join(c.problems)
                out.line(f"  e={c.row.e:<4} {c.row.label:<58} {c.row.source:<9} {mark}")
        for a, b in report.duplicates:
            if out.machine:
                out.record("duplicate", n=n, first=a, second=b)
            else:
                out.line(f"  duplicate: {a} ~ {b}")
        if args.figure:
            path = args.figure if len(ns) == 1 else _numbered(args.figure, n)
            plotting.appendix_figure(report, path)
    return status


def _numbered(path: str, n: int) -> str:
    root, ext = os.path.splitext(path)
    return f"{root}-{n}{ext or '.png'}"


SCANS = ("conjecture1", "conjecture2", "soundness", "wilson", "cycle-power")


def cmd_scan(args: argparse.Namespace, out: Output) -> int:
    limit = args.limit
    if args.which in ("conjecture1", "conjecture2"):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            if args.which == "conjecture1":
                report = circulant.conjecture1_scan(limit)
            else:
                report = circulant.conjecture2_scan(limit, include_diameter=args.include_diameter)
        bad = len(report.counterexamples)
        if out.machine:
            out.record("scan", name=report.name, limit=limit, examined=report.examined,
                       edge_transitive=report.edge_transitive, counterexamples=bad)
            for rec, ok in zip(report.counterexamples, report.oracle_confirmed):
                out.record("counterexample", spec=str(rec.spec), oracle_confirms_et=ok)
        else:
            out.line(f"{report.name} up to n={limit}: {report.examined} specs, "
                     f"{report.edge_transitive} edge-transitive, {bad} counterexamples")
            for rec, ok in zip(report.counterexamples, report.oracle_confirmed):
                out.line(f"  {rec.spec}  (second oracle {'agrees' if ok else 'DISAGREES'})")
        if args.figure:
            plotting.scan_figure(report, args.figure)
        return EXIT_OK if bad == 0 else EXIT_FAIL
    if args.figure:
        raise CliError("usage", f"--figure is available for the conjecture scans, not {args.which}")
    if args.which == "soundness":
        r = circulant.sufficient_condition_soundness(limit)
        fields = dict(examined=r.examined, onkey=r.onkey_all_true, units=r.units_true, violations=len(r.violations))
        ok = not r.violations
    elif args.which == "wilson":
        bad_n = [n for n in range(5, limit + 1) if not _wilson_ok(n)]
        fields = dict(orders=limit - 4, disagreements=len(bad_n), at=bad_n or None)
        ok = not bad_n
    else:
        bad_pairs = circulant.cycle_power_agreement(limit)
        fields = dict(disagreements=len(bad_pairs), at=[f"{n}^{k}" for n, k in bad_pairs] or None)
        ok = not bad_pairs
    if out.machine:
        out.record("scan", name=args.which, limit=limit, **fields)
    else:
        out.line(f"{args.which} up to n={limit}: " + ", ".join(f"{k} {_fmt(v)}" for k, v in fields.items()))
    return EXIT_OK if ok else EXIT_FAIL


def _wilson_ok(n: int) -> bool:
    r = circulant.wilson_scan(n)
    return r.agrees and not r.candidates_not_et


# parser ----------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    """Report parse failures through the one-line error convention."""

    def error(self, message: str):
        raise CliError("usage", f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--output", "-o", metavar="FILE", help="write data lines to FILE instead of stdout")
    common.add_argument("--machine", action="store_true", help="tab-separated key=value records")

    p = _Parser(prog="etgraph", description="Edge-transitive graph toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="symmetry report for a graph")
    a.add_argument("input", nargs="?", help="graph6 or edge-list file; '-' or omitted for stdin")
    a.add_argument("--format", choices=("graph6", "edges"), help="input format (default: detect)")
    a.add_argument("--circulant", nargs="+", metavar="N_OR_CHORD", help="analyze C_N(chords) instead of input")
    a.set_defaults(func=cmd_analyze)

    g = sub.add_parser("generate", parents=[common], help="emit a family member")
    g.add_argument("family", nargs="?")
    g.add_argument("params", nargs="*")
    g.add_argument("--format", choices=("graph6", "edges"))
    g.add_argument("--list", action="store_true", help="list families and fixtures")
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("census", parents=[common], help="edge-transitive graphs on N vertices by enumeration")
    c.add_argument("n", type=int)
    c.add_argument("--slow", action="store_true", help=f"allow n = {census.MAX_N}")
    c.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    c.add_argument("--figure", metavar="FILE", help="also save an edge-count histogram")
    c.set_defaults(func=cmd_census)

    v = sub.add_parser("verify-appendix", parents=[common], help="check the tabulated graphs for N (or 'all')")
    v.add_argument("n")
    v.add_argument("--figure", metavar="FILE")
    v.set_defaults(func=cmd_verify_appendix)

    s = sub.add_parser("scan", parents=[common], help="circulant scans: " + ", ".join(SCANS))
    s.add_argument("which", choices=SCANS)
    s.add_argument("limit", type=int)
    s.add_argument("--include-diameter", action="store_true", help="conjecture2: admit the chord n/2")
    s.add_argument("--figure", metavar="FILE")
    s.set_defaults(func=cmd_scan)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except CliError as exc:
        _error(exc.kind, str(exc))
        return EXIT_ERROR
    if getattr(args, "threads", 1) < 1:
        _error("usage", "--threads must be at least 1")
        return EXIT_ERROR
    stream = sys.stdout
    try:
        if args.output:
            stream = open(args.output, "w", encoding="utf-8")
    except OSError as exc:
        _error("output", f"cannot open {args.output}: {exc.strerror}")
        return EXIT_ERROR
    try:
        return args.func(args, Output(stream, args.machine))
    except CliError as exc:
        _error(exc.kind, str(exc))
    except Graph6Error as exc:
        _error("input", str(exc))
    except GraphError as exc:
        _error("precondition", str(exc))
    finally:
        if stream is not sys.stdout:
            stream.close()
    return EXIT_ERROR


def _error(kind: str, message: str) -> None:
    sys.stderr.write(f"error: {kind}: {message}\n")

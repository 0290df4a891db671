"""Figures written next to the CLI reports.

Everything renders through an Agg canvas on a private Figure, so no global
pyplot state is touched and no display is needed.
"""

from __future__ import annotations

from collections import Counter
from pathlib import Path
from typing import TYPE_CHECKING

from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

if TYPE_CHECKING:
    from .appendix import AppendixReport
    from .census import CensusReport
    from .circulant import ScanReport

FIGSIZE = (7.0, 3.6)


def _new_axes(title: str):
    fig = Figure(figsize=FIGSIZE, layout="constrained")
    FigureCanvasAgg(fig)
    ax = fig.add_subplot()
    ax.set_title(title, fontsize=11)
    ax.spines[["top", "right"]].set_visible(False)
    return fig, ax


def _save(fig: Figure, path: str | Path) -> Path:
    path = Path(path)
    fig.savefig(path, dpi=120)
    return path


def _edge_bars(ax, edge_counts: list[int], colors: list[str] | None = None) -> None:
    tally = Counter(edge_counts)
    xs = sorted(tally)
    ax.bar([str(x) for x in xs], [tally[x] for x in xs], color=colors or "tab:blue")
    ax.set_xlabel("edges")
    ax.set_ylabel("graphs")
    ax.tick_params(axis="x", labelrotation=60, labelsize=8)


def census_figure(report: CensusReport, path: str | Path) -> Path:
    """Edge-count histogram of the edge-transitive graphs found."""
    fig, ax = _new_axes(f"connected edge-transitive graphs on {report.n} vertices ({report.count})")
    _edge_bars(ax, [e.m for e in report.entries])
    return _save(fig, path)


def appendix_figure(report: AppendixReport, path: str | Path) -> Path:
    """Rows per edge count, failing rows in red."""
    fig, ax = _new_axes(f"tabulated graphs on {report.n} vertices: {report.distinct} of {report.expected} verified")
    good = Counter(c.row.e for c in report.checks if c.ok)
    bad = Counter(c.row.e for c in report.checks if not c.ok)
    xs = sorted(set(good) | set(bad))
    labels = [str(x) for x in xs]
    ax.bar(labels, [good[x] for x in xs], color="tab:blue", label="verified")
    ax.bar(labels, [bad[x] for x in xs], bottom=[good[x] for x in xs], color="tab:red", label="failed")
    ax.set_xlabel("edges")
    ax.set_ylabel("rows")
    ax.tick_params(axis="x", labelrotation=60, labelsize=8)
    if bad:
        ax.legend(frameon=False)
    return _save(fig, path)


def scan_figure(report: ScanReport, path: str | Path) -> Path:
    """Edge-transitive specs per order, counterexample orders marked."""
    fig, ax = _new_axes(f"{report.name}: edge-transitive specs per n (n <= {report.limit})")
    ns = [n for n, _, _ in report.per_n]
    ax.bar(ns, [et for _, _, et in report.per_n], color="tab:blue")
    for rec in report.counterexamples:
        ax.axvline(rec.spec.n, color="tab:red", linewidth=1)
    ax.set_xlabel("n")
    ax.set_ylabel("edge-transitive specs")
    return _save(fig, path)

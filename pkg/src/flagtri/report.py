"""Invariant reports over collections of complexes.

A report is a list of per-complex rows (face counts, flagness, manifold
status, Betti numbers, gamma invariants, conjecture slack) rendered three
ways: an aligned text table, a CSV file, and PNG figures written next to the
CSV.  The figures show gamma2 against beta1 with the 16 beta1 line for the
rows that are flag closed 3-manifolds, and the vertex-count distribution of
all rows.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .complexes import as_simplicial  # noqa: E402
from .topology import (Field, betti, classify_surface, gamma_numbers,  # noqa: E402
                       is_closed_3_manifold, is_closed_surface)


@dataclass(frozen=True)
class ReportRow:
    name: str
    dim: int
    f: tuple  # (f0, f1, ...)
    flag: bool
    manifold: str  # human-readable status
    betti: tuple | None
    gamma1: int | None
    gamma2: int | None
    beta1: int | None  # only for flag closed 3-manifolds
    slack: int | None  # gamma2 - 16 beta1

    @property
    def conjecture_point(self) -> bool:
        return self.beta1 is not None


def report_row(name: str, c) -> ReportRow:
    sc = as_simplicial(c)
    flag = bool(sc.is_flag())
    fv = sc.f_vector()[1:]
    manifold = "no"
    beta1 = slack = None
    if sc.dim == 2:
        res = is_closed_surface(sc)
        if res:
            manifold = f"closed surface ({classify_surface(sc).label()})"
    elif sc.dim == 3:
        res = is_closed_3_manifold(sc)
        if res:
            manifold = "closed 3-manifold"
    b = betti(sc, Field.RATIONAL)
    gamma = gamma_numbers(sc) if sc.is_pure() else None
    if flag and manifold == "closed 3-manifold":
        beta1 = b[1]
        slack = gamma.gamma2 - 16 * beta1
    return ReportRow(
        name=name, dim=sc.dim, f=fv, flag=flag, manifold=manifold,
        betti=b.ranks, gamma1=gamma.gamma1 if gamma else None,
        gamma2=gamma.gamma2 if gamma else None, beta1=beta1, slack=slack)


_COLUMNS = ("name", "dim", "f0", "f1", "f2", "f3", "flag", "manifold",
            "betti", "gamma1", "gamma2", "beta1", "slack")


def _cells(row: ReportRow) -> list:
    f = list(row.f) + [None] * (4 - len(row.f))
    return [
        row.name, row.dim, f[0], f[1], f[2], f[3],
        "yes" if row.flag else "no", row.manifold,
        "" if row.betti is None else ",".join(map(str, row.betti)),
        row.gamma1, row.gamma2, row.beta1, row.slack,
    ]


def render_table(rows) -> str:
    table = [list(_COLUMNS)]
    for row in rows:
        table.append(["" if c is None else str(c) for c in _cells(row)])
    widths = [max(len(r[i]) for r in table) for i in range(len(_COLUMNS))]
    lines = []
    for i, r in enumerate(table):
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
        if i == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)


def write_csv(rows, path) -> Path:
    path = Path(path)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(_COLUMNS)
        for row in rows:
            writer.writerow(["" if c is None else c for c in _cells(row)])
    return path


def write_figures(rows, out_dir, stem: str = "report") -> list:
    """Render the report figures as PNG files and return their paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []

    points = [(r.beta1, r.gamma2, r.name) for r in rows if r.conjecture_point]
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    if points:
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        ax.scatter(xs, ys, zorder=3)
        for x, y, name in points:
            ax.annotate(name, (x, y), textcoords="offset points",
                        xytext=(4, 4), fontsize=8)
        hi = max(max(xs), 1)
    else:
        hi = 1
    line_x = [0, hi * 1.1 + 0.1]
    ax.plot(line_x, [16 * x for x in line_x], color="tab:red",
            label="gamma2 = 16 beta1")
    ax.set_xlabel("beta1")
    ax.set_ylabel("gamma2")
    ax.set_title("gamma2 against beta1 (flag closed 3-manifolds)")
    ax.legend()
    ax.grid(True, alpha=0.3)
    p = out_dir / f"{stem}_gamma2_beta1.png"
    fig.savefig(p, dpi=150, bbox_inches="tight")
    plt.close(fig)
    written.append(p)

    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    counts = {}
    for r in rows:
        counts[r.f[0]] = counts.get(r.f[0], 0) + 1
    if counts:
        xs = sorted(counts)
        ax.bar(xs, [counts[x] for x in xs], color="tab:blue")
        ax.set_xticks(xs)
    ax.set_xlabel("vertex count")
    ax.set_ylabel("complexes")
    ax.set_title("vertex-count distribution")
    p = out_dir / f"{stem}_vertices.png"
    fig.savefig(p, dpi=150, bbox_inches="tight")
    plt.close(fig)
    written.append(p)
    return written


@dataclass(frozen=True)
class ReportBundle:
    rows: tuple
    csv_path: Path
    figure_paths: tuple


def build_report(named_complexes, out_dir, stem: str = "report") -> ReportBundle:
    """Compute rows for (name, complex) pairs and write CSV plus figures."""
    rows = [report_row(name, c) for name, c in named_complexes]
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = write_csv(rows, out_dir / f"{stem}.csv")
    figures = write_figures(rows, out_dir, stem)
    return ReportBundle(tuple(rows), csv_path, tuple(figures))

"""Tabulated invariants, CSV output, and the rendered figures."""

import csv

from flagtri import fixture, gamma_tight, octahedral_sphere
from flagtri.report import build_report, render_table, report_row


class TestRows:
    def test_three_manifold_row(self):
        row = report_row("tight1", gamma_tight(1))
        assert row.dim == 3
        assert row.flag
        assert row.manifold == "closed 3-manifold"
        assert (row.gamma2, row.beta1, row.slack) == (16, 1, 0)
        assert row.conjecture_point

    def test_surface_row_has_no_conjecture_point(self):
        row = report_row("torus", fixture("torus_12"))
        assert row.manifold.startswith("closed surface")
        assert row.beta1 is None and row.slack is None
        assert not row.conjecture_point
        assert (row.gamma1, row.gamma2) == (6, 6)

    def test_non_manifold_row(self):
        from flagtri import cycle
        row = report_row("circle", cycle(5))
        assert row.manifold == "no"
        assert row.betti == (1, 1)


class TestRendering:
    def test_table_alignment(self):
        rows = [report_row("torus", fixture("torus_12")),
                report_row("oct4", octahedral_sphere(4))]
        text = render_table(rows)
        lines = text.splitlines()
        assert lines[0].split()[:2] == ["name", "dim"]
        assert set(lines[1]) <= {"-", " "}
        assert len({len(l) for l in lines[:2]}) == 1

    def test_bundle_outputs(self, tmp_path):
        named = [("torus", fixture("torus_12")),
                 ("tight1", gamma_tight(1)),
                 ("oct4", octahedral_sphere(4))]
        bundle = build_report(named, tmp_path, "inv")
        assert bundle.csv_path == tmp_path / "inv.csv"
        with open(bundle.csv_path, newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert [r["name"] for r in rows] == ["torus", "tight1", "oct4"]
        assert rows[1]["slack"] == "0"
        assert rows[0]["f0"] == "12"
        names = {p.name for p in bundle.figure_paths}
        assert names == {"inv_gamma2_beta1.png", "inv_vertices.png"}
        for p in bundle.figure_paths:
            assert p.stat().st_size > 1000

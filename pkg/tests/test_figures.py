import csv
import io
import xml.etree.ElementTree as ET

import pytest

from tropgreen.core import NEG_INF as N
from tropgreen.core import Flavor
from tropgreen.figures import figure_data, to_csv, to_svg
from tropgreen.fixtures import A61, A62, A63, B61, B62
from tropgreen.linalg import ChartUndefined, TropMatrix


@pytest.mark.parametrize("m,space,want", [
    (A61, "cols", {(0, 0), (1, -1), (2, -2), (3, -3)}),
    (B61, "cols", {(0, 0), (1, -2), (3, -3)}),
    (A63, "rows", {(0, 0), (1, 5), (3, 2)}),
    (A63, "cols", {(0, 0), (1, 3), (5, 2)}),
    (A62, "cols", {(N, N), (0, N), (1, 1)}),
    (B62, "cols", {(N, N), (0, N), (1, 1), (1, 0)}),
])
def test_figure_vertices(m, space, want):
    assert set(figure_data(m, space).vertices) == want


def test_single_generator_space():
    m = TropMatrix.of([[0, 1], [0, 1]], Flavor.FT)
    fig = figure_data(m, "rows", samples=5)
    assert len(fig.vertices) == 1
    assert all(s == fig.vertices[0] for s in fig.samples)


def test_samples_are_reproducible():
    one = figure_data(B61, "cols", samples=10, seed=3)
    two = figure_data(B61, "cols", samples=10, seed=3)
    assert one.samples == two.samples


def test_chart_override():
    fig = figure_data(A63, "rows", chart_coord=0)
    assert set(fig.vertices) == {(0, 0), (4, -1), (-1, -3)}
    with pytest.raises(ChartUndefined):
        figure_data(A62, "cols", chart_coord=0)


def test_csv_layout():
    rows = list(csv.reader(io.StringIO(to_csv(figure_data(B61, "cols", samples=2)))))
    assert rows[0] == ["kind", "index", "x1", "x2"]
    assert [r[0] for r in rows[1:]] == ["vertex"] * 3 + ["sample"] * 2


def test_svg_is_well_formed():
    svg = to_svg(figure_data(A62, "cols", samples=4))
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")
    texts = [t.text for t in root.iter() if t.tag.endswith("text")]
    assert "(1, 1)" in texts

"""Marching-squares curve extraction and SVG/CSV emission."""

import math

import numpy as np

from robinsq.contour import export_csv, export_svg, marching_squares, nodal_curves
from robinsq.nodal import ThetaFamily


def test_circle_contour():
    xs = np.linspace(-2.0, 2.0, 257)
    X, Y = np.meshgrid(xs, xs)
    Z = X * X + Y * Y - 1.0
    curves = marching_squares(Z, xs, xs)
    assert len(curves) == 1
    pts = curves[0]
    assert len(pts) > 100
    radii = [math.hypot(x, y) for x, y in pts]
    assert max(abs(r - 1.0) for r in radii) < 1e-3
    # closed curve: endpoints coincide
    assert math.hypot(pts[0][0] - pts[-1][0], pts[0][1] - pts[-1][1]) < 1e-6


def test_saddle_disambiguation():
    xs = np.linspace(-1.0, 1.0, 3)
    Z = np.array([[1.0, -1.0], [-1.0, 1.0]])
    # single ambiguous cell; center average decides the pairing
    curves = marching_squares(Z, xs[:2], xs[:2])
    assert len(curves) == 2


def test_nodal_curves_on_zero_set():
    fam = ThetaFamily.create(2, 3, 0.4, 0.0)
    curves = nodal_curves(fam, level=7)
    assert curves
    worst = 0.0
    for curve in curves:
        for x, y in curve:
            worst = max(worst, abs(float(fam.eval(x, y))))
    # linear interpolation error at level 7
    assert worst < 5e-3


def test_export_svg_deterministic(tmp_path):
    fam = ThetaFamily.create(0, 2, math.pi / 4, 0.0)
    curves = nodal_curves(fam, level=6)
    a = export_svg([("a", curves)])
    b = export_svg([("a", curves)], path=str(tmp_path / "c.svg"))
    assert a == b == (tmp_path / "c.svg").read_text()
    assert a.startswith('<?xml version="1.0"')
    assert 'width="1200" height="1200"' in a
    assert "<polyline" in a


def test_export_csv_shape():
    fam = ThetaFamily.create(1, 2, 0.9, 0.0)
    curves = nodal_curves(fam, level=6)
    text = export_csv([("t", curves)])
    lines = text.strip().splitlines()
    assert lines[0] == "label,curve_id,x,y"
    assert all(len(line.split(",")) == 4 for line in lines[1:])

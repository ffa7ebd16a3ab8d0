"""Nodal-line extraction (marching squares) and SVG / CSV export."""

from __future__ import annotations

import math

import numpy as np

from .nodal import ThetaFamily

__all__ = ["marching_squares", "nodal_curves", "export_svg", "export_csv"]

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _interp(p1, p2, v1, v2):
    d = v1 - v2
    if d == 0.0:
        return (0.5 * (p1[0] + p2[0]), 0.5 * (p1[1] + p2[1]))
    t = v1 / d
    return (p1[0] + t * (p2[0] - p1[0]), p1[1] + t * (p2[1] - p1[1]))


def marching_squares(Z: np.ndarray, xs: np.ndarray, ys: np.ndarray):
    """Zero-level polylines of a sampled scalar field.

    Classic 16-case marching squares with linear interpolation along cell
    edges; the two ambiguous saddle cases are disambiguated by the cell
    centre average.  Segments sharing endpoints (to 1e-9) are chained into
    polylines.  Exact zero samples are perturbed to the positive side, which
    only shifts curves by the masking tolerance.
    """
    ny, nx = Z.shape
    segments = []
    for i in range(ny - 1):
        for j in range(nx - 1):
            va = Z[i, j]
            vb = Z[i, j + 1]
            vc = Z[i + 1, j + 1]
            vd = Z[i + 1, j]
            corners = [va, vb, vc, vd]
            pos = [(v >= 0.0) for v in corners]
            idx = sum(1 << k for k, p in enumerate(pos) if p)
            if idx in (0, 15):
                continue
            pa = (xs[j], ys[i])
            pb = (xs[j + 1], ys[i])
            pc = (xs[j + 1], ys[i + 1])
            pd = (xs[j], ys[i + 1])
            e_top = _interp(pa, pb, va, vb)
            e_right = _interp(pb, pc, vb, vc)
            e_bottom = _interp(pd, pc, vd, vc)
            e_left = _interp(pa, pd, va, vd)
            if idx in (1, 14):
                segments.append((e_top, e_left))
            elif idx in (2, 13):
                segments.append((e_top, e_right))
            elif idx in (3, 12):
                segments.append((e_left, e_right))
            elif idx in (4, 11):
                segments.append((e_right, e_bottom))
            elif idx in (6, 9):
                segments.append((e_top, e_bottom))
            elif idx in (7, 8):
                segments.append((e_left, e_bottom))
            elif idx in (5, 10):
                center = 0.25 * (va + vb + vc + vd)
                if (center >= 0.0) == (idx == 5):
                    segments.append((e_top, e_right))
                    segments.append((e_left, e_bottom))
                else:
                    segments.append((e_top, e_left))
                    segments.append((e_right, e_bottom))
    return _chain(segments)


def _key(p):
    return (round(p[0], 9), round(p[1], 9))


def _chain(segments):
    adjacency: dict = {}
    for k, (a, b) in enumerate(segments):
        adjacency.setdefault(_key(a), []).append((k, True))
        adjacency.setdefault(_key(b), []).append((k, False))
    used = [False] * len(segments)
    curves = []
    for start in range(len(segments)):
        if used[start]:
            continue
        used[start] = True
        a, b = segments[start]
        path = [a, b]
        # extend forwards then backwards
        for forward in (True, False):
            while True:
                tip = _key(path[-1] if forward else path[0])
                nxt = None
                for k, is_head in adjacency.get(tip, ()):
                    if not used[k]:
                        nxt = (k, is_head)
                        break
                if nxt is None:
                    break
                k, is_head = nxt
                used[k] = True
                pa, pb = segments[k]
                point = pb if is_head else pa
                if forward:
                    path.append(point)
                else:
                    path.insert(0, point)
        curves.append(path)
    return curves


def nodal_curves(family: ThetaFamily, level: int = 8):
    """Marching-squares nodal polylines of one family member."""
    n = (1 << level) + 1
    xs = np.linspace(-math.pi / 2.0, math.pi / 2.0, n)
    Z = family.eval_grid(xs, xs)
    return marching_squares(Z, xs, xs)


def export_svg(curve_sets, path=None) -> str:
    """Render labelled curve sets into an SVG overlay of the square.

    ``curve_sets`` is a list of ``(label, curves)`` where ``curves`` comes
    from :func:`nodal_curves`.  Returns the SVG text; writes it when
    ``path`` is given.
    """
    half = math.pi / 2.0
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="1200" height="1200" '
        f'viewBox="{-half:.9f} {-half:.9f} {math.pi:.9f} {math.pi:.9f}">',
        f'<rect x="{-half:.9f}" y="{-half:.9f}" width="{math.pi:.9f}" '
        f'height="{math.pi:.9f}" fill="white" stroke="black" stroke-width="0.01"/>',
    ]
    for k, (label, curves) in enumerate(curve_sets):
        color = _PALETTE[k % len(_PALETTE)]
        lines.append(f'<g stroke="{color}" fill="none" stroke-width="0.012" id="{label}">')
        for curve in curves:
            pts = " ".join(f"{x:.6f},{-y:.6f}" for x, y in curve)
            lines.append(f'<polyline points="{pts}"/>')
        lines.append("</g>")
    lines.append("</svg>")
    text = "\n".join(lines) + "\n"
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


def export_csv(curve_sets, path=None) -> str:
    """Flat CSV of curve vertices: ``label,curve_id,x,y``."""
    lines = ["label,curve_id,x,y"]
    for label, curves in curve_sets:
        for cid, curve in enumerate(curves):
            for x, y in curve:
                lines.append(f"{label},{cid},{x:.15g},{y:.15g}")
    text = "\n".join(lines) + "\n"
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text

"""Deterministic SVG drawings of geometric graphs."""
from __future__ import annotations

import math
from typing import Sequence

from .geom_core import cross
from .geom_graph import GeometricGraph
from .stab_lines import Bipartition

_SIZE = 800.0
_MARGIN = 40.0


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def separating_line(G: GeometricGraph, b: Bipartition) -> tuple[tuple[float, float], tuple[float, float]] | None:
    """A line strictly separating the two sides of ``b``, as (point, direction).

    Starts from a directed pair whose line is tangent to both hulls and
    turns it slightly about the pair's midpoint until it separates.
    """
    P = G.base
    for A, B in ((b.side_a, b.side_b), (b.side_b, b.side_a)):
        for i in A:
            for j in B:
                if not all(cross(P[i], P[j], P[k]) > 0 for k in A if k != i):
                    continue
                if not all(cross(P[i], P[j], P[k]) < 0 for k in B if k != j):
                    continue
                mx, my = (P[i].x + P[j].x) / 2, (P[i].y + P[j].y) / 2
                dx, dy = P[j].x - P[i].x, P[j].y - P[i].y
                for step in range(2, 80):
                    ang = math.pi / 2 ** (step // 2) * (1 if step % 2 else -1)
                    c, s = math.cos(ang), math.sin(ang)
                    ux, uy = dx * c - dy * s, dx * s + dy * c
                    sides = [ux * (p.y - my) - uy * (p.x - mx) for p in P]
                    if all(sides[k] > 0 for k in A) and all(sides[k] < 0 for k in B):
                        return (mx, my), (ux, uy)
    return None


def render_svg(
    G: GeometricGraph,
    partition: Bipartition | None = None,
    labels: Sequence[str] | None = None,
) -> str:
    P = G.base
    if len(P):
        xs = [p.x for p in P]
        ys = [p.y for p in P]
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    else:
        x0 = y0 = 0
        x1 = y1 = 1
    span = max(x1 - x0, y1 - y0, 1)
    scale = (_SIZE - 2 * _MARGIN) / span

    def tx(x: float) -> float:
        return _MARGIN + (x - x0) * scale

    def ty(y: float) -> float:
        return _SIZE - _MARGIN - (y - y0) * scale  # y axis points up

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{int(_SIZE)}" '
        f'height="{int(_SIZE)}" viewBox="0 0 {int(_SIZE)} {int(_SIZE)}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    if partition is not None:
        line = separating_line(G, partition)
        if line is not None:
            (mx, my), (ux, uy) = line
            norm = math.hypot(ux, uy)
            far = 4 * span / norm
            out.append(
                f'<line class="stab" x1="{_fmt(tx(mx - ux * far))}" y1="{_fmt(ty(my - uy * far))}" '
                f'x2="{_fmt(tx(mx + ux * far))}" y2="{_fmt(ty(my + uy * far))}" '
                'stroke="red" stroke-width="1.5" stroke-dasharray="6,4"/>'
            )
    for u, v in G.sorted_edges():
        cut = partition is not None and partition.separates(u, v)
        out.append(
            f'<line class="edge" x1="{_fmt(tx(P[u].x))}" y1="{_fmt(ty(P[u].y))}" '
            f'x2="{_fmt(tx(P[v].x))}" y2="{_fmt(ty(P[v].y))}" '
            f'stroke="{"orange" if cut else "black"}" stroke-width="2"/>'
        )
    for i, p in enumerate(P):
        fill = "steelblue"
        if partition is not None:
            fill = "steelblue" if partition.side(i) else "seagreen"
        name = labels[i] if labels is not None else str(i)
        out.append(
            f'<circle class="point" cx="{_fmt(tx(p.x))}" cy="{_fmt(ty(p.y))}" r="5" '
            f'fill="{fill}" stroke="black" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{_fmt(tx(p.x) + 7)}" y="{_fmt(ty(p.y) - 7)}" '
            f'font-family="sans-serif" font-size="12">{_escape(name)}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _escape(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace("'", "&apos;")

"""Plain SVG drawings of path families: one polyline per path, corners as markers."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .cartan import CartanData
from .paths import Path, iota

CELL = 24  # pixels per column and per unit of y
MARGIN = 40
COLOURS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")


def _column_labels(cd: CartanData) -> dict[int, str]:
    n = cd.rank
    if cd.family == "A":
        return {x: str(x) for x in range(0, n + 2)}
    labels = {0: "", 2 * n - 1: str(n), 4 * n - 2: ""}
    for i in range(1, n):
        labels[2 * i] = str(i)
        labels[4 * n - 2 - 2 * i] = str(i)
    return labels


def render_paths(cd: CartanData, paths: list[Path], title: str = "") -> str:
    """SVG document with the y-axis pointing down, as in the usual pictures."""
    xs = [x for p in paths for x, _ in p.points] + list(_column_labels(cd))
    ys = [y for p in paths for _, y in p.points] or [0]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys) - 2, max(ys) + 2

    def px(x, y2):
        return MARGIN + (x - x0) * CELL, MARGIN + (y2 - y0) * CELL / 2

    width = int(2 * MARGIN + (x1 - x0) * CELL)
    height = int(2 * MARGIN + (y1 - y0) * CELL / 2)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    if title:
        out.append(f'<title>{escape(title)}</title>')
    for x, label in sorted(_column_labels(cd).items()):
        top, bottom = px(x, y0), px(x, y1)
        out.append(f'<line x1="{top[0]}" y1="{top[1]}" x2="{bottom[0]}" y2="{bottom[1]}" '
                   f'stroke="#dddddd" stroke-width="1"/>')
        if label:
            out.append(f'<text x="{top[0]}" y="{MARGIN / 2}" text-anchor="middle" '
                       f'font-size="12">{escape(label)}</text>')
    for y2 in range(y0 - y0 % 2, y1 + 1, 2):
        _, yy = px(x0, y2)
        out.append(f'<text x="{MARGIN / 3}" y="{yy + 4}" font-size="10">{y2 // 2}</text>')
    for n, p in enumerate(paths):
        colour = COLOURS[n % len(COLOURS)]
        pts = " ".join("%g,%g" % px(x, y) for x, y in p.points)
        out.append(f'<polyline points="{pts}" fill="none" stroke="{colour}" stroke-width="2"/>')
        up, down = p.corners
        for v, fill in [(v, colour) for v in up] + [(v, "white") for v in down]:
            cx, cy = px(*_marker(cd, v))
            out.append(f'<circle cx="{cx:g}" cy="{cy:g}" r="4" fill="{fill}" stroke="{colour}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _marker(cd: CartanData, v) -> tuple[int, int]:
    x, k = iota(cd, v)
    return x, 2 * k

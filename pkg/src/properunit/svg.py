"""Static SVG drawing of an interval representation: one bar per vertex."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .core import Representation

WIDTH = 720
MARGIN = 48
ROW = 22
BAR = 12


def render_svg(rep: Representation, title: str = "") -> str:
    """Row ``v`` holds the bar of vertex ``v``.

    The x scale is computed exactly and converted to pixels last, so
    intervals of equal length get bars of identical width.
    """
    n = len(rep)
    pts = rep.endpoints()
    lo = min(pts) if pts else 0
    hi = max(pts) if pts else 1
    span = hi - lo if hi > lo else 1
    scale = (WIDTH - 2 * MARGIN) / span
    height = MARGIN + ROW * max(n, 1) + MARGIN // 2

    def px(value):
        return float(MARGIN + (value - lo) * scale)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height}" '
        f'viewBox="0 0 {WIDTH} {height}" font-family="monospace" font-size="11">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{height}" fill="white"/>',
    ]
    if title:
        out.append(f'<text x="{MARGIN}" y="18">{escape(title)}</text>')
    axis_y = MARGIN - 14
    out.append(
        f'<line x1="{MARGIN}" y1="{axis_y}" x2="{WIDTH - MARGIN}" y2="{axis_y}" stroke="#999"/>'
    )
    out.append(f'<text x="{MARGIN}" y="{axis_y - 4}" text-anchor="middle">{lo}</text>')
    out.append(f'<text x="{WIDTH - MARGIN}" y="{axis_y - 4}" text-anchor="middle">{hi}</text>')
    for v, iv in enumerate(rep):
        y = MARGIN + v * ROW
        x = px(iv.left)
        w = float(iv.length * scale)
        out.append(f'<text x="{MARGIN - 8}" y="{y + BAR - 2}" text-anchor="end">{v}</text>')
        out.append(
            f'<rect class="bar" data-vertex="{v}" x="{x:.4f}" y="{y}" width="{w:.4f}" '
            f'height="{BAR}" fill="#4a7ab5" stroke="#1f3b63">'
            f"<title>{v}: [{iv.left}, {iv.right}]</title></rect>"
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"

"""Deterministic SVG overlays of a tessellation, its MNCs and their spokes."""

from __future__ import annotations

from . import geometry as geo

WIDTH = 800
CELL_FILL = "#ffffff"
MEMBER_FILL = "#cfe3f5"
NUCLEUS_FILL = "#4a78a8"
SPOKE_STROKE = "#c0392b"


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def render_svg(t, clusters=(), width: int = WIDTH) -> str:
    """SVG text: every cell outlined, nuclei shaded, members tinted, one line per spoke."""
    x0, y0, x1, y1 = geo.bounds_of(t.bbox)
    scale = width / (x1 - x0)
    height = (y1 - y0) * scale

    def xy(p):
        return f"{_fmt((p[0] - x0) * scale)},{_fmt((y1 - p[1]) * scale)}"

    nuclei = {c.nucleus for c in clusters}
    members = {m for c in clusters for m in c.members}
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        '<g id="cells" stroke="#333333" stroke-width="1">',
    ]
    for c in t.cells:
        fill = NUCLEUS_FILL if c.site in nuclei else MEMBER_FILL if c.site in members else CELL_FILL
        pts = " ".join(xy(v) for v in c.polygon.vertices)
        out.append(f'<polygon id="cell{c.site}" points="{pts}" fill="{fill}"/>')
    out.append("</g>")
    out.append(f'<g id="spokes" stroke="{SPOKE_STROKE}" stroke-width="2">')
    for c in clusters:
        a = geo.centroid(t.cells[c.nucleus].polygon)
        for arm in c.arms:
            b = geo.centroid(t.cells[arm].polygon)
            (ax, ay), (bx, by) = xy(a).split(","), xy(b).split(",")
            out.append(f'<line class="spoke" x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"/>')
    out.append("</g>")
    out.append('<g id="sites" fill="#000000">')
    for s in t.sites:
        px, py = xy(s.position).split(",")
        out.append(f'<circle cx="{px}" cy="{py}" r="2"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"

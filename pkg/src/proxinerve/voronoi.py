"""Bounded Voronoi tessellation by half-plane clipping, plus its adjacency graph."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import geometry as geo
from .errors import CellNotInTessellation, ConfigError, DuplicateSite, SiteOutsideBox
from .geometry import ConvexPolygon, HalfPlane, Point, Segment


@dataclass(frozen=True)
class Site:
    id: int
    position: Point


@dataclass(frozen=True)
class Cell:
    site: int
    polygon: ConvexPolygon
    touches_boundary: bool


@dataclass(frozen=True)
class Tessellation:
    bbox: ConvexPolygon
    sites: tuple
    cells: tuple
    adjacency: dict = field(compare=True)
    eps_edge: float = 0.0

    def __len__(self):
        return len(self.cells)

    def cell(self, i: int) -> Cell:
        if not isinstance(i, (int, np.integer)) or not 0 <= i < len(self.cells):
            raise CellNotInTessellation(i)
        return self.cells[i]

    def neighbors(self, i: int) -> list:
        self.cell(i)
        return self._neighbor_table[i]

    def degree(self, i: int) -> int:
        return len(self.neighbors(i))

    def degrees(self) -> list:
        return [len(n) for n in self._neighbor_table]

    @property
    def _neighbor_table(self):
        table = self.__dict__.get("_nbrs")
        if table is None:
            table = [[] for _ in self.cells]
            for i, j in self.adjacency:
                table[i].append(j)
                table[j].append(i)
            table = [sorted(t) for t in table]
            object.__setattr__(self, "_nbrs", table)
        return table

    def shared_segment(self, i: int, j: int):
        self.cell(i)
        self.cell(j)
        return self.adjacency.get((min(i, j), max(i, j)))


def make_bbox(bbox) -> ConvexPolygon:
    """Accept ``(x0, y0, x1, y1)`` or an axis-aligned ConvexPolygon."""
    if isinstance(bbox, ConvexPolygon):
        return bbox
    try:
        x0, y0, x1, y1 = (float(v) for v in bbox)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bbox must be x0,y0,x1,y1: {bbox!r}") from exc
    if not (x1 > x0 and y1 > y0) or not all(map(math.isfinite, (x0, y0, x1, y1))):
        raise ConfigError(f"degenerate bbox {bbox!r}")
    return ConvexPolygon.rectangle(x0, y0, x1, y1)


def make_sites(sites: Iterable) -> list:
    out = []
    for i, s in enumerate(sites):
        if isinstance(s, Site):
            if s.id != i:
                raise ValueError(f"site ids must be dense 0..n-1, got {s.id} at {i}")
            out.append(s)
        else:
            x, y = float(s[0]), float(s[1])
            if not (math.isfinite(x) and math.isfinite(y)):
                raise ValueError(f"site {i} has non-finite coordinates")
            out.append(Site(i, Point(x, y)))
    return out


def _check_sites(sites, box, eps):
    x0, y0, x1, y1 = box.bounds
    for s in sites:
        p = s.position
        if not (x0 - eps <= p.x <= x1 + eps and y0 - eps <= p.y <= y1 + eps):
            raise SiteOutsideBox(f"site {s.id} at {tuple(p)} lies outside the bounding box")
    order = sorted(range(len(sites)), key=lambda i: sites[i].position)
    # sweep in x: only neighbours within eps in x can collide
    for k, i in enumerate(order):
        p = sites[i].position
        for j in order[k + 1:]:
            q = sites[j].position
            if q.x - p.x > eps:
                break
            if p.dist(q) <= eps:
                a, b = sorted((i, j))
                raise DuplicateSite(f"sites {a} and {b} coincide at {tuple(p)}")


def voronoi_cell(site: Point, others: Sequence[Point], box: ConvexPolygon,
                 eps: float = geo.EPS_GEOM) -> ConvexPolygon:
    """The box clipped to every half-plane closer to ``site`` than to each other site."""
    chain = list(box.vertices)
    ranked = sorted(others, key=lambda q: (site.dist(q), q))
    for q in ranked:
        radius = max(site.dist(v) for v in chain)
        if site.dist(q) / 2 > radius + eps:
            break  # no later competitor can cut the cell
        chain = geo._clip_chain(chain, HalfPlane.closer_to(site, q), eps)
        reduced = geo._reduce(chain, eps)
        chain = list(geo.vertices_of(reduced))
    return ConvexPolygon.from_points(chain, eps)


def _on_box_boundary(poly, box, eps):
    x0, y0, x1, y1 = box.bounds
    return any(abs(p.x - x0) <= eps or abs(p.x - x1) <= eps or abs(p.y - y0) <= eps
               or abs(p.y - y1) <= eps for p in poly.vertices)


def build_tessellation(sites: Iterable, bbox, eps: float = geo.EPS_GEOM) -> Tessellation:
    """Voronoi tessellation of ``sites`` clipped to ``bbox``.

    Raises DuplicateSite or SiteOutsideBox on invalid input.
    """
    box = make_bbox(bbox)
    sites = make_sites(sites)
    if not sites:
        raise ValueError("at least one site is required")
    _check_sites(sites, box, eps)
    positions = [s.position for s in sites]
    cells = []
    for s in sites:
        others = positions[:s.id] + positions[s.id + 1:]
        poly = voronoi_cell(s.position, others, box, eps)
        cells.append(Cell(s.id, poly, _on_box_boundary(poly, box, eps)))
    x0, y0, x1, y1 = box.bounds
    eps_edge = geo.EDGE_FRACTION * math.hypot(x1 - x0, y1 - y0)
    adjacency = _adjacency(cells, eps_edge, eps)
    return Tessellation(box, tuple(sites), tuple(cells), adjacency, eps_edge)


def _adjacency(cells, eps_edge, eps):
    boxes = [c.polygon.bounds for c in cells]
    order = sorted(range(len(cells)), key=lambda i: boxes[i][0])
    adjacency = {}
    for k, i in enumerate(order):
        bi = boxes[i]
        for j in order[k + 1:]:
            bj = boxes[j]
            if bj[0] > bi[2] + eps:
                break
            if bj[1] > bi[3] + eps or bi[1] > bj[3] + eps:
                continue
            seg = geo.shared_edge(cells[i].polygon, cells[j].polygon, eps_edge)
            if seg is not None:
                adjacency[(min(i, j), max(i, j))] = seg
    return dict(sorted(adjacency.items()))


def adjacency_graph(t: Tessellation) -> dict:
    """Pairs ``(i, j)``, ``i < j``, of edge-sharing cells mapped to the shared segment."""
    return dict(t.adjacency)


def raster_points(bbox, resolution: int) -> np.ndarray:
    """Grid of ``resolution x resolution`` points spanning the closed box, shape (r, r, 2)."""
    if resolution < 2:
        raise ValueError("resolution must be >= 2")
    x0, y0, x1, y1 = make_bbox(bbox).bounds
    xs = np.linspace(x0, x1, resolution)
    ys = np.linspace(y0, y1, resolution)
    gx, gy = np.meshgrid(xs, ys)
    return np.stack([gx, gy], axis=-1)


def nearest_site_oracle(sites, bbox, resolution: int) -> np.ndarray:
    """Id of the nearest site at every raster point (smallest id on ties)."""
    pts = raster_points(bbox, resolution).reshape(-1, 2)
    xy = np.array([tuple(s.position) if isinstance(s, Site) else (s[0], s[1]) for s in sites],
                  dtype=float)
    d2 = ((pts[:, None, :] - xy[None, :, :]) ** 2).sum(axis=-1)
    return d2.argmin(axis=1).reshape(resolution, resolution)


def locate(t: Tessellation, points, eps: float = geo.EPS_GEOM) -> np.ndarray:
    """Index of the first cell whose closed polygon contains each point; -1 if none."""
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    out = np.full(len(pts), -1, dtype=int)
    for cell in t.cells:
        vs = np.array(cell.polygon.vertices)
        nxt = np.roll(vs, -1, axis=0)
        d = nxt - vs
        norm = np.hypot(d[:, 0], d[:, 1])
        # signed distance to the left of each edge; inside means >= -eps for all edges
        rel = pts[:, None, :] - vs[None, :, :]
        cross = (d[None, :, 0] * rel[..., 1] - d[None, :, 1] * rel[..., 0]) / norm[None, :]
        inside = (cross >= -eps).all(axis=1) & (out < 0)
        out[inside] = cell.site
    return out

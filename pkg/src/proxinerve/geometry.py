"""Planar convex primitives: points, segments, convex polygons, half-planes.

Every convex set handled here is one of ``Point``, ``Segment`` or
``ConvexPolygon``; intersections degrade gracefully from polygon to segment
to point to empty (``None``).  Comparisons use the absolute tolerance
``EPS_GEOM`` (overridable with the ``PROXINERVE_EPS`` environment variable).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence, Union

from .errors import InvalidPolygon

#: Tolerance for coordinate comparisons.
EPS_GEOM = float(os.environ.get("PROXINERVE_EPS", "1e-9"))
#: Polygons with smaller area are treated as degenerate.
EPS_AREA = 1e-12
#: Minimum shared-edge length, as a fraction of the bounding-box diagonal.
EDGE_FRACTION = 1e-6


class Point(NamedTuple):
    x: float
    y: float

    def __sub__(self, other):
        return Point(self.x - other.x, self.y - other.y)

    def dist(self, other) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


class Segment(NamedTuple):
    """Closed segment; endpoints stored in lexicographic order."""

    a: Point
    b: Point

    @classmethod
    def make(cls, p, q) -> "Segment":
        p, q = Point(float(p[0]), float(p[1])), Point(float(q[0]), float(q[1]))
        if p.dist(q) <= EPS_GEOM:
            raise ValueError("segment endpoints coincide")
        return cls(p, q) if p <= q else cls(q, p)

    @property
    def length(self) -> float:
        return self.a.dist(self.b)

    @property
    def midpoint(self) -> Point:
        return Point((self.a.x + self.b.x) / 2, (self.a.y + self.b.y) / 2)


class HalfPlane(NamedTuple):
    """The closed set ``{p : nx*p.x + ny*p.y <= offset}``."""

    nx: float
    ny: float
    offset: float

    @classmethod
    def left_of(cls, a: Point, b: Point) -> "HalfPlane":
        """Half-plane to the left of the directed line a -> b."""
        dx, dy = b.x - a.x, b.y - a.y
        norm = math.hypot(dx, dy)
        if norm == 0:
            raise ValueError("degenerate half-plane")
        nx, ny = dy / norm, -dx / norm
        return cls(nx, ny, nx * a.x + ny * a.y)

    @classmethod
    def closer_to(cls, s: Point, q: Point) -> "HalfPlane":
        """Points at least as close to ``s`` as to ``q``."""
        nx, ny = q.x - s.x, q.y - s.y
        norm = math.hypot(nx, ny)
        if norm == 0:
            raise ValueError("degenerate half-plane")
        nx, ny = nx / norm, ny / norm
        mx, my = (s.x + q.x) / 2, (s.y + q.y) / 2
        return cls(nx, ny, nx * mx + ny * my)

    def signed_distance(self, p) -> float:
        return (self.nx * p[0] + self.ny * p[1] - self.offset) / math.hypot(self.nx, self.ny)

    def contains(self, p, eps: float = EPS_GEOM) -> bool:
        return self.signed_distance(p) <= eps


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _signed_area(pts: Sequence) -> float:
    s = 0.0
    n = len(pts)
    for i in range(n):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return s / 2


def _line_distance(p, a, b) -> float:
    length = math.hypot(b[0] - a[0], b[1] - a[1])
    if length == 0:
        return math.hypot(p[0] - a[0], p[1] - a[1])
    return abs(_cross(a, b, p)) / length


@dataclass(frozen=True)
class ConvexPolygon:
    """Strictly convex polygon, CCW, starting at its lexicographically smallest vertex."""

    vertices: tuple

    def __post_init__(self):
        vs = self.vertices
        if len(vs) < 3:
            raise InvalidPolygon(f"polygon needs at least 3 vertices, got {len(vs)}")
        for p in vs:
            if not (math.isfinite(p[0]) and math.isfinite(p[1])):
                raise InvalidPolygon("non-finite coordinate")
        n = len(vs)
        for i in range(n):
            if Point(*vs[i]).dist(Point(*vs[(i + 1) % n])) <= EPS_GEOM:
                raise InvalidPolygon("duplicate consecutive vertices")
            if _cross(vs[i - 1], vs[i], vs[(i + 1) % n]) <= 0:
                raise InvalidPolygon("vertices are not strictly convex and counter-clockwise")
        if _signed_area(vs) <= 0:
            raise InvalidPolygon("polygon is not counter-clockwise")

    @classmethod
    def from_points(cls, points: Iterable, eps: float = EPS_GEOM) -> "ConvexPolygon":
        """Canonicalize an ordered convex chain (either orientation)."""
        pts = [Point(float(p[0]), float(p[1])) for p in points]
        if len(pts) >= 3 and _signed_area(pts) < 0:
            pts.reverse()
        pts = _dedupe_cyclic(pts, eps)
        pts = _drop_collinear(pts, eps)
        if len(pts) < 3:
            raise InvalidPolygon("fewer than 3 non-collinear vertices")
        k = min(range(len(pts)), key=lambda i: pts[i])
        return cls(tuple(pts[k:] + pts[:k]))

    @classmethod
    def rectangle(cls, x0, y0, x1, y1) -> "ConvexPolygon":
        if not (x1 > x0 and y1 > y0):
            raise InvalidPolygon("degenerate rectangle")
        return cls.from_points([(x0, y0), (x1, y0), (x1, y1), (x0, y1)])

    def __len__(self):
        return len(self.vertices)

    @property
    def edges(self):
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    @property
    def bounds(self):
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def halfplanes(self):
        return [HalfPlane.left_of(a, b) for a, b in self.edges]


Shape = Union[Point, Segment, ConvexPolygon]


class Contact(str, Enum):
    DISJOINT = "disjoint"
    POINT = "point_contact"
    EDGE = "edge_contact"
    AREA = "area_overlap"


def _dedupe_cyclic(pts, eps):
    out = []
    for p in pts:
        if not out or out[-1].dist(p) > eps:
            out.append(p)
    while len(out) > 1 and out[0].dist(out[-1]) <= eps:
        out.pop()
    return out


def _drop_collinear(pts, eps):
    changed = True
    while changed and len(pts) >= 3:
        changed = False
        n = len(pts)
        for i in range(n):
            if _line_distance(pts[i], pts[i - 1], pts[(i + 1) % n]) <= eps:
                del pts[i]
                changed = True
                break
    return pts


def convex_hull(points: Iterable) -> list:
    """Monotone-chain hull, CCW, collinear points dropped."""
    pts = sorted(set(Point(float(p[0]), float(p[1])) for p in points))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


# --- measurement -----------------------------------------------------------


def _require_polygon(poly):
    if not isinstance(poly, ConvexPolygon):
        if isinstance(poly, (list, tuple)) and not isinstance(poly, (Point, Segment)):
            return ConvexPolygon.from_points(poly)
        raise InvalidPolygon(f"expected a polygon, got {type(poly).__name__}")
    return poly


def area(poly) -> float:
    return _signed_area(_require_polygon(poly).vertices)


def centroid(poly) -> Point:
    vs = _require_polygon(poly).vertices
    a = _signed_area(vs)
    cx = cy = 0.0
    n = len(vs)
    # shift to the first vertex for numerical stability
    ox, oy = vs[0]
    for i in range(n):
        x0, y0 = vs[i][0] - ox, vs[i][1] - oy
        x1, y1 = vs[(i + 1) % n][0] - ox, vs[(i + 1) % n][1] - oy
        w = x0 * y1 - x1 * y0
        cx += (x0 + x1) * w
        cy += (y0 + y1) * w
    return Point(ox + cx / (6 * a), oy + cy / (6 * a))


def diameter(poly) -> float:
    vs = _require_polygon(poly).vertices
    return max(p.dist(q) for i, p in enumerate(vs) for q in vs[i + 1:])


def vertices_of(shape: Shape) -> list:
    if isinstance(shape, ConvexPolygon):
        return list(shape.vertices)
    if isinstance(shape, Segment):
        return [shape.a, shape.b]
    if isinstance(shape, Point):
        return [shape]
    raise TypeError(f"not a shape: {shape!r}")


def dimension(shape: Shape) -> int:
    if isinstance(shape, ConvexPolygon):
        return 2
    if isinstance(shape, Segment):
        return 1
    return 0


def bounds_of(shape: Shape):
    vs = vertices_of(shape)
    xs = [p[0] for p in vs]
    ys = [p[1] for p in vs]
    return min(xs), min(ys), max(xs), max(ys)


def representative_point(shape: Shape) -> Point:
    """A point of the relative interior of ``shape``."""
    if isinstance(shape, ConvexPolygon):
        return centroid(shape)
    if isinstance(shape, Segment):
        return shape.midpoint
    return shape


def halfplanes_of(shape: Shape) -> list:
    if isinstance(shape, ConvexPolygon):
        return shape.halfplanes()
    if isinstance(shape, Segment):
        a, b = shape
        left = HalfPlane.left_of(a, b)
        right = HalfPlane.left_of(b, a)
        length = shape.length
        dx, dy = (b.x - a.x) / length, (b.y - a.y) / length
        cap_a = HalfPlane(-dx, -dy, -(dx * a.x + dy * a.y))
        cap_b = HalfPlane(dx, dy, dx * b.x + dy * b.y)
        return [left, right, cap_a, cap_b]
    x, y = shape
    return [HalfPlane(1.0, 0.0, x), HalfPlane(-1.0, 0.0, -x),
            HalfPlane(0.0, 1.0, y), HalfPlane(0.0, -1.0, -y)]


def contains(shape: Shape, p, eps: float = EPS_GEOM, strict: bool = False) -> bool:
    """Point membership in the closed shape, or in its interior when ``strict``.

    Interior is the planar interior, so segments and points have none.
    """
    if strict:
        if not isinstance(shape, ConvexPolygon):
            return False
        return all(h.signed_distance(p) < -eps for h in shape.halfplanes())
    return all(h.signed_distance(p) <= eps for h in halfplanes_of(shape))


def contains_shape(outer: Shape, inner: Shape, eps: float = EPS_GEOM) -> bool:
    return all(contains(outer, v, eps) for v in vertices_of(inner))


# --- clipping and intersection ----------------------------------------------


def _clip_chain(pts, h: HalfPlane, eps: float):
    """One Sutherland-Hodgman pass of a closed convex chain against ``h``."""
    norm = math.hypot(h.nx, h.ny)
    dist = [(h.nx * p[0] + h.ny * p[1] - h.offset) / norm for p in pts]
    if all(d <= eps for d in dist):
        return list(pts)
    if all(d > eps for d in dist):
        return []
    out = []
    n = len(pts)
    for i in range(n):
        cur, prev = pts[i], pts[i - 1]
        dc, dp = dist[i], dist[i - 1]
        cin, pin = dc <= eps, dp <= eps
        if cin != pin:
            denom = dp - dc
            t = 0.0 if denom == 0 else min(1.0, max(0.0, dp / denom))
            out.append(Point(prev[0] + t * (cur[0] - prev[0]), prev[1] + t * (cur[1] - prev[1])))
        if cin:
            out.append(cur)
    return out


def _reduce(pts, eps: float = EPS_GEOM):
    """Classify a convex chain as polygon, segment, point or empty."""
    if not pts:
        return None
    pts = _dedupe_cyclic([Point(*p) for p in pts], eps)
    uniq = []
    for p in pts:
        if all(p.dist(q) > eps for q in uniq):
            uniq.append(p)
    if len(uniq) == 1:
        return uniq[0]
    best, pair = -1.0, None
    for i, p in enumerate(uniq):
        for q in uniq[i + 1:]:
            d = p.dist(q)
            if d > best:
                best, pair = d, (p, q)
    p, q = pair
    if best <= eps:
        return p
    width = max(_line_distance(r, p, q) for r in uniq)
    if width <= eps or len(uniq) < 3:
        return Segment.make(p, q)
    try:
        poly = ConvexPolygon.from_points(pts, eps)
    except InvalidPolygon:
        try:
            poly = ConvexPolygon.from_points(convex_hull(uniq), eps)
        except InvalidPolygon:
            return Segment.make(p, q)
    if area(poly) < EPS_AREA:
        return Segment.make(p, q)
    return poly


def clip(poly: ConvexPolygon, h: HalfPlane, eps: float = EPS_GEOM):
    """``poly ∩ h`` when it has positive area, else None."""
    out = _reduce(_clip_chain(list(_require_polygon(poly).vertices), h, eps), eps)
    return out if isinstance(out, ConvexPolygon) else None


def _boxes_apart(s1, s2, eps):
    ax0, ay0, ax1, ay1 = bounds_of(s1)
    bx0, by0, bx1, by1 = bounds_of(s2)
    return ax0 > bx1 + eps or bx0 > ax1 + eps or ay0 > by1 + eps or by0 > ay1 + eps


@lru_cache(maxsize=1 << 16)
def intersect(s1: Shape, s2: Shape, eps: float = EPS_GEOM):
    """Closed intersection of two convex shapes (shape or None)."""
    if _boxes_apart(s1, s2, eps):
        return None
    pts = vertices_of(s1)
    for h in halfplanes_of(s2):
        pts = _clip_chain(pts, h, eps)
        if not pts:
            return None
    return _reduce(pts, eps)


def common_intersection(shapes: Sequence[Shape], eps: float = EPS_GEOM):
    """Intersection of all shapes by iterated clipping, tracking degeneracy."""
    if not shapes:
        raise ValueError("common_intersection of an empty list")
    acc = shapes[0]
    for s in shapes[1:]:
        acc = intersect(acc, s, eps)
        if acc is None:
            return None
    return acc


def default_eps_edge(*shapes: Shape) -> float:
    xs, ys = [], []
    for s in shapes:
        x0, y0, x1, y1 = bounds_of(s)
        xs += [x0, x1]
        ys += [y0, y1]
    return EDGE_FRACTION * math.hypot(max(xs) - min(xs), max(ys) - min(ys))


def classify_contact(s1: Shape, s2: Shape, eps_edge: float | None = None,
                     eps: float = EPS_GEOM) -> Contact:
    inter = intersect(s1, s2, eps)
    if inter is None:
        return Contact.DISJOINT
    if isinstance(inter, ConvexPolygon):
        return Contact.AREA
    if isinstance(inter, Segment):
        if eps_edge is None:
            eps_edge = default_eps_edge(s1, s2)
        return Contact.EDGE if inter.length >= eps_edge else Contact.POINT
    return Contact.POINT


def polygons_intersect(a: ConvexPolygon, b: ConvexPolygon, eps_edge: float | None = None) -> Contact:
    return classify_contact(_require_polygon(a), _require_polygon(b), eps_edge)


def shared_edge(a: ConvexPolygon, b: ConvexPolygon, eps_edge: float | None = None):
    """Common boundary segment of two interior-disjoint polygons, or None."""
    a, b = _require_polygon(a), _require_polygon(b)
    inter = intersect(a, b)
    if not isinstance(inter, Segment):
        return None
    if eps_edge is None:
        eps_edge = default_eps_edge(a, b)
    return inter if inter.length >= eps_edge else None

"""Proximity relations over finite region sets, both spatial and descriptive, in ordinary and strong forms.

A region set is a finite collection of ``Region`` elements, each a closed
convex shape (point, segment or polygon) with an optional description.  The
set stands for the union of its elements; its interior is taken to be the
union of the interiors of its polygon elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import geometry as geo
from .description import DescriptorSpec, FeatureVector, SIDE_COUNT, features_match
from .errors import CellNotInTessellation, MissingDescription
from .geometry import Contact, ConvexPolygon, Point


@dataclass(frozen=True)
class Region:
    shape: geo.Shape
    description: FeatureVector | None = None
    label: str | None = None

    @property
    def dim(self) -> int:
        return geo.dimension(self.shape)


@dataclass(frozen=True)
class Witness:
    """Indices of the witnessing elements in the left and right operands."""

    left: int
    right: int
    shape: object = None


@dataclass(frozen=True)
class ProximityVerdict:
    relation: str
    holds: bool
    witness: object = None
    tag: str | None = None

    def __post_init__(self):
        if self.holds and self.witness is None:
            raise ValueError("a true verdict needs a witness")

    def __bool__(self):
        return self.holds


def as_region(x) -> Region:
    if isinstance(x, Region):
        return x
    if hasattr(x, "polygon"):  # a voronoi Cell
        return Region(x.polygon, label=f"cell{x.site}")
    if isinstance(x, (Point, geo.Segment, ConvexPolygon)):
        return Region(x)
    if isinstance(x, tuple) and len(x) == 2 and all(isinstance(v, (int, float)) for v in x):
        return Region(Point(float(x[0]), float(x[1])))
    raise TypeError(f"cannot make a region from {x!r}")


def region_set(items: Iterable = ()) -> tuple:
    return tuple(as_region(x) for x in items)


def union(*sets: Sequence[Region]) -> tuple:
    out, seen = [], set()
    for s in sets:
        for r in region_set(s):
            if r not in seen:
                out.append(r)
                seen.add(r)
    return tuple(out)


def interior_part(A: Sequence[Region]) -> tuple:
    """Elements with nonempty planar interior (polygons)."""
    return tuple(r for r in region_set(A) if r.dim == 2)


def is_point_singleton(A: Sequence[Region]) -> bool:
    return len(A) == 1 and A[0].dim == 0


def covers_space(A: Sequence[Region], space: ConvexPolygon | None) -> int | None:
    """Index of an element containing the whole space, if any."""
    if space is None:
        return None
    for i, r in enumerate(A):
        if r.dim == 2 and geo.contains_shape(r.shape, space):
            return i
    return None


# --- spatial nearness -------------------------------------------------------


def near(A, B) -> ProximityVerdict:
    """Closures of the two unions meet."""
    A, B = region_set(A), region_set(B)
    if not A or not B:
        return ProximityVerdict("near", False, tag="P0")
    for i, a in enumerate(A):
        for j, b in enumerate(B):
            inter = geo.intersect(a.shape, b.shape)
            if inter is not None:
                return ProximityVerdict("near", True, Witness(i, j, inter), tag="common_point")
    return ProximityVerdict("near", False)


def _strong_witnesses(A, B, space, mesh_contact, eps_edge) -> Iterator[tuple]:
    """Yield ``(tag, Witness)`` for every strong contact between A and B."""
    if not A or not B:
        return
    for k, (S, T, flip) in enumerate(((A, B, False), (B, A, True))):
        i = covers_space(S, space)
        if i is not None:
            for j, t in enumerate(T):
                w = Witness(j, i, t.shape) if flip else Witness(i, j, t.shape)
                yield "space", w
            return
    if is_point_singleton(A) and is_point_singleton(B):
        x, y = A[0].shape, B[0].shape
        if x.dist(y) <= geo.EPS_GEOM:
            yield "singletons", Witness(0, 0, x)
        return
    for S, T, flip in ((A, B, False), (B, A, True)):
        if is_point_singleton(S) and interior_part(T):
            x = S[0].shape
            for j, t in enumerate(T):
                if geo.contains(t.shape, x, strict=True):
                    yield "singleton_interior", (Witness(j, 0, x) if flip else Witness(0, j, x))
            return
    ia, ib = interior_part(A), interior_part(B)
    if ia and ib:
        for i, a in enumerate(A):
            if a.dim != 2:
                continue
            for j, b in enumerate(B):
                if b.dim != 2:
                    continue
                contact = geo.classify_contact(a.shape, b.shape, eps_edge)
                if contact is Contact.AREA:
                    yield "interior_overlap", Witness(i, j, geo.intersect(a.shape, b.shape))
                elif mesh_contact and contact is Contact.EDGE:
                    yield "shared_edge", Witness(i, j, geo.intersect(a.shape, b.shape))
        return
    if not ia and not ib:
        # lower-dimensional sets have no interior: strong contact means a common point
        for i, a in enumerate(A):
            for j, b in enumerate(B):
                inter = geo.intersect(a.shape, b.shape)
                if inter is not None:
                    yield "common_point", Witness(i, j, inter)


def strongly_near(A, B, *, space: ConvexPolygon | None = None, mesh_contact: bool = False,
                  eps_edge: float | None = None) -> ProximityVerdict:
    """Strong contact.

    Empty operands are never strongly near; an operand covering ``space`` is
    strongly near anything nonempty.  Point singletons must coincide, or lie
    in the interior of the other set.  Otherwise two polygon elements must
    overlap in area (or, with ``mesh_contact``, share an edge).  Sets with no
    polygon elements at all are strongly near when they share a point.
    """
    A, B = region_set(A), region_set(B)
    if not A or not B:
        return ProximityVerdict("strongly_near", False, tag="snN0")
    for tag, w in _strong_witnesses(A, B, space, mesh_contact, eps_edge):
        return ProximityVerdict("strongly_near", True, w, tag=tag)
    return ProximityVerdict("strongly_near", False)


def strong_witnesses(A, B, *, space=None, mesh_contact=False, eps_edge=None) -> list:
    """Every strong-contact witness shape between A and B, without repeats."""
    A, B = region_set(A), region_set(B)
    out = []
    for _, w in _strong_witnesses(A, B, space, mesh_contact, eps_edge):
        if not any(_same_shape(w.shape, s) for s in out):
            out.append(w.shape)
    return out


def _same_shape(s, t) -> bool:
    if type(s) is not type(t):
        return False
    return all(p.dist(q) <= geo.EPS_GEOM for p, q in zip(geo.vertices_of(s), geo.vertices_of(t))) \
        and len(geo.vertices_of(s)) == len(geo.vertices_of(t))


def mesh_strongly_near(a, b, t) -> ProximityVerdict:
    """Cells in strong contact: identical, or sharing an edge of positive length."""
    ia, ib = _cell_index(a, t), _cell_index(b, t)
    if ia == ib:
        return ProximityVerdict("mesh_strongly_near", True, Witness(ia, ib, t.cells[ia].polygon),
                                tag="reflexive")
    seg = t.shared_segment(ia, ib)
    if seg is None:
        return ProximityVerdict("mesh_strongly_near", False)
    return ProximityVerdict("mesh_strongly_near", True, Witness(ia, ib, seg), tag="shared_edge")


def _cell_index(c, t) -> int:
    i = getattr(c, "site", c)
    if not isinstance(i, (int, np.integer)) or not 0 <= i < len(t.cells):
        raise CellNotInTessellation(c)
    if hasattr(c, "polygon") and t.cells[i] != c:
        raise CellNotInTessellation(c)
    return int(i)


# --- descriptive nearness ---------------------------------------------------


def _descriptions(A):
    out = []
    for r in A:
        if r.description is None:
            raise MissingDescription(f"region {r.label or r.shape!r} has no description")
        out.append(r.description)
    return out


def descriptively_near(A, B, spec: DescriptorSpec = SIDE_COUNT) -> ProximityVerdict:
    """Some element of A and some element of B have matching descriptions."""
    A, B = region_set(A), region_set(B)
    da, db = _descriptions(A), _descriptions(B)
    if not A or not B:
        return ProximityVerdict("descriptively_near", False, tag="dP0")
    for i, u in enumerate(da):
        for j, v in enumerate(db):
            if features_match(u, v, spec):
                return ProximityVerdict("descriptively_near", True, Witness(i, j), tag="matching_pair")
    return ProximityVerdict("descriptively_near", False)


def descriptively_strongly_near(A, B, spec: DescriptorSpec = SIDE_COUNT, *,
                                space: ConvexPolygon | None = None) -> ProximityVerdict:
    """Descriptive strong contact.

    Point singletons compare their own descriptions, or match a polygon
    element of the other set; other sets need a matching pair of polygon
    (interior) elements.  An operand covering ``space`` contacts anything.
    """
    A, B = region_set(A), region_set(B)
    da, db = _descriptions(A), _descriptions(B)
    rel = "descriptively_strongly_near"
    if not A or not B:
        return ProximityVerdict(rel, False, tag="dsnP0")
    i = covers_space(A, space)
    if i is not None:
        return ProximityVerdict(rel, True, Witness(i, 0), tag="space")
    j = covers_space(B, space)
    if j is not None:
        return ProximityVerdict(rel, True, Witness(0, j), tag="space")
    if is_point_singleton(A) and is_point_singleton(B):
        if features_match(da[0], db[0], spec):
            return ProximityVerdict(rel, True, Witness(0, 0), tag="singletons")
        return ProximityVerdict(rel, False)
    if is_point_singleton(A) or is_point_singleton(B):
        flip = not is_point_singleton(A)
        dx = db[0] if flip else da[0]
        T, dt = (A, da) if flip else (B, db)
        for k, (t, d) in enumerate(zip(T, dt)):
            if t.dim == 2 and features_match(dx, d, spec):
                return ProximityVerdict(rel, True, Witness(k, 0) if flip else Witness(0, k),
                                        tag="singleton_interior")
        return ProximityVerdict(rel, False)
    for i, (a, u) in enumerate(zip(A, da)):
        if a.dim != 2:
            continue
        for j, (b, v) in enumerate(zip(B, db)):
            if b.dim == 2 and features_match(u, v, spec):
                return ProximityVerdict(rel, True, Witness(i, j), tag="interior_match")
    return ProximityVerdict(rel, False)


# --- pointwise descriptions -------------------------------------------------


@dataclass(frozen=True)
class LinearDescriptor:
    """Point description ``phi(p) = W @ p`` with one or two output features."""

    matrix: tuple
    tol: float = 0.0

    def image(self, shape: geo.Shape):
        W = np.asarray(self.matrix, dtype=float).reshape(-1, 2)
        pts = [W @ np.asarray(v, dtype=float) for v in geo.vertices_of(shape)]
        if W.shape[0] == 1:
            vals = [float(p[0]) for p in pts]
            return min(vals), max(vals)
        hull = geo.convex_hull([(float(p[0]), float(p[1])) for p in pts])
        return geo._reduce(hull)


def pointwise_descriptively_near(A, B, phi: LinearDescriptor) -> ProximityVerdict:
    """Some point of A and some point of B have matching ``phi`` descriptions."""
    A, B = region_set(A), region_set(B)
    rel = "pointwise_descriptively_near"
    if not A or not B:
        return ProximityVerdict(rel, False, tag="dP0")
    scalar = np.asarray(phi.matrix, dtype=float).reshape(-1, 2).shape[0] == 1
    for i, a in enumerate(A):
        ia = phi.image(a.shape)
        for j, b in enumerate(B):
            ib = phi.image(b.shape)
            if scalar:
                hit = ia[0] <= ib[1] + phi.tol and ib[0] <= ia[1] + phi.tol
            else:
                hit = geo.intersect(ia, ib, geo.EPS_GEOM + phi.tol) is not None
            if hit:
                return ProximityVerdict(rel, True, Witness(i, j), tag="matching_points")
    return ProximityVerdict(rel, False)


# --- witness replay ---------------------------------------------------------


def check_witness(verdict: ProximityVerdict, A, B, spec: DescriptorSpec = SIDE_COUNT,
                  space: ConvexPolygon | None = None) -> bool:
    """Re-derive a true verdict from its witness alone."""
    if not verdict.holds:
        return True
    A, B = region_set(A), region_set(B)
    w = verdict.witness
    if verdict.relation == "mesh_strongly_near":
        return True if verdict.tag == "reflexive" else isinstance(w.shape, geo.Segment)
    a, b = A[w.left], B[w.right]
    if verdict.relation in ("descriptively_near", "descriptively_strongly_near"):
        if verdict.tag == "space":
            return covers_space(A, space) == w.left or covers_space(B, space) == w.right
        return features_match(a.description, b.description, spec)
    if verdict.relation == "pointwise_descriptively_near":
        return True
    p = geo.representative_point(w.shape)
    if verdict.relation == "near":
        return geo.contains(a.shape, p) and geo.contains(b.shape, p)
    tag = verdict.tag
    if tag == "space":
        return covers_space(A, space) == w.left or covers_space(B, space) == w.right
    if tag == "singletons":
        return a.shape.dist(b.shape) <= geo.EPS_GEOM
    if tag == "singleton_interior":
        single, other = (a, b) if a.dim == 0 else (b, a)
        return geo.contains(other.shape, single.shape, strict=True)
    if tag == "interior_overlap":
        return geo.contains(a.shape, p, strict=True) and geo.contains(b.shape, p, strict=True)
    if tag in ("shared_edge", "common_point"):
        return geo.contains(a.shape, p) and geo.contains(b.shape, p)
    return False

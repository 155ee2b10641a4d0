import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from shapely.geometry import Polygon

from proxinerve import geometry as geo
from proxinerve.errors import InvalidPolygon
from proxinerve.geometry import Contact, ConvexPolygon, HalfPlane, Point, Segment

sq = ConvexPolygon.rectangle


def test_clip_square_by_diagonal_leaves_triangle():
    tri = geo.clip(sq(0, 0, 1, 1), HalfPlane(1.0, 1.0, 1.0))
    assert isinstance(tri, ConvexPolygon)
    assert geo.area(tri) == pytest.approx(0.5, abs=1e-12)
    assert len(tri) == 3


def test_clip_can_empty_or_keep_polygon():
    assert geo.clip(sq(0, 0, 1, 1), HalfPlane(1.0, 0.0, -1.0)) is None
    assert geo.clip(sq(0, 0, 1, 1), HalfPlane(1.0, 0.0, 5.0)) == sq(0, 0, 1, 1)


@pytest.mark.parametrize("other, kind, expected", [
    (sq(0.5, 0.5, 1.5, 1.5), Contact.AREA, 0.25),
    (sq(1, 0, 2, 1), Contact.EDGE, 1.0),
    (sq(1, 1, 2, 2), Contact.POINT, 0.0),
    (sq(3, 3, 4, 4), Contact.DISJOINT, None),
])
def test_intersection_kinds(other, kind, expected):
    a = sq(0, 0, 1, 1)
    assert geo.classify_contact(a, other) is kind
    inter = geo.intersect(a, other)
    if kind is Contact.AREA:
        assert geo.area(inter) == pytest.approx(expected)
    elif kind is Contact.EDGE:
        assert isinstance(inter, Segment) and inter.length == pytest.approx(expected)
        assert geo.shared_edge(a, other) == inter
    elif kind is Contact.POINT:
        assert inter == Point(1.0, 1.0)
        assert geo.shared_edge(a, other) is None
    else:
        assert inter is None


def test_short_shared_edge_counts_as_point_contact():
    a, b = sq(0, 0, 1, 1), ConvexPolygon.from_points([(1, 0.9999999), (2, 0.9999999), (2, 2), (1, 2)])
    assert isinstance(geo.intersect(a, b), Segment)
    assert geo.classify_contact(a, b) is Contact.POINT


def test_lower_dimensional_intersections():
    s = Segment.make((0, 0), (2, 2))
    t = Segment.make((0, 2), (2, 0))
    assert geo.intersect(s, t) == Point(1.0, 1.0)
    assert geo.intersect(s, Point(1, 1)) == Point(1.0, 1.0)
    assert geo.intersect(s, Point(1, 1.1)) is None
    assert geo.intersect(sq(0, 0, 1, 1), Segment.make((-1, 0.5), (2, 0.5))) == Segment.make((0, 0.5), (1, 0.5))


@pytest.mark.parametrize("pts", [
    [(0, 0), (1, 0)],
    [(0, 0), (1, 0), (1, 1), (0.6, 0.2), (0, 1)],
    [(0, 0), (0, 1), (1, 1), (1, 0)],  # clockwise
    [(0, 0), (1, 0), (float("nan"), 1)],
])
def test_constructor_rejects_invalid(pts):
    with pytest.raises(InvalidPolygon):
        ConvexPolygon(tuple(Point(*map(float, p)) for p in pts))


def test_from_points_is_canonical():
    a = ConvexPolygon.from_points([(1, 1), (0, 1), (0, 0), (0.5, 0), (1, 0)])  # clockwise-ish, collinear
    b = ConvexPolygon.from_points([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert a == b
    assert b.vertices[0] == Point(0.0, 0.0)


def test_measurements_of_unit_square():
    s = sq(0, 0, 1, 1)
    assert geo.area(s) == 1.0
    assert geo.centroid(s) == Point(0.5, 0.5)
    assert geo.diameter(s) == pytest.approx(math.sqrt(2))


def test_segment_needs_distinct_endpoints():
    with pytest.raises(ValueError):
        Segment.make((1, 1), (1, 1))


def test_containment_closed_and_strict():
    s = sq(0, 0, 1, 1)
    assert geo.contains(s, (1, 0.5)) and not geo.contains(s, (1, 0.5), strict=True)
    assert geo.contains(s, (0.5, 0.5), strict=True)
    assert not geo.contains(Segment.make((0, 0), (1, 0)), (0.5, 0), strict=True)
    assert geo.contains(Segment.make((0, 0), (1, 0)), (0.5, 0))


def test_common_intersection_tracks_degeneracy():
    assert geo.common_intersection([sq(0, 0, 1, 1), sq(1, 0, 2, 1), sq(1, 1, 2, 2)]) == Point(1.0, 1.0)
    assert geo.common_intersection([sq(0, 0, 1, 1), sq(2, 2, 3, 3), sq(0, 0, 3, 3)]) is None


coords = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


@st.composite
def convex_polygons(draw):
    pts = draw(st.lists(st.tuples(coords, coords), min_size=3, max_size=9))
    hull = geo.convex_hull(pts)
    try:
        poly = ConvexPolygon.from_points(hull)
    except InvalidPolygon:
        assume(False)
    assume(geo.area(poly) > 1e-3)
    return poly


@settings(max_examples=200, deadline=None)
@given(convex_polygons(), convex_polygons())
def test_intersection_matches_shapely(p, q):
    ref = Polygon(p.vertices).intersection(Polygon(q.vertices))
    inter = geo.intersect(p, q)
    got = geo.area(inter) if isinstance(inter, ConvexPolygon) else 0.0
    assert got == pytest.approx(ref.area, abs=1e-7)
    if inter is None:
        assert ref.is_empty or ref.area < 1e-7 and Polygon(p.vertices).distance(Polygon(q.vertices)) < 1e-7


@settings(max_examples=200, deadline=None)
@given(convex_polygons())
def test_area_and_centroid_match_shapely(p):
    ref = Polygon(p.vertices)
    assert geo.area(p) == pytest.approx(ref.area, rel=1e-9)
    c = geo.centroid(p)
    assert c.x == pytest.approx(ref.centroid.x, abs=1e-7)
    assert c.y == pytest.approx(ref.centroid.y, abs=1e-7)


@settings(max_examples=100, deadline=None)
@given(convex_polygons(), convex_polygons())
def test_intersection_is_symmetric_in_kind(p, q):
    assert geo.classify_contact(p, q) is geo.classify_contact(q, p)

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _fixtures import GRID3, GRID3_BOX
from proxinerve import proximity as px
from proxinerve.description import DescriptorSpec, describe_shape
from proxinerve.errors import CellNotInTessellation, MissingDescription
from proxinerve.geometry import ConvexPolygon, Point, Segment
from proxinerve.proximity import LinearDescriptor, Region
from proxinerve.voronoi import build_tessellation

sq = ConvexPolygon.rectangle
SPACE = sq(0, 0, 10, 10)


def R(shape):
    return Region(shape, describe_shape(shape))


def hexagon(cx, cy, r=1.0):
    return ConvexPolygon.from_points([(cx + r * math.cos(k * math.pi / 3), cy + r * math.sin(k * math.pi / 3))
                                      for k in range(6)])


def test_near_on_squares():
    a, corner, far = R(sq(0, 0, 1, 1)), R(sq(1, 1, 2, 2)), R(sq(5, 5, 6, 6))
    v = px.near([a], [corner])
    assert v and v.witness.shape == Point(1.0, 1.0)
    assert not px.near([a], [far])
    # A near (B ∪ C) with B near and C far: witness comes from B
    v = px.near([a], [far, corner])
    assert v and v.witness.right == 1
    assert not px.near([], [a]) and px.near([], [a]).tag == "P0"


def test_strong_contact_needs_overlap():
    a = R(sq(0, 0, 1, 1))
    assert px.strongly_near([a], [R(sq(0.5, 0, 1.5, 1))]).tag == "interior_overlap"
    assert not px.strongly_near([a], [R(sq(1, 1, 2, 2))])
    assert not px.strongly_near([a], [R(sq(1, 0, 2, 1))])
    v = px.strongly_near([a], [R(sq(1, 0, 2, 1))], mesh_contact=True)
    assert v.tag == "shared_edge" and v.witness.shape == Segment.make((1, 0), (1, 1))
    assert not px.strongly_near([a], [R(sq(1, 1, 2, 2))], mesh_contact=True)


def test_singletons_and_the_whole_space():
    x, y = R(Point(0.5, 0.5)), R(Point(0.5, 0.6))
    assert px.strongly_near([x], [x]).tag == "singletons"
    assert not px.strongly_near([x], [y])
    assert px.strongly_near([x], [R(sq(0, 0, 1, 1))]).tag == "singleton_interior"
    assert not px.strongly_near([R(Point(1.0, 0.5))], [R(sq(0, 0, 1, 1))])
    assert px.strongly_near([R(SPACE)], [R(Point(9, 9))], space=SPACE).tag == "space"
    assert not px.strongly_near([], [R(SPACE)], space=SPACE)


def test_lower_dimensional_sets_meet_at_points():
    cross = px.strongly_near([R(Segment.make((0, 0), (1, 1)))], [R(Segment.make((0, 1), (1, 0)))])
    assert cross.tag == "common_point" and cross.witness.shape == Point(0.5, 0.5)
    assert not px.strongly_near([R(Segment.make((0, 0), (1, 0)))], [R(sq(0, 0, 1, 1))])


def test_mesh_contact_on_grid():
    t = build_tessellation(GRID3, GRID3_BOX)
    assert px.mesh_strongly_near(4, 7, t).tag == "shared_edge"
    assert not px.mesh_strongly_near(4, 8, t)
    assert px.mesh_strongly_near(t.cells[4], t.cells[4], t).tag == "reflexive"
    with pytest.raises(CellNotInTessellation):
        px.mesh_strongly_near(4, 12, t)
    other = build_tessellation([(0, 0), (1, 0)], (-1, -1, 2, 1))
    with pytest.raises(CellNotInTessellation):
        px.mesh_strongly_near(other.cells[0], 4, t)


def test_descriptive_nearness_ignores_location():
    h1, h2, s = R(hexagon(0, 0)), R(hexagon(7, 7, 0.5)), R(sq(3, 3, 4, 4))
    assert px.descriptively_near([h1], [h2])
    assert not px.descriptively_near([h1], [s])
    assert px.descriptively_strongly_near([h1], [h2]).tag == "interior_match"
    assert not px.descriptively_strongly_near([h1], [R(ConvexPolygon.from_points(
        [(math.cos(2 * math.pi * k / 5), math.sin(2 * math.pi * k / 5)) for k in range(5)]))])
    p = Region(Point(1, 1), describe_shape(Point(2, 2)))
    q = Region(Point(5, 5), describe_shape(Point(2, 2)))
    assert px.descriptively_strongly_near([p], [q]).tag == "singletons"
    with pytest.raises(MissingDescription):
        px.descriptively_near([Region(sq(0, 0, 1, 1))], [h1])


def test_descriptive_strong_contact_with_tolerance():
    a, b = R(sq(0, 0, 1, 1)), R(sq(5, 5, 6, 6.001))
    spec = DescriptorSpec({"area": 0.01})
    assert px.descriptively_strongly_near([a], [b], spec)
    assert not px.descriptively_strongly_near([a], [b], DescriptorSpec({"area": 1e-6}))


def test_pointwise_descriptor():
    phi = LinearDescriptor(((1.0, 0.0),))  # x coordinate only
    assert px.pointwise_descriptively_near([R(Point(1, 0))], [R(Point(1, 5))], phi)
    assert not px.pointwise_descriptively_near([R(Point(1, 0))], [R(sq(2, 0, 3, 1))], phi)
    phi2 = LinearDescriptor(((1.0, 0.0), (0.0, 1.0)))
    assert not px.pointwise_descriptively_near([R(Point(1, 0))], [R(Point(1, 5))], phi2)
    assert px.pointwise_descriptively_near([R(Segment.make((0, 0), (2, 2)))],
                                           [R(Segment.make((0, 2), (2, 0)))], phi2)


rects = st.builds(lambda x, y, w, h: R(sq(x, y, x + w, y + h)),
                  st.integers(0, 8), st.integers(0, 8), st.integers(1, 2), st.integers(1, 2))
points = st.builds(lambda x, y: R(Point(x / 2, y / 2)), st.integers(0, 20), st.integers(0, 20))
region_sets = st.lists(st.one_of(rects, points), min_size=0, max_size=3)


@settings(max_examples=300, deadline=None)
@given(region_sets, region_sets, st.booleans())
def test_relations_are_symmetric_and_chain(A, B, mesh):
    sn = px.strongly_near(A, B, mesh_contact=mesh, space=SPACE)
    assert sn.holds == px.strongly_near(B, A, mesh_contact=mesh, space=SPACE).holds
    assert px.near(A, B).holds == px.near(B, A).holds
    dsn = px.descriptively_strongly_near(A, B, space=SPACE)
    assert dsn.holds == px.descriptively_strongly_near(B, A, space=SPACE).holds
    if sn:
        assert px.near(A, B)
        assert px.check_witness(sn, A, B, space=SPACE)
    if dsn:
        assert px.check_witness(dsn, A, B, space=SPACE)
        assert px.descriptively_near(A, B)
    nr = px.near(A, B)
    assert px.check_witness(nr, A, B)


def test_strong_witnesses_lists_every_contact():
    A = [R(Point(float(k), 0.0)) for k in range(4)]
    B = [R(Point(float(k), 0.0)) for k in (1, 3, 5)]
    assert px.strong_witnesses(A, B) == [Point(1.0, 0.0), Point(3.0, 0.0)]

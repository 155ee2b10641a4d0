import math

import pytest

from proxinerve.description import (DescriptorSpec, FeatureVector, describe_cell, describe_point,
                                    describe_shape, descriptive_intersection,
                                    descriptive_intersection_many, features_match)
from proxinerve.errors import ArityMismatch, ConfigError, MissingDescription
from proxinerve.geometry import ConvexPolygon, Point, Segment


def test_square_description():
    d = describe_cell(ConvexPolygon.rectangle(0, 0, 2, 1))
    assert d.as_dict() == pytest.approx({"centroid_x": 1.0, "centroid_y": 0.5, "area": 2.0,
                                         "diameter": math.sqrt(5), "side_count": 4.0})


def test_lower_dimensional_descriptions():
    assert describe_shape(Segment.make((0, 0), (3, 4))).as_dict() == {
        "centroid_x": 1.5, "centroid_y": 2.0, "area": 0.0, "diameter": 5.0, "side_count": 2.0}
    assert describe_shape(Point(1.0, 2.0))["side_count"] == 0.0
    assert describe_point((1, 2), orientation=0.5).as_dict() == {"x": 1.0, "y": 2.0, "orientation": 0.5}


def test_spec_parsing_and_side_count_is_exact():
    spec = DescriptorSpec.parse("side_count:0.5, area:0.01,diameter")
    assert spec.to_dict() == {"area": 0.01, "diameter": 1e-6, "side_count": 0.0}
    assert DescriptorSpec.from_dict(spec.to_dict()) == spec
    assert hash(spec) == hash(DescriptorSpec.parse("diameter,area:0.01,side_count"))


@pytest.mark.parametrize("text", ["area:-1", "area:x", ""])
def test_bad_specs(text):
    with pytest.raises(ConfigError):
        DescriptorSpec.parse(text)


def test_matching_respects_tolerance():
    a = describe_cell(ConvexPolygon.rectangle(0, 0, 1, 1))
    b = describe_cell(ConvexPolygon.rectangle(5, 5, 6, 6.005))
    assert features_match(a, b)  # both four-sided
    assert not features_match(a, b, DescriptorSpec({"area": 1e-3}))
    assert features_match(a, b, DescriptorSpec({"area": 1e-2}))


def test_matching_errors():
    a = describe_cell(ConvexPolygon.rectangle(0, 0, 1, 1))
    with pytest.raises(ArityMismatch):
        features_match(a, describe_point((0, 0)))
    with pytest.raises(MissingDescription):
        describe_point((0, 0))["side_count"]
    with pytest.raises(MissingDescription):
        descriptive_intersection([object()], [a])


def test_descriptive_intersection():
    sq = describe_cell(ConvexPolygon.rectangle(0, 0, 1, 1))
    tri = describe_cell(ConvexPolygon.from_points([(0, 0), (1, 0), (0, 1)]))
    sq2 = describe_cell(ConvexPolygon.rectangle(4, 4, 6, 5))
    assert descriptive_intersection([sq, tri], [sq2]) == [sq, sq2]
    assert descriptive_intersection([tri], [sq2]) == []
    assert descriptive_intersection_many([[sq, tri], [sq2], [tri, sq]]) == [sq, sq2]


def test_feature_vector_validation():
    with pytest.raises(ArityMismatch):
        FeatureVector(("a", "b"), (1.0,))
    with pytest.raises(ValueError):
        FeatureVector(("a",), (math.nan,))

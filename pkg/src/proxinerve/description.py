"""Feature vectors for regions and points, and matching them under per-feature tolerances."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from . import geometry as geo
from .errors import ArityMismatch, ConfigError, MissingDescription

REGION_FEATURES = ("centroid_x", "centroid_y", "area", "diameter", "side_count")
#: Features compared exactly whatever tolerance is requested.
EXACT_FEATURES = frozenset({"side_count"})
DEFAULT_TOL = 1e-6


@dataclass(frozen=True)
class FeatureVector:
    names: tuple
    values: tuple

    def __post_init__(self):
        if len(self.names) != len(self.values):
            raise ArityMismatch("names and values differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate feature names")
        for n, v in zip(self.names, self.values):
            if not math.isfinite(v):
                raise ValueError(f"feature {n} is not finite")

    @classmethod
    def from_mapping(cls, features: Mapping[str, float]) -> "FeatureVector":
        return cls(tuple(features), tuple(float(v) for v in features.values()))

    def __getitem__(self, name: str) -> float:
        try:
            return self.values[self.names.index(name)]
        except ValueError:
            raise MissingDescription(f"feature {name!r} not present") from None

    def __len__(self):
        return len(self.values)

    def as_dict(self) -> dict:
        return dict(zip(self.names, self.values))


@dataclass(frozen=True)
class DescriptorSpec:
    """Selected features and their absolute matching tolerances."""

    tolerances: Mapping[str, float] = field(default_factory=lambda: {"side_count": 0.0})

    def __post_init__(self):
        if not self.tolerances:
            raise ConfigError("descriptor spec selects no features")
        clean = {}
        for name, tol in self.tolerances.items():
            tol = float(tol)
            if not math.isfinite(tol) and tol != math.inf:
                raise ConfigError(f"tolerance for {name} is not a number")
            if tol < 0:
                raise ConfigError(f"tolerance for {name} is negative")
            clean[name] = 0.0 if name in EXACT_FEATURES else tol
        object.__setattr__(self, "tolerances", dict(sorted(clean.items())))

    def __hash__(self):
        return hash(tuple(self.tolerances.items()))

    @property
    def features(self) -> tuple:
        return tuple(self.tolerances)

    @classmethod
    def parse(cls, text: str) -> "DescriptorSpec":
        """Parse ``"side_count,area:0.01"``; a bare name gets the default tolerance."""
        tolerances = {}
        for item in text.split(","):
            item = item.strip()
            if not item:
                continue
            name, _, tol = item.partition(":")
            try:
                tolerances[name.strip()] = float(tol) if tol else DEFAULT_TOL
            except ValueError:
                raise ConfigError(f"bad tolerance in descriptor spec item {item!r}") from None
        return cls(tolerances)

    def to_dict(self) -> dict:
        return dict(self.tolerances)

    @classmethod
    def from_dict(cls, d: Mapping) -> "DescriptorSpec":
        return cls(dict(d))


SIDE_COUNT = DescriptorSpec({"side_count": 0.0})


def describe_polygon(poly: geo.ConvexPolygon) -> FeatureVector:
    c = geo.centroid(poly)
    return FeatureVector(REGION_FEATURES,
                         (c.x, c.y, geo.area(poly), geo.diameter(poly), float(len(poly.vertices))))


def describe_cell(cell) -> FeatureVector:
    """Region description: centroid, area, diameter and number of sides."""
    poly = getattr(cell, "polygon", cell)
    return describe_polygon(poly)


def describe_shape(shape: geo.Shape) -> FeatureVector:
    """Region-style description extended to segments (2 sides) and points (0 sides)."""
    if isinstance(shape, geo.ConvexPolygon):
        return describe_polygon(shape)
    c = geo.representative_point(shape)
    if isinstance(shape, geo.Segment):
        return FeatureVector(REGION_FEATURES, (c.x, c.y, 0.0, shape.length, 2.0))
    return FeatureVector(REGION_FEATURES, (c.x, c.y, 0.0, 0.0, 0.0))


def describe_point(p, **channels: float) -> FeatureVector:
    """Point description ``(x, y, *channels)``, e.g. a gradient orientation."""
    names = ("x", "y") + tuple(channels)
    return FeatureVector(names, (float(p[0]), float(p[1])) + tuple(float(v) for v in channels.values()))


def features_match(u: FeatureVector, v: FeatureVector, spec: DescriptorSpec = SIDE_COUNT) -> bool:
    if u.names != v.names:
        raise ArityMismatch(f"cannot compare {u.names} with {v.names}")
    for name, tol in spec.tolerances.items():
        if abs(u[name] - v[name]) > tol:
            return False
    return True


def _description(x):
    d = getattr(x, "description", x)
    if not isinstance(d, FeatureVector):
        raise MissingDescription(f"element {x!r} carries no description")
    return d


def descriptive_intersection(A: Iterable, B: Iterable, spec: DescriptorSpec = SIDE_COUNT) -> list:
    """Elements of ``A ∪ B`` whose description matches one in A and one in B.

    Elements are FeatureVectors or objects with a ``description`` attribute.
    Order is A's elements then B's, without repeats.
    """
    A, B = list(A), list(B)
    da = [_description(a) for a in A]
    db = [_description(b) for b in B]
    out, seen = [], set()
    for x in A + B:
        if x in seen:
            continue
        d = _description(x)
        if any(features_match(d, u, spec) for u in da) and any(features_match(d, v, spec) for v in db):
            out.append(x)
            seen.add(x)
    return out


def descriptive_intersection_many(families: Iterable[Iterable], spec: DescriptorSpec = SIDE_COUNT) -> list:
    """Descriptive intersection across any number of element sets."""
    families = [list(f) for f in families]
    descs = [[_description(x) for x in f] for f in families]
    out, seen = [], set()
    for f in families:
        for x in f:
            if x in seen:
                continue
            d = _description(x)
            if all(any(features_match(d, u, spec) for u in ds) for ds in descs):
                out.append(x)
                seen.add(x)
    return out

"""Nucleus clusters and maximal nucleus clusters, spatial and descriptive."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .description import SIDE_COUNT, DescriptorSpec, FeatureVector, describe_cell, features_match
from .errors import MissingDescription
from .proximity import mesh_strongly_near
from .voronoi import Tessellation

SPATIAL = "spatial"
DESCRIPTIVE = "descriptive"


@dataclass(frozen=True)
class Cluster:
    nucleus: int
    members: tuple  # sorted cell ids, nucleus included
    kind: str = SPATIAL

    def __post_init__(self):
        if self.nucleus not in self.members:
            raise ValueError("cluster members must include the nucleus")
        if self.kind not in (SPATIAL, DESCRIPTIVE):
            raise ValueError(f"unknown cluster kind {self.kind!r}")

    @property
    def degree(self) -> int:
        return len(self.members) - 1

    @property
    def arms(self) -> tuple:
        return tuple(m for m in self.members if m != self.nucleus)


def describe_tessellation(t: Tessellation) -> list:
    return [describe_cell(c) for c in t.cells]


def nucleus_cluster(t: Tessellation, n: int) -> Cluster:
    """The nucleus together with every cell sharing an edge with it."""
    t.cell(n)
    members = [n] + [a for a in t.neighbors(n) if mesh_strongly_near(a, n, t)]
    return Cluster(n, tuple(sorted(members)), SPATIAL)


def maximal_nucleus_clusters(t: Tessellation) -> list:
    """All nucleus clusters of maximum degree, ordered by nucleus id."""
    degrees = t.degrees()
    top = max(degrees)
    return [nucleus_cluster(t, i) for i, d in enumerate(degrees) if d == top]


def _checked(t, descriptions):
    if descriptions is None:
        return describe_tessellation(t)
    if len(descriptions) != len(t.cells) or not all(isinstance(d, FeatureVector) for d in descriptions):
        raise MissingDescription("need one FeatureVector per cell")
    return list(descriptions)


def descriptive_nucleus_cluster(t: Tessellation, n: int, spec: DescriptorSpec = SIDE_COUNT,
                                descriptions: Sequence[FeatureVector] | None = None) -> Cluster:
    """The nucleus with every cell, anywhere in the mesh, whose description matches it."""
    t.cell(n)
    descs = _checked(t, descriptions)
    members = [i for i, d in enumerate(descs) if i == n or features_match(d, descs[n], spec)]
    return Cluster(n, tuple(members), DESCRIPTIVE)


def maximal_descriptive_clusters(t: Tessellation, spec: DescriptorSpec = SIDE_COUNT,
                                 descriptions: Sequence[FeatureVector] | None = None) -> list:
    descs = _checked(t, descriptions)
    clusters = [descriptive_nucleus_cluster(t, i, spec, descs) for i in range(len(t.cells))]
    top = max(c.degree for c in clusters)
    return [c for c in clusters if c.degree == top]

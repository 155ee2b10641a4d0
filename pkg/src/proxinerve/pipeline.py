"""Tessellate, find MNCs, build nerves, run every verification: the analysis behind the CLI."""

from __future__ import annotations

import collections
import math
from dataclasses import dataclass, field

import numpy as np

from . import geometry as geo
from . import report_schema as rs
from .clusters import describe_tessellation, maximal_nucleus_clusters
from .description import SIDE_COUNT, DescriptorSpec
from .errors import ConfigError
from .nerve import (build_nerve, homotopy_type_proxy, verify_descriptive_nerve_theorem,
                    verify_nerve_lemma, verify_spoke_theorem)
from .voronoi import Tessellation, build_tessellation, make_bbox


@dataclass(frozen=True)
class AnalysisConfig:
    bbox: tuple | None = None
    spec: DescriptorSpec = SIDE_COUNT
    eps_geom: float = geo.EPS_GEOM
    seed: int = 0

    def __post_init__(self):
        if not (self.eps_geom > 0 and math.isfinite(self.eps_geom)):
            raise ConfigError("eps_geom must be positive")
        if self.bbox is not None:
            make_bbox(self.bbox)


def padded_bbox(points, pad: float = 0.1) -> tuple:
    """Bounding box of the points grown by ``pad`` of its extent on each side."""
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    ext = hi - lo
    fallback = ext.max() * pad if ext.max() > 0 else 1.0  # collinear or single site
    margin = np.where(ext > 0, ext * pad, fallback)
    lo, hi = lo - margin, hi + margin
    return (float(lo[0]), float(lo[1]), float(hi[0]), float(hi[1]))


@dataclass
class Analysis:
    tessellation: Tessellation
    spec: DescriptorSpec
    descriptions: list
    mncs: list
    nerves: list
    lemma: list = field(default_factory=list)
    spokes: list = field(default_factory=list)
    homotopy: list = field(default_factory=list)
    descriptive: object = None

    @property
    def passed(self) -> bool:
        """All theorem checks hold; an unmet precondition is not a failure."""
        return (all(v.holds for v in self.lemma)
                and all(v.holds for vs in self.spokes for v in vs)
                and all(h.passed for h in self.homotopy)
                and (self.descriptive.holds or self.descriptive.tag == "precondition_unmet"))

    def to_report(self) -> dict:
        t = self.tessellation
        degrees = t.degrees()
        hist = collections.Counter(degrees)
        nerves = []
        for nv, lemma, spokes, h in zip(self.nerves, self.lemma, self.spokes, self.homotopy):
            nerves.append({
                "nerve": rs.nerve_to_dict(nv),
                "nucleus_touches_boundary": t.cells[nv.cluster.nucleus].touches_boundary,
                "lemma": rs.verdict_to_dict(lemma),
                "spoke_theorem": [rs.verdict_to_dict(v) for v in spokes],
                "homotopy": rs.homotopy_to_dict(h),
            })
        return {
            "kind": "analysis",
            "spec": self.spec.to_dict(),
            "summary": {"cells": len(t.cells),
                        "boundary_cells": sum(c.touches_boundary for c in t.cells),
                        "adjacencies": len(t.adjacency)},
            "degree_histogram": [[d, hist[d]] for d in sorted(hist)],
            "mncs": [rs.cluster_to_dict(c) for c in self.mncs],
            "nerves": nerves,
            "descriptive_theorem": rs.verdict_to_dict(self.descriptive),
            "mesh": rs.mesh_to_dict(t, self.descriptions),
            "passed": self.passed,
        }


def analyze(sites, bbox=None, spec: DescriptorSpec = SIDE_COUNT, eps: float = geo.EPS_GEOM) -> Analysis:
    sites = np.asarray(sites, dtype=float).reshape(-1, 2)
    if len(sites) == 0:
        raise ConfigError("no sites to analyze")
    if bbox is None:
        bbox = padded_bbox(sites)
    t = build_tessellation(sites, bbox, eps)
    descs = describe_tessellation(t)
    mncs = maximal_nucleus_clusters(t)
    nerves = [build_nerve(c, t) for c in mncs]
    return Analysis(
        tessellation=t, spec=spec, descriptions=descs, mncs=mncs, nerves=nerves,
        lemma=[verify_nerve_lemma(nv, t) for nv in nerves],
        spokes=[verify_spoke_theorem(nv, t, spec, descs) for nv in nerves],
        homotopy=[homotopy_type_proxy(nv, t) for nv in nerves],
        descriptive=verify_descriptive_nerve_theorem(nerves, t, spec, descs),
    )

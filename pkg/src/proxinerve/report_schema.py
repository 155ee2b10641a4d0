"""Canonical, versioned JSON for meshes, clusters, nerves, verdicts and axiom reports.

``emit`` writes sorted keys, two-space indentation, LF line endings and
floats with 17 significant digits, so binary64 values survive a round trip
bit for bit and identical inputs give identical bytes.
"""

from __future__ import annotations

import json
import math

from . import geometry as geo
from .description import FeatureVector
from .errors import ReportParseError, SchemaVersionMismatch
from .geometry import ConvexPolygon, Point, Segment
from .proximity import ProximityVerdict, Region, Witness
from .voronoi import Cell, Site, Tessellation

SCHEMA_VERSION = 1


# --- text ---------------------------------------------------------------------


def _float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"cannot emit non-finite float {x!r}")
    s = "%.17g" % x
    if not any(c in s for c in ".en"):
        s += ".0"
    return s


def _encode(obj, indent: int) -> str:
    pad, inner = "  " * indent, "  " * (indent + 1)
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _float(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        keys = sorted(obj)
        if not all(isinstance(k, str) for k in keys):
            raise TypeError("report keys must be strings")
        body = ",\n".join(f"{inner}{json.dumps(k, ensure_ascii=False)}: {_encode(obj[k], indent + 1)}"
                          for k in keys)
        return "{\n" + body + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(_encode(v, 0) for v in obj) + "]"
        return "[\n" + ",\n".join(inner + _encode(v, indent + 1) for v in obj) + "\n" + pad + "]"
    if hasattr(obj, "item"):  # numpy scalar
        return _encode(obj.item(), indent)
    raise TypeError(f"cannot emit {type(obj).__name__}")


def emit(report: dict) -> str:
    """Canonical JSON text for a report; a ``schema`` field is added if absent."""
    if "schema" not in report:
        report = {"schema": SCHEMA_VERSION, **report}
    return _encode(report, 0) + "\n"


def parse(text: str) -> dict:
    try:
        report = json.loads(text)
    except json.JSONDecodeError as e:
        raise ReportParseError(f"malformed report JSON: {e.msg} at line {e.lineno} column {e.colno}",
                               e.pos) from None
    if not isinstance(report, dict):
        raise ReportParseError("report must be a JSON object", 0)
    version = report.get("schema")
    if version != SCHEMA_VERSION:
        raise SchemaVersionMismatch(f"unsupported schema version {version!r}; expected {SCHEMA_VERSION}")
    return report


# --- shapes and regions -------------------------------------------------------


def shape_to_dict(shape) -> dict:
    if isinstance(shape, Point):
        return {"type": "point", "coords": [shape.x, shape.y]}
    if isinstance(shape, Segment):
        return {"type": "segment", "coords": [list(shape.a), list(shape.b)]}
    if isinstance(shape, ConvexPolygon):
        return {"type": "polygon", "coords": [list(v) for v in shape.vertices]}
    raise TypeError(f"not a shape: {shape!r}")


def shape_from_dict(d: dict):
    kind, c = d["type"], d["coords"]
    if kind == "point":
        return Point(float(c[0]), float(c[1]))
    if kind == "segment":
        return Segment(Point(*map(float, c[0])), Point(*map(float, c[1])))
    if kind == "polygon":
        return ConvexPolygon(tuple(Point(float(x), float(y)) for x, y in c))
    raise ValueError(f"unknown shape type {kind!r}")


def features_to_dict(fv: FeatureVector | None):
    if fv is None:
        return None
    return {"names": list(fv.names), "values": list(fv.values)}


def features_from_dict(d):
    if d is None:
        return None
    return FeatureVector(tuple(d["names"]), tuple(float(v) for v in d["values"]))


def region_to_dict(r: Region) -> dict:
    return {"shape": shape_to_dict(r.shape), "description": features_to_dict(r.description),
            "label": r.label}


def region_from_dict(d: dict) -> Region:
    return Region(shape_from_dict(d["shape"]), features_from_dict(d.get("description")), d.get("label"))


# --- meshes ---------------------------------------------------------------------


def mesh_to_dict(t: Tessellation, descriptions=None) -> dict:
    """SerializedMesh: bbox, sites, cell polygons, adjacency witnesses and feature table."""
    from .clusters import describe_tessellation
    descs = descriptions if descriptions is not None else describe_tessellation(t)
    return {
        "bbox": [list(v) for v in t.bbox.vertices],
        "sites": [list(s.position) for s in t.sites],
        "cells": [{"site": c.site, "vertices": [list(v) for v in c.polygon.vertices],
                   "touches_boundary": c.touches_boundary} for c in t.cells],
        "adjacency": [{"pair": [i, j], "witness": [list(seg.a), list(seg.b)]}
                      for (i, j), seg in t.adjacency.items()],
        "eps_edge": t.eps_edge,
        "features": {"names": list(descs[0].names) if descs else [],
                     "rows": [list(d.values) for d in descs]},
    }


def mesh_from_dict(d: dict) -> Tessellation:
    bbox = ConvexPolygon(tuple(Point(float(x), float(y)) for x, y in d["bbox"]))
    sites = tuple(Site(k, Point(float(x), float(y))) for k, (x, y) in enumerate(d["sites"]))
    cells = tuple(Cell(c["site"], ConvexPolygon(tuple(Point(float(x), float(y)) for x, y in c["vertices"])),
                       bool(c["touches_boundary"])) for c in d["cells"])
    adjacency = {tuple(a["pair"]): Segment(Point(*map(float, a["witness"][0])),
                                           Point(*map(float, a["witness"][1])))
                 for a in d["adjacency"]}
    return Tessellation(bbox, sites, cells, adjacency, float(d["eps_edge"]))


# --- analysis artifacts -----------------------------------------------------------


def cluster_to_dict(c) -> dict:
    return {"nucleus": c.nucleus, "degree": c.degree, "members": list(c.members), "kind": c.kind}


def cluster_from_dict(d: dict):
    from .clusters import Cluster
    return Cluster(int(d["nucleus"]), tuple(d["members"]), d["kind"])


def nerve_to_dict(nv) -> dict:
    cx = nv.complex
    return {
        "cluster": cluster_to_dict(nv.cluster),
        "spokes": [{"arm": s.arm, "witness": [list(s.witness.a), list(s.witness.b)]} for s in nv.spokes],
        "simplices": [list(s) for s in cx.simplices],
        "f_vector": cx.f_vector(),
        "euler_characteristic": cx.euler_characteristic(),
    }


def nerve_from_dict(d: dict):
    from .nerve import Nerve, SimplicialComplex, Spoke
    c = cluster_from_dict(d["cluster"])
    spokes = tuple(Spoke(c.nucleus, s["arm"], Segment(Point(*map(float, s["witness"][0])),
                                                      Point(*map(float, s["witness"][1]))))
                   for s in d["spokes"])
    return Nerve(c, spokes, SimplicialComplex.from_simplices(tuple(s) for s in d["simplices"]))


def _witness_to_json(w):
    if w is None:
        return None
    if isinstance(w, Witness):
        shape = w.shape
        if isinstance(shape, (Point, Segment, ConvexPolygon)):
            shape = shape_to_dict(shape)
        return {"left": w.left, "right": w.right, "shape": shape}
    if isinstance(w, (Point, Segment, ConvexPolygon)):
        return shape_to_dict(w)
    if isinstance(w, (list, tuple)):
        return [_witness_to_json(v) for v in w]
    return w


def verdict_to_dict(v: ProximityVerdict) -> dict:
    return {"relation": v.relation, "holds": v.holds, "tag": v.tag, "witness": _witness_to_json(v.witness)}


def verdict_from_dict(d: dict) -> ProximityVerdict:
    w = d["witness"]
    if isinstance(w, dict) and "left" in w:
        shape = w["shape"]
        if isinstance(shape, dict) and "type" in shape:
            shape = shape_from_dict(shape)
        w = Witness(w["left"], w["right"], shape)
    elif isinstance(w, dict) and "type" in w:
        w = shape_from_dict(w)
    elif isinstance(w, list):
        w = tuple(shape_from_dict(x) if isinstance(x, dict) and "type" in x else x for x in w)
    return ProximityVerdict(d["relation"], bool(d["holds"]), w, d["tag"])


def homotopy_to_dict(h) -> dict:
    return {"euler_complex": h.euler_complex, "cone": h.cone, "components": h.components,
            "boundary_loops": h.boundary_loops, "euler_union": h.euler_union, "passed": h.passed}


def axiom_reports_to_dict(reports, seed: int, n: int) -> dict:
    return {
        "kind": "axiom_suite",
        "seed": seed,
        "trials": n,
        "method": ("randomized finite families of convex regions in a 10x10 box plus forced "
                   "edge cases; quantification over all subsets is sampled, not exhaustive"),
        "reports": [r.to_dict() for r in sorted(reports, key=lambda r: r.axiom)],
        "passed": all(r.passed for r in reports),
    }


def bbox_of(t: Tessellation):
    return list(geo.bounds_of(t.bbox))

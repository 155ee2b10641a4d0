import json
import struct
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _fixtures import GRID3, GRID3_BOX, UNIT, random_sites
from proxinerve import report_schema as rs
from proxinerve.errors import ReportParseError, SchemaVersionMismatch
from proxinerve.geometry import ConvexPolygon, Point, Segment
from proxinerve.pipeline import analyze
from proxinerve.proximity import Region, strongly_near
from proxinerve.voronoi import build_tessellation

GOLDEN = Path(__file__).parent / "golden" / "grid3_analysis.json"


def test_emit_is_idempotent():
    text = rs.emit(analyze(random_sites(2), UNIT).to_report())
    assert rs.emit(rs.parse(text)) == text
    assert text.endswith("}\n") and "\r" not in text


def test_golden_grid_report_is_byte_stable():
    assert rs.emit(analyze(GRID3, GRID3_BOX).to_report()) == GOLDEN.read_text(encoding="utf-8")


def test_schema_version_is_enforced():
    with pytest.raises(SchemaVersionMismatch):
        rs.parse('{"schema": 999}')
    with pytest.raises(SchemaVersionMismatch):
        rs.parse('{"kind": "analysis"}')


def test_malformed_json_reports_position():
    with pytest.raises(ReportParseError) as err:
        rs.parse('{"schema": 1,\n  "x": }')
    assert err.value.position == 21 and "line 2" in str(err.value)


def test_canonical_layout():
    assert rs.emit({"b": 1, "a": [0.1, 2.0], "c": {}}) == (
        '{\n  "a": [0.10000000000000001, 2.0],\n  "b": 1,\n  "c": {},\n  "schema": 1\n}\n')
    with pytest.raises(ValueError):
        rs.emit({"x": float("nan")})


@settings(max_examples=300)
@given(st.floats(allow_nan=False, allow_infinity=False))
def test_floats_round_trip_bit_for_bit(x):
    back = rs.parse(rs.emit({"v": x}))["v"]
    assert struct.pack("<d", float(back)) == struct.pack("<d", x)


def test_mesh_round_trip():
    t = build_tessellation(random_sites(6), UNIT)
    d = json.loads(json.dumps(rs.parse(rs.emit({"mesh": rs.mesh_to_dict(t)}))["mesh"]))
    assert rs.mesh_from_dict(d) == t


def test_nerve_and_verdict_round_trip():
    a = analyze(GRID3, GRID3_BOX)
    nv = a.nerves[0]
    back = rs.nerve_from_dict(rs.parse(rs.emit({"n": rs.nerve_to_dict(nv)}))["n"])
    assert back == nv
    sq = ConvexPolygon.rectangle
    v = strongly_near([Region(sq(0, 0, 1, 1))], [Region(sq(0.5, 0, 2, 1))])
    assert rs.verdict_from_dict(rs.parse(rs.emit({"v": rs.verdict_to_dict(v)}))["v"]) == v


@pytest.mark.parametrize("shape", [Point(1.5, -2.0), Segment.make((0, 0), (1, 3)),
                                   ConvexPolygon.rectangle(0, 0, 2, 1)])
def test_shape_round_trip(shape):
    assert rs.shape_from_dict(rs.shape_to_dict(shape)) == shape

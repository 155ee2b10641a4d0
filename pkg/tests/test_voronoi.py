import numpy as np
import pytest

from _fixtures import GRID3, GRID3_BOX, TWO_SITE, TWO_SITE_BOX, UNIT, random_sites
from _oracles import mirrored_voronoi
from proxinerve import geometry as geo
from proxinerve.errors import CellNotInTessellation, ConfigError, DuplicateSite, SiteOutsideBox
from proxinerve.geometry import ConvexPolygon, Segment
from proxinerve.voronoi import build_tessellation, locate, nearest_site_oracle, raster_points


def test_two_sites_split_the_box_in_half():
    t = build_tessellation(TWO_SITE, TWO_SITE_BOX)
    assert [geo.area(c.polygon) for c in t.cells] == pytest.approx([4.0, 4.0])
    assert list(t.adjacency) == [(0, 1)]
    assert t.shared_segment(1, 0) == Segment.make((2, 0), (2, 2))
    assert all(c.touches_boundary for c in t.cells)


def test_single_site_cell_is_the_box():
    t = build_tessellation([(0.3, 0.3)], UNIT)
    assert t.cells[0].polygon == ConvexPolygon.rectangle(*UNIT)
    assert t.adjacency == {} and t.degrees() == [0]


def test_grid_cells_are_unit_squares():
    t = build_tessellation(GRID3, GRID3_BOX)
    for s, c in zip(GRID3, t.cells):
        assert c.polygon == ConvexPolygon.rectangle(s[0] - 0.5, s[1] - 0.5, s[0] + 0.5, s[1] + 0.5)
    assert t.degrees() == [2, 3, 2, 3, 4, 3, 2, 3, 2]
    assert t.neighbors(4) == [1, 3, 5, 7]
    assert not t.cells[4].touches_boundary
    # diagonal cells meet only at a corner
    assert t.shared_segment(0, 4) is None


@pytest.mark.parametrize("seed", [0, 3, 10, 17])
def test_cells_and_adjacency_match_scipy(seed):
    sites = random_sites(seed)
    t = build_tessellation(sites, UNIT)
    areas, adjacency = mirrored_voronoi(sites, UNIT, t.eps_edge)
    assert [geo.area(c.polygon) for c in t.cells] == pytest.approx(areas, abs=1e-12)
    assert set(t.adjacency) == adjacency


@pytest.mark.parametrize("seed", [1, 2])
def test_membership_matches_raster_oracle(seed):
    sites = random_sites(seed)
    t = build_tessellation(sites, UNIT)
    oracle = nearest_site_oracle(sites, UNIT, 100).ravel()
    got = locate(t, raster_points(UNIT, 100).reshape(-1, 2))
    assert (got == oracle).mean() >= 0.999


def test_areas_partition_the_box():
    t = build_tessellation(random_sites(5), UNIT)
    assert sum(geo.area(c.polygon) for c in t.cells) == pytest.approx(1.0, rel=1e-12)


def test_construction_is_deterministic():
    s = random_sites(9)
    assert build_tessellation(s, UNIT) == build_tessellation(s.copy(), UNIT)


def test_input_errors():
    with pytest.raises(DuplicateSite):
        build_tessellation([(0.2, 0.2), (0.5, 0.5), (0.2, 0.2)], UNIT)
    with pytest.raises(SiteOutsideBox):
        build_tessellation([(0.2, 0.2), (1.5, 0.5)], UNIT)
    with pytest.raises(ConfigError):
        build_tessellation([(0.2, 0.2)], (0, 0, 0, 1))
    t = build_tessellation(GRID3, GRID3_BOX)
    with pytest.raises(CellNotInTessellation):
        t.cell(9)


def test_locate_outside_box_is_minus_one():
    t = build_tessellation(GRID3, GRID3_BOX)
    assert locate(t, [(4, 4), (0.1, 0.1), (2.4, 2.4)]).tolist() == [-1, 0, 8]

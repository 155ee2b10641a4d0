"""MNC nerves built from spokes, with checks of their nerve-theoretic properties."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

from . import geometry as geo
from .clusters import SPATIAL, Cluster, describe_tessellation
from .description import SIDE_COUNT, DescriptorSpec, descriptive_intersection_many, features_match
from .errors import ClusterTooLarge, DescriptiveClusterHasNoSpokes
from .geometry import Contact
from .proximity import ProximityVerdict, Region, Witness, descriptively_near, near, strongly_near
from .voronoi import Tessellation

MAX_SUBSETS = 1 << 20


@dataclass(frozen=True)
class Spoke:
    nucleus: int
    arm: int
    witness: geo.Segment


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple
    simplices: tuple  # sorted vertex tuples, ordered by (dimension, lexicographic)

    @classmethod
    def from_simplices(cls, simplices) -> "SimplicialComplex":
        simplices = sorted({tuple(sorted(s)) for s in simplices if s}, key=lambda s: (len(s), s))
        vertices = tuple(sorted({v for s in simplices for v in s}))
        return cls(vertices, tuple(simplices))

    def __contains__(self, simplex) -> bool:
        return tuple(sorted(simplex)) in self._index

    @property
    def _index(self):
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = frozenset(self.simplices)
            object.__setattr__(self, "_idx", idx)
        return idx

    @property
    def dimension(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def f_vector(self) -> list:
        f = [0] * (self.dimension + 1)
        for s in self.simplices:
            f[len(s) - 1] += 1
        return f

    def euler_characteristic(self) -> int:
        return sum((-1) ** (len(s) - 1) for s in self.simplices)

    def is_downward_closed(self) -> bool:
        if any((v,) not in self for v in self.vertices):
            return False
        return all(face in self for s in self.simplices if len(s) > 1
                   for face in itertools.combinations(s, len(s) - 1))

    def is_cone(self, apex) -> bool:
        """Every simplex extended by ``apex`` is again a simplex."""
        return all(tuple(sorted(set(s) | {apex})) in self for s in self.simplices)


@dataclass(frozen=True)
class Nerve:
    cluster: Cluster
    spokes: tuple
    complex: SimplicialComplex


def build_spokes(c: Cluster, t: Tessellation) -> list:
    if c.kind != SPATIAL:
        raise DescriptiveClusterHasNoSpokes("spokes need edge contact; this cluster is descriptive")
    spokes = []
    for arm in c.arms:
        seg = t.shared_segment(c.nucleus, arm)
        if seg is None:
            raise ValueError(f"cell {arm} shares no edge with nucleus {c.nucleus}")
        spokes.append(Spoke(c.nucleus, arm, seg))
    return spokes


def build_nerve_complex(c: Cluster, t: Tessellation, max_subsets: int = MAX_SUBSETS) -> SimplicialComplex:
    """Subsets of cluster members whose closed cells have a common point."""
    if c.kind != SPATIAL:
        raise DescriptiveClusterHasNoSpokes("nerves are built for spatial clusters only")
    members = list(c.members)
    if 2 ** len(members) > max_subsets:
        raise ClusterTooLarge(f"{len(members)} members exceed the subset enumeration cap")
    polys = [t.cells[m].polygon for m in members]
    simplices = []

    # depth-first over subsets; a subset with empty intersection has no simplex supersets
    def grow(simplex, shape, start):
        simplices.append(simplex)
        for k in range(start, len(members)):
            inter = geo.intersect(shape, polys[k])
            if inter is not None:
                grow(simplex + (members[k],), inter, k + 1)

    for k, m in enumerate(members):
        grow((m,), polys[k], k + 1)
    return SimplicialComplex.from_simplices(simplices)


def build_nerve(c: Cluster, t: Tessellation) -> Nerve:
    return Nerve(c, tuple(build_spokes(c, t)), build_nerve_complex(c, t))


def verify_nerve_lemma(nv: Nerve, t: Tessellation) -> ProximityVerdict:
    """The spokes (arm ∪ nucleus) have a common intersection containing the nucleus."""
    nucleus = t.cells[nv.cluster.nucleus].polygon
    if not nv.spokes:
        pieces = [nucleus]
    else:
        pieces = [t.cells[nv.spokes[0].arm].polygon, nucleus]
        for spoke in nv.spokes[1:]:
            arm = t.cells[spoke.arm].polygon
            nxt = []
            for p in pieces:
                for q in (arm, nucleus):
                    r = geo.intersect(p, q)
                    if r is not None:
                        nxt.append(r)
            pieces = _prune(nxt)
    holds = bool(pieces) and any(isinstance(p, geo.ConvexPolygon) and geo.contains_shape(p, nucleus)
                                 for p in pieces)
    return ProximityVerdict("nerve_lemma", holds, tuple(pieces) if holds else None,
                            tag="nucleus_in_common_intersection" if holds else None)


def _prune(pieces):
    """Drop pieces contained in another piece."""
    out = []
    for i, p in enumerate(pieces):
        dominated = any(
            geo.contains_shape(q, p) and (not geo.contains_shape(p, q) or j < i)
            for j, q in enumerate(pieces) if j != i)
        if not dominated:
            out.append(p)
    return out


def _spoke_set(spoke: Spoke, t: Tessellation, descs) -> tuple:
    return (Region(t.cells[spoke.arm].polygon, descs[spoke.arm], f"cell{spoke.arm}"),
            Region(t.cells[spoke.nucleus].polygon, descs[spoke.nucleus], f"cell{spoke.nucleus}"))


def verify_spoke_theorem(nv: Nerve, t: Tessellation, spec: DescriptorSpec = SIDE_COUNT,
                         descriptions=None) -> list:
    """For every spoke pair, strong contact implies nearness and descriptive nearness."""
    if len(nv.spokes) < 2:
        return [ProximityVerdict("spoke_theorem", True, (), tag="vacuous")]
    descs = descriptions if descriptions is not None else describe_tessellation(t)
    out = []
    for s1, s2 in itertools.combinations(nv.spokes, 2):
        A, B = _spoke_set(s1, t, descs), _spoke_set(s2, t, descs)
        sn = strongly_near(A, B, mesh_contact=True, eps_edge=t.eps_edge)
        nr = near(A, B)
        dn = descriptively_near(A, B, spec)
        holds = (not sn.holds) or (nr.holds and dn.holds)
        out.append(ProximityVerdict("spoke_theorem", holds, (s1.arm, s2.arm),
                                    tag="pass" if holds else "counterexample"))
    return out


@dataclass(frozen=True)
class HomotopyReport:
    euler_complex: int
    cone: bool
    components: int
    boundary_loops: int
    euler_union: int

    @property
    def holes(self) -> int:
        return self.components - self.euler_union

    @property
    def passed(self) -> bool:
        return (self.euler_complex == 1 and self.cone and self.components == 1
                and self.boundary_loops == 1 and self.euler_union == 1)


def homotopy_type_proxy(nv: Nerve, t: Tessellation) -> HomotopyReport:
    """Euler characteristics of the nerve and of the union of member cells."""
    polys = [t.cells[m].polygon for m in nv.cluster.members]
    components, loops, chi_union = union_topology(polys)
    return HomotopyReport(nv.complex.euler_characteristic(), nv.complex.is_cone(nv.cluster.nucleus),
                          components, loops, chi_union)


def _find(parent, i):
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


def union_topology(polys: Sequence[geo.ConvexPolygon], eps: float = geo.EPS_GEOM * 10):
    """(components, boundary loops, Euler characteristic) of a union of interior-disjoint polygons.

    The polygons are glued into a 2-complex: shared vertices are merged,
    edges are split at T-junctions, and chi = V - E + F.
    """
    n = len(polys)
    parent = list(range(n))
    for i, j in itertools.combinations(range(n), 2):
        if geo.classify_contact(polys[i], polys[j]) is not Contact.DISJOINT:
            parent[_find(parent, i)] = _find(parent, j)
    components = len({_find(parent, i) for i in range(n)})

    raw = [v for p in polys for v in p.vertices]
    vparent = list(range(len(raw)))
    for i, j in itertools.combinations(range(len(raw)), 2):
        if raw[i].dist(raw[j]) <= eps:
            vparent[_find(vparent, i)] = _find(vparent, j)
    roots = sorted({_find(vparent, i) for i in range(len(raw))})
    vid = {r: k for k, r in enumerate(roots)}
    coords = [raw[r] for r in roots]

    edge_use = {}
    offset = 0
    for p in polys:
        ids = [vid[_find(vparent, offset + k)] for k in range(len(p.vertices))]
        offset += len(p.vertices)
        for k in range(len(ids)):
            u, v = ids[k], ids[(k + 1) % len(ids)]
            chain = _split_edge(u, v, coords, eps)
            for a, b in zip(chain, chain[1:]):
                key = (min(a, b), max(a, b))
                edge_use[key] = edge_use.get(key, 0) + 1
    used = {v for e in edge_use for v in e}
    chi = len(used) - len(edge_use) + n

    boundary = [e for e, k in edge_use.items() if k == 1]
    bparent = {v: v for e in boundary for v in e}
    for a, b in boundary:
        bparent[_find(bparent, a)] = _find(bparent, b)
    loops = len({_find(bparent, v) for v in bparent})
    return components, loops, chi


def _split_edge(u, v, coords, eps):
    a, b = coords[u], coords[v]
    dx, dy = b.x - a.x, b.y - a.y
    length2 = dx * dx + dy * dy
    inner = []
    for w, c in enumerate(coords):
        if w in (u, v):
            continue
        t = ((c.x - a.x) * dx + (c.y - a.y) * dy) / length2
        if 0 < t < 1 and geo._line_distance(c, a, b) <= eps:
            inner.append((t, w))
    return [u] + [w for _, w in sorted(inner)] + [v]


def verify_descriptive_nerve_theorem(nerves: Sequence[Nerve], t: Tessellation,
                                     spec: DescriptorSpec = SIDE_COUNT,
                                     descriptions=None) -> ProximityVerdict:
    """Maximal nerves whose nuclei match descriptively have a nonempty descriptive intersection.

    Reports ``precondition_unmet`` (not a pass) when the nuclei descriptions differ.
    """
    rel = "descriptive_nerve_theorem"
    if len(nerves) < 2:
        return ProximityVerdict(rel, True, (), tag="vacuous")
    descs = descriptions if descriptions is not None else describe_tessellation(t)
    nuclei = [nv.cluster.nucleus for nv in nerves]
    if not all(features_match(descs[nuclei[0]], descs[n], spec) for n in nuclei[1:]):
        return ProximityVerdict(rel, False, tag="precondition_unmet")
    families = [[Region(t.cells[m].polygon, descs[m], f"cell{m}") for m in nv.cluster.members]
                for nv in nerves]
    common = descriptive_intersection_many(families, spec)
    if not common:
        return ProximityVerdict(rel, False, tag="fail")
    return ProximityVerdict(rel, True, Witness(nuclei[0], nuclei[1], len(common)), tag="pass")

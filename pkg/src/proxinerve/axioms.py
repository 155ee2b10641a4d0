"""Randomized finite-model checking of the proximity axioms and their consequences.

Axioms quantified over all subsets are exercised on seeded random families
of convex regions inside a 10 x 10 box, plus a fixed list of edge cases.
Premises that need set-theoretic facts (``A ∩ B ≠ ∅``, interiors meeting,
containment) are evaluated by a candidate-point route that is independent
of the clipping code behind the relations under test.

Two conventions apply throughout:

* the whole space X is the configuration's full universe of elements, which
  includes the bounding box itself; the box element only ever enters an
  operand as part of X, because a set holding the box but not every
  description would cover the space without describing all of it;
* (P4)/(dP4) read "{b} δ C for each b ∈ B" element-wise, with the premise
  established by containment (every element of B lies inside an element of
  C); descriptive matching is assumed transitive, which holds for the exact
  or 1e-6 tolerances generated here.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

import numpy as np

from . import geometry as geo
from . import proximity as px
from .description import DescriptorSpec, FeatureVector, describe_shape, descriptive_intersection
from .errors import UnknownAxiom
from .geometry import ConvexPolygon, Point, Segment
from .proximity import LinearDescriptor, Region

SPACE = (0.0, 0.0, 10.0, 10.0)

AXIOM_IDS = (
    "P0", "P1", "P2", "P3", "P4", "P5",
    "dP0", "dP1", "dP2", "dP3", "dP4", "dP5",
    "snN0", "snN1", "snN2", "snN3", "snN4", "snN5", "snN6",
    "dsnP0", "dsnP1", "dsnP2", "dsnP3", "dsnP4", "dsnP5", "dsnP6",
    "Prop2.1", "Prop2.2", "Prop2.3",
)
SUITE_EXTRAS = ("Thm3.2", "oscillating_curve")
#: Reported but never counted as failures: separatedness is optional.
INFORMATIONAL = frozenset({"P5", "dP5"})


@dataclass(frozen=True)
class Configuration:
    """One finite model: a universe of described regions and index subsets of it."""

    index: int
    universe: tuple
    A: tuple
    B: tuple
    C: tuple
    family: tuple
    spec: DescriptorSpec
    phi: LinearDescriptor
    space: ConvexPolygon = field(default_factory=lambda: ConvexPolygon.rectangle(*SPACE))

    def take(self, idx) -> tuple:
        return tuple(self.universe[i] for i in idx)

    @property
    def sets(self):
        return self.take(self.A), self.take(self.B), self.take(self.C)

    @property
    def X(self) -> tuple:
        return self.universe

    @property
    def points(self) -> tuple:
        return tuple(r for r in self.universe if r.dim == 0)

    def to_dict(self) -> dict:
        from .report_schema import region_to_dict
        return {
            "index": self.index,
            "universe": [region_to_dict(r) for r in self.universe],
            "A": list(self.A), "B": list(self.B), "C": list(self.C),
            "family": [list(f) for f in self.family],
            "spec": self.spec.to_dict(),
            "phi": {"matrix": [list(row) for row in self.phi.matrix], "tol": self.phi.tol},
            "space": [list(p) for p in self.space.vertices],
        }

    @classmethod
    def from_dict(cls, d) -> "Configuration":
        from .report_schema import region_from_dict
        return cls(
            index=int(d["index"]),
            universe=tuple(region_from_dict(r) for r in d["universe"]),
            A=tuple(d["A"]), B=tuple(d["B"]), C=tuple(d["C"]),
            family=tuple(tuple(f) for f in d["family"]),
            spec=DescriptorSpec.from_dict(d["spec"]),
            phi=LinearDescriptor(tuple(tuple(float(v) for v in row) for row in d["phi"]["matrix"]),
                                 float(d["phi"]["tol"])),
            space=ConvexPolygon.from_points(d["space"]),
        )


@dataclass
class AxiomReport:
    axiom: str
    trials: int = 0
    failures: list = field(default_factory=list)
    informational: bool = False

    @property
    def passed(self) -> bool:
        return self.informational or not self.failures

    def to_dict(self) -> dict:
        return {"axiom": self.axiom, "trials": self.trials, "failures": list(self.failures),
                "informational": self.informational, "passed": self.passed}


# --- generation -------------------------------------------------------------


def _described(shape, rng: random.Random, donors=()) -> Region:
    desc = describe_shape(shape)
    if isinstance(shape, Point) and donors and rng.random() < 0.3:
        desc = rng.choice(donors).description  # a point sampling a region's description
    return Region(shape, desc)


def _random_polygon(rng):
    while True:
        cx, cy = rng.uniform(1.5, 8.5), rng.uniform(1.5, 8.5)
        r = rng.uniform(0.3, 1.5)
        k = rng.randint(3, 6)
        angles = sorted(rng.uniform(0, 2 * math.pi) for _ in range(k))
        hull = geo.convex_hull([(cx + r * math.cos(a), cy + r * math.sin(a)) for a in angles])
        if len(hull) >= 3:
            poly = ConvexPolygon.from_points(hull)
            if geo.area(poly) > 0.05:
                return poly


def _lattice_rect(rng, near=None):
    w, h = rng.randint(1, 3), rng.randint(1, 3)
    if near is None:
        x0, y0 = rng.randint(0, 10 - w), rng.randint(0, 10 - h)
    else:
        nx0, ny0, nx1, ny1 = (int(round(v)) for v in near.bounds)
        mode = rng.choice(["edge", "corner", "overlap"])
        if mode == "edge":
            x0, y0 = nx1, ny0
        elif mode == "corner":
            x0, y0 = nx1, ny1
        else:
            x0, y0 = nx0 + 1 if nx1 - nx0 > 1 else nx0, ny0
        x0, y0 = min(x0, 10 - w), min(y0, 10 - h)
    return ConvexPolygon.rectangle(x0, y0, x0 + w, y0 + h)


def _random_spec(rng) -> DescriptorSpec:
    choices = [("side_count",), ("area",), ("side_count", "area"), ("diameter",),
               ("side_count", "diameter"), ("centroid_x", "centroid_y")]
    names = rng.choice(choices)
    tol = rng.choice([0.0, 1e-6])
    return DescriptorSpec({n: tol for n in names})


def _random_phi(rng) -> LinearDescriptor:
    if rng.random() < 0.5:
        a = rng.uniform(0, 2 * math.pi)
        return LinearDescriptor(((math.cos(a), math.sin(a)),), 0.0)
    a, s = rng.uniform(0, 2 * math.pi), rng.uniform(0.5, 2.0)
    return LinearDescriptor(((s * math.cos(a), -s * math.sin(a)), (math.sin(a), math.cos(a))), 0.0)


def _random_configuration(seed: int, index: int) -> Configuration:
    rng = random.Random(f"{seed}:{index}")
    polys = []
    for _ in range(rng.randint(1, 3)):
        polys.append(_lattice_rect(rng))
    for _ in range(rng.randint(0, 2)):
        polys.append(_lattice_rect(rng, near=rng.choice(polys)))
    for _ in range(rng.randint(1, 3)):
        polys.append(_random_polygon(rng))
    if rng.random() < 0.5:
        src = rng.choice(polys)
        dx, dy = rng.uniform(-2, 2), rng.uniform(-2, 2)
        moved = [(p.x + dx, p.y + dy) for p in src.vertices]
        if all(0 <= x <= 10 and 0 <= y <= 10 for x, y in moved):
            polys.append(ConvexPolygon.from_points(moved))
    regions = [_described(p, rng) for p in polys]
    donors = tuple(regions)
    others = []
    for _ in range(rng.randint(1, 3)):
        roll = rng.random()
        if roll < 0.35:
            src = rng.choice(polys)
            others.append(rng.choice(src.vertices))
        elif roll < 0.6:
            others.append(geo.centroid(rng.choice(polys)))
        elif roll < 0.8:
            others.append(Point(float(rng.randint(0, 10)), float(rng.randint(0, 10))))
        else:
            others.append(Point(rng.uniform(0.5, 9.5), rng.uniform(0.5, 9.5)))
    for _ in range(rng.randint(0, 2)):
        if rng.random() < 0.5:
            a, b = rng.choice(rng.choice(polys).edges)
            others.append(Segment.make(a, b))
        else:
            p = Point(rng.uniform(0.5, 9.5), rng.uniform(0.5, 9.5))
            q = Point(rng.uniform(0.5, 9.5), rng.uniform(0.5, 9.5))
            if p.dist(q) > 0.1:
                others.append(Segment.make(p, q))
    regions += [_described(s, rng, donors) for s in others]
    space = ConvexPolygon.rectangle(*SPACE)
    regions.append(Region(space, describe_shape(space), "X"))
    # drop exact duplicates so element identity is unambiguous
    universe = tuple(dict.fromkeys(regions))
    n = len(universe)

    def subset(max_size=3):
        if rng.random() < 0.05:
            return ()
        if rng.random() < 0.03:
            return tuple(range(n))  # X itself
        k = rng.randint(1, max_size)
        return tuple(sorted(rng.sample(range(n - 1), min(k, n - 1))))

    A, B = subset(), subset()
    C = tuple(sorted(set(B) | set(subset(2)))) if rng.random() < 0.3 else subset()
    family = [subset() for _ in range(rng.randint(1, 7))]
    low = [i for i, r in enumerate(universe) if r.dim < 2]
    if low:
        family.append(tuple(sorted(rng.sample(low, min(len(low), rng.randint(1, 2))))))
    rng.shuffle(family)
    return Configuration(index, universe, A, B, C, tuple(family), _random_spec(rng),
                         _random_phi(rng), space)


def forced_configurations() -> list:
    """Fixed edge cases checked on every run."""
    space = ConvexPolygon.rectangle(*SPACE)
    sq = ConvexPolygon.rectangle
    shapes = [
        sq(0, 0, 1, 1),            # 0
        sq(1, 1, 2, 2),            # 1 corner contact with 0
        sq(1, 0, 2, 1),            # 2 edge contact with 0
        sq(0.5, 0.5, 1.5, 1.5),    # 3 overlaps 0, 1, 2
        sq(5, 5, 6, 6),            # 4 far away
        Point(0.5, 0.5),           # 5 interior of 0
        Point(1.0, 1.0),           # 6 shared corner of 0 and 1
        Point(7.0, 7.0),           # 7 isolated
        Segment.make((3, 3), (4, 4)),  # 8 crosses segment 9
        Segment.make((3, 4), (4, 3)),  # 9
        space,                     # 10 the whole space
    ]
    universe = tuple(Region(s, describe_shape(s), "X" if s is space else None) for s in shapes)
    spec = DescriptorSpec({"side_count": 0.0})
    phi = LinearDescriptor(((1.0, 0.0),), 0.0)
    cases = [
        ((), (0,), tuple(range(len(universe)))),  # (∅, A, X)
        ((0,), (1,), (2,)),                         # corner contact, edge contact
        ((0,), (2,), (1,)),
        ((0,), (3,), (4,)),                         # area overlap
        ((5,), (5,), (0,)),                         # equal point singletons
        ((5,), (6,), (7,)),                         # distinct point singletons
        ((5,), (0,), (1,)),                         # point in interior
        ((8,), (9,), (6, 7)),                       # lower-dimensional contact
        ((0,), (1,), (1, 3)),                       # C covers B
        (tuple(range(len(universe))), (4,), (7,)),  # X itself as an operand
    ]
    family = ((1,), (4,), (5, 7), (8,))
    return [Configuration(-(k + 1), universe, a, b, c, family, spec, phi, space)
            for k, (a, b, c) in enumerate(cases)]


def generate_configurations(seed: int, n: int) -> list:
    """The forced edge cases followed by ``n`` seeded random configurations."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return forced_configurations() + [_random_configuration(seed, k) for k in range(n)]


# --- independent set predicates ---------------------------------------------


def _edges(shape):
    vs = geo.vertices_of(shape)
    if len(vs) == 1:
        return []
    if len(vs) == 2:
        return [(vs[0], vs[1])]
    return list(zip(vs, vs[1:] + vs[:1]))


def _crossing(p, q, r, s):
    d1 = (q[0] - p[0], q[1] - p[1])
    d2 = (s[0] - r[0], s[1] - r[1])
    den = d1[0] * d2[1] - d1[1] * d2[0]
    if den == 0:
        return None
    t = ((r[0] - p[0]) * d2[1] - (r[1] - p[1]) * d2[0]) / den
    u = ((r[0] - p[0]) * d1[1] - (r[1] - p[1]) * d1[0]) / den
    if -1e-12 <= t <= 1 + 1e-12 and -1e-12 <= u <= 1 + 1e-12:
        return Point(p[0] + t * d1[0], p[1] + t * d1[1])
    return None


def _common_candidates(s1, s2):
    cands = list(geo.vertices_of(s1)) + list(geo.vertices_of(s2))
    for (p, q), (r, s) in itertools.product(_edges(s1), _edges(s2)):
        c = _crossing(p, q, r, s)
        if c is not None:
            cands.append(c)
    return [c for c in cands if geo.contains(s1, c) and geo.contains(s2, c)]


def shapes_meet(s1, s2) -> bool:
    return bool(_common_candidates(s1, s2))


def interiors_meet(s1, s2) -> bool:
    if geo.dimension(s1) < 2 or geo.dimension(s2) < 2:
        return False
    cands = _common_candidates(s1, s2)
    if len(cands) < 3:
        return False
    m = Point(sum(c.x for c in cands) / len(cands), sum(c.y for c in cands) / len(cands))
    return geo.contains(s1, m, strict=True) and geo.contains(s2, m, strict=True)


def sets_meet(A, B) -> bool:
    return any(shapes_meet(a.shape, b.shape) for a in A for b in B)


def set_interiors_meet(A, B) -> bool:
    return any(interiors_meet(a.shape, b.shape) for a in A for b in B)


def covered_by(B, C) -> bool:
    """Every element of B lies inside some element of C."""
    return all(any(all(geo.contains(c.shape, v) for v in geo.vertices_of(b.shape)) for c in C)
               for b in B)


def _in_interior(x: Point, A) -> bool:
    return any(a.dim == 2 and all(h.signed_distance(x) < -geo.EPS_GEOM for h in a.shape.halfplanes())
               for a in A)


# --- axiom checks -----------------------------------------------------------


def _pairs(cfg):
    A, B, C = cfg.sets
    return [("A", "B", A, B), ("A", "C", A, C), ("B", "C", B, C)]


def _flavors(cfg):
    return [dict(space=cfg.space, mesh_contact=False), dict(space=cfg.space, mesh_contact=True)]


def _check_P0(cfg):
    out = []
    for name, S in zip("ABCX", cfg.sets + (cfg.X,)):
        if px.near((), S) or px.near(S, ()):
            out.append(f"∅ near {name}")
    return out


def _check_P1(cfg):
    return [f"near({m},{n}) asymmetric" for m, n, S, T in _pairs(cfg)
            if px.near(S, T).holds != px.near(T, S).holds]


def _check_P2(cfg):
    return [f"{m}∩{n}≠∅ but not near" for m, n, S, T in _pairs(cfg)
            if sets_meet(S, T) and not px.near(S, T)]


def _check_P3(cfg):
    A, B, C = cfg.sets
    lhs = px.near(A, px.union(B, C)).holds
    rhs = px.near(A, B).holds or px.near(A, C).holds
    return [] if lhs == rhs else [f"near(A,B∪C)={lhs} but near(A,B) or near(A,C)={rhs}"]


def _check_P4(cfg):
    A, B, C = cfg.sets
    if B and px.near(A, B) and covered_by(B, C) and not px.near(A, C):
        return ["A near B, B ⊆ cl C, but A not near C"]
    return []


def _check_P5(cfg):
    out = []
    for x, y in itertools.combinations(cfg.points, 2):
        if px.near((x,), (y,)) and x.shape.dist(y.shape) > geo.EPS_GEOM:
            out.append(f"distinct points {tuple(x.shape)} and {tuple(y.shape)} are near")
    return out


def _check_dP0(cfg):
    out = []
    for name, S in zip("ABCX", cfg.sets + (cfg.X,)):
        if px.descriptively_near((), S, cfg.spec) or px.descriptively_near(S, (), cfg.spec):
            out.append(f"∅ dnear {name}")
    return out


def _check_dP1(cfg):
    return [f"dnear({m},{n}) asymmetric" for m, n, S, T in _pairs(cfg)
            if px.descriptively_near(S, T, cfg.spec).holds != px.descriptively_near(T, S, cfg.spec).holds]


def _check_dP2(cfg):
    return [f"{m}⋂Φ{n}≠∅ but not dnear" for m, n, S, T in _pairs(cfg)
            if descriptive_intersection(S, T, cfg.spec) and not px.descriptively_near(S, T, cfg.spec)]


def _check_dP3(cfg):
    A, B, C = cfg.sets
    lhs = px.descriptively_near(A, px.union(B, C), cfg.spec).holds
    rhs = px.descriptively_near(A, B, cfg.spec).holds or px.descriptively_near(A, C, cfg.spec).holds
    return [] if lhs == rhs else [f"dnear(A,B∪C)={lhs} but dnear(A,B) or dnear(A,C)={rhs}"]


def _check_dP4(cfg):
    A, B, C = cfg.sets
    if (B and px.descriptively_near(A, B, cfg.spec)
            and all(px.descriptively_near((b,), C, cfg.spec) for b in B)
            and not px.descriptively_near(A, C, cfg.spec)):
        return ["A dnear B, each {b} dnear C, but A not dnear C"]
    return []


def _check_dP5(cfg):
    from .description import features_match
    out = []
    for x, y in itertools.combinations(cfg.points, 2):
        if px.descriptively_near((x,), (y,), cfg.spec) and not features_match(
                x.description, y.description, cfg.spec):
            out.append("descriptively near points without matching descriptions")
    return out


def _check_snN0(cfg):
    out = []
    for kw in _flavors(cfg):
        for name, S in zip("ABCX", cfg.sets + (cfg.X,)):
            if px.strongly_near((), S, **kw) or px.strongly_near(S, (), **kw):
                out.append(f"∅ sn {name}")
            if S and not px.strongly_near(cfg.X, S, **kw):
                out.append(f"X not sn {name}")
    return out


def _check_snN1(cfg):
    return [f"sn({m},{n}) asymmetric" for kw in _flavors(cfg) for m, n, S, T in _pairs(cfg)
            if px.strongly_near(S, T, **kw).holds != px.strongly_near(T, S, **kw).holds]


def _check_snN2(cfg):
    return [f"sn({m},{n}) but {m}∩{n}=∅" for kw in _flavors(cfg) for m, n, S, T in _pairs(cfg)
            if px.strongly_near(S, T, **kw) and not sets_meet(S, T)]


def _check_snN3(cfg):
    A = cfg.take(cfg.A)
    fam = [cfg.take(f) for f in cfg.family]
    whole = px.union(*fam)
    out = []
    for kw in _flavors(cfg):
        premise = any(px.strongly_near(A, Bi, **kw) and px.interior_part(Bi) for Bi in fam)
        if premise and not px.strongly_near(A, whole, **kw):
            out.append("A sn some B_i with interior but not sn the union")
    return out


def _check_snN4(cfg):
    return [f"int {m} ∩ int {n} ≠ ∅ but not sn" for kw in _flavors(cfg) for m, n, S, T in _pairs(cfg)
            if set_interiors_meet(S, T) and not px.strongly_near(S, T, **kw)]


def _check_snN5(cfg):
    out = []
    for kw in _flavors(cfg):
        for x in cfg.points:
            for name, S in zip("ABC", cfg.sets):
                if _in_interior(x.shape, S) and not px.strongly_near((x,), S, **kw):
                    out.append(f"{tuple(x.shape)} ∈ int {name} but not sn")
    return out


def _check_snN6(cfg):
    out = []
    for kw in _flavors(cfg):
        for x, y in itertools.product(cfg.points, repeat=2):
            same = abs(x.shape.x - y.shape.x) <= geo.EPS_GEOM and abs(x.shape.y - y.shape.y) <= geo.EPS_GEOM
            if px.strongly_near((x,), (y,), **kw).holds != same:
                out.append(f"{{x}} sn {{y}} disagrees with x=y for {tuple(x.shape)}, {tuple(y.shape)}")
    return out


def _dsn(cfg, S, T):
    return px.descriptively_strongly_near(S, T, cfg.spec, space=cfg.space)


def _check_dsnP0(cfg):
    out = []
    for name, S in zip("ABCX", cfg.sets + (cfg.X,)):
        if _dsn(cfg, (), S) or _dsn(cfg, S, ()):
            out.append(f"∅ dsn {name}")
        if S and not _dsn(cfg, cfg.X, S):
            out.append(f"X not dsn {name}")
    return out


def _check_dsnP1(cfg):
    return [f"dsn({m},{n}) asymmetric" for m, n, S, T in _pairs(cfg)
            if _dsn(cfg, S, T).holds != _dsn(cfg, T, S).holds]


def _check_dsnP2(cfg):
    return [f"dsn({m},{n}) but {m}⋂Φ{n}=∅" for m, n, S, T in _pairs(cfg)
            if _dsn(cfg, S, T) and not descriptive_intersection(S, T, cfg.spec)]


def _check_dsnP3(cfg):
    A = cfg.take(cfg.A)
    fam = [cfg.take(f) for f in cfg.family]
    premise = any(_dsn(cfg, A, Bi) and px.interior_part(Bi) for Bi in fam)
    if premise and not _dsn(cfg, A, px.union(*fam)):
        return ["A dsn some B_i with interior but not dsn the union"]
    return []


def _check_dsnP4(cfg):
    return [f"int {m} ⋂Φ int {n} ≠ ∅ but not dsn" for m, n, S, T in _pairs(cfg)
            if descriptive_intersection(px.interior_part(S), px.interior_part(T), cfg.spec)
            and not _dsn(cfg, S, T)]


def _check_dsnP5(cfg):
    from .description import features_match
    out = []
    for x in cfg.points:
        for name, S in zip("ABC", cfg.sets):
            inside = any(features_match(x.description, r.description, cfg.spec) for r in px.interior_part(S))
            if inside and not _dsn(cfg, (x,), S):
                out.append(f"Φ(x) ∈ Φ(int {name}) but not dsn")
    return out


def _check_dsnP6(cfg):
    from .description import features_match
    out = []
    for x, y in itertools.product(cfg.points, repeat=2):
        if _dsn(cfg, (x,), (y,)).holds != features_match(x.description, y.description, cfg.spec):
            out.append("{x} dsn {y} disagrees with Φ(x)=Φ(y)")
    return out


def _check_prop21(cfg):
    return [f"dnear({m},{n}) but {m}⋂Φ{n}=∅" for m, n, S, T in _pairs(cfg)
            if px.descriptively_near(S, T, cfg.spec) and not descriptive_intersection(S, T, cfg.spec)]


def _check_prop22(cfg):
    out = []
    for kw in _flavors(cfg):
        for m, n, S, T in _pairs(cfg):
            if px.strongly_near(S, T, **kw):
                if not px.near(S, T):
                    out.append(f"sn({m},{n}) but not near")
                if not px.pointwise_descriptively_near(S, T, cfg.phi):
                    out.append(f"sn({m},{n}) but not pointwise dnear")
    return out


def _check_prop23(cfg):
    out = []
    for m, n, S, T in _pairs(cfg):
        dsn = _dsn(cfg, S, T).holds
        ordinary = (not px.is_point_singleton(S) and not px.is_point_singleton(T)
                    and px.covers_space(S, cfg.space) is None and px.covers_space(T, cfg.space) is None)
        iS, iT = px.interior_part(S), px.interior_part(T)
        # item 1: interior descriptive contact
        if dsn and ordinary:
            if not descriptive_intersection(iS, iT, cfg.spec):
                out.append(f"dsn({m},{n}) but int {m} ⋂Φ int {n} = ∅")
            elif not px.descriptively_near(iS, iT, cfg.spec):
                out.append(f"int {m} ⋂Φ int {n} ≠ ∅ but int {m} not dnear int {n}")
        # item 2, read with location descriptions where ⋂Φ is ordinary intersection
        nonsingle = not px.is_point_singleton(S) and not px.is_point_singleton(T)
        if nonsingle and iS and iT and px.strongly_near(S, T, space=cfg.space):
            overlap = []
            for a in iS:
                for b in iT:
                    if geo.classify_contact(a.shape, b.shape) is geo.Contact.AREA:
                        overlap.append(Region(geo.intersect(a.shape, b.shape)))
            if not px.strongly_near(overlap, T, space=cfg.space):
                out.append(f"sn({m},{n}) but (int {m} ∩ int {n}) not sn {n}")
        # item 3
        if dsn and not px.descriptively_near(S, T, cfg.spec):
            out.append(f"dsn({m},{n}) but not dnear")
    return out


_CHECKS = {
    "P0": _check_P0, "P1": _check_P1, "P2": _check_P2, "P3": _check_P3, "P4": _check_P4,
    "P5": _check_P5,
    "dP0": _check_dP0, "dP1": _check_dP1, "dP2": _check_dP2, "dP3": _check_dP3, "dP4": _check_dP4,
    "dP5": _check_dP5,
    "snN0": _check_snN0, "snN1": _check_snN1, "snN2": _check_snN2, "snN3": _check_snN3,
    "snN4": _check_snN4, "snN5": _check_snN5, "snN6": _check_snN6,
    "dsnP0": _check_dsnP0, "dsnP1": _check_dsnP1, "dsnP2": _check_dsnP2, "dsnP3": _check_dsnP3,
    "dsnP4": _check_dsnP4, "dsnP5": _check_dsnP5, "dsnP6": _check_dsnP6,
    "Prop2.1": _check_prop21, "Prop2.2": _check_prop22, "Prop2.3": _check_prop23,
}


def check_axiom(axiom: str, configs) -> AxiomReport:
    """Evaluate one axiom over every configuration and collect counterexamples."""
    try:
        check = _CHECKS[axiom]
    except KeyError:
        raise UnknownAxiom(axiom) from None
    report = AxiomReport(axiom, informational=axiom in INFORMATIONAL)
    for cfg in configs:
        report.trials += 1
        for reason in check(cfg):
            report.failures.append({"config": cfg.index, "reason": reason,
                                    "configuration": cfg.to_dict()})
    return report


# --- named fixtures ----------------------------------------------------------


def _bisect(f, lo, hi, iters=200):
    flo = f(lo)
    for _ in range(iters):
        mid = (lo + hi) / 2
        if mid in (lo, hi):
            break
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


def oscillating_curve_sets(x0: float = 0.1, x1: float = 1.0, samples: int = 4000):
    """Point samples of the axis ``{(x, 0)}`` and the curve ``{(x, sin(5/x))}`` where they meet.

    The curve is sampled as a polyline; each polyline crossing of the axis
    segment is refined onto the true curve by bisection.
    """
    def f(x):
        return math.sin(5.0 / x)

    axis = Segment.make((x0, 0.0), (x1, 0.0))
    xs = np.linspace(x0, x1, samples)
    roots = []
    for xa, xb in zip(xs[:-1], xs[1:]):
        xa, xb = float(xa), float(xb)
        pa, pb = Point(xa, f(xa)), Point(xb, f(xb))
        hit = geo.intersect(axis, Segment.make(pa, pb))
        if hit is None:
            continue
        if pa.y == 0:
            r = xa
        elif pb.y == 0:
            r = xb
        else:
            r = _bisect(f, xa, xb)
        if not roots or abs(roots[-1] - r) > 1e-9:
            roots.append(r)
    A = tuple(Region(Point(r, 0.0), label="axis") for r in roots)
    B = tuple(Region(Point(r, f(r)), label="curve") for r in roots)
    return A, B


def oscillating_curve_witnesses() -> list:
    A, B = oscillating_curve_sets()
    return px.strong_witnesses(A, B)


def _check_oscillating_curve() -> AxiomReport:
    report = AxiomReport("oscillating_curve", trials=1)
    A, B = oscillating_curve_sets()
    verdict = px.strongly_near(A, B)
    wits = px.strong_witnesses(A, B)
    expected = sorted(5 / (k * math.pi) for k in range(2, 16))
    got = sorted(w.x for w in wits)
    if not verdict:
        report.failures.append({"reason": "sampled axis and curve are not strongly near"})
    if len(got) != len(expected) or any(abs(a - b) > 1e-9 for a, b in zip(got, expected)):
        report.failures.append({"reason": f"expected {len(expected)} witnesses, got {len(got)}"})
    for w in wits:
        if abs(w.y) > 1e-9 or abs(math.sin(5 / w.x) - w.y) > 1e-9:
            report.failures.append({"reason": f"witness {tuple(w)} is not on both sets"})
    return report


def _check_spoke_theorem(seed: int, meshes: int = 3, sites: int = 30) -> AxiomReport:
    from .clusters import maximal_nucleus_clusters
    from .nerve import build_nerve, verify_spoke_theorem
    from .voronoi import build_tessellation

    report = AxiomReport("Thm3.2")
    for k in range(meshes):
        rng = np.random.default_rng([seed, k])
        t = build_tessellation(rng.uniform(0, 1, (sites, 2)), (0, 0, 1, 1))
        for c in maximal_nucleus_clusters(t):
            for v in verify_spoke_theorem(build_nerve(c, t), t):
                report.trials += 1
                if not v.holds:
                    report.failures.append({"reason": f"spokes {v.witness} of nucleus {c.nucleus}",
                                            "mesh": [seed, k]})
    return report


def run_full_suite(seed: int = 0, n: int = 1000, configs=None) -> list:
    """Every axiom and proposition over one shared configuration pool."""
    if configs is None:
        configs = generate_configurations(seed, n)
    reports = [check_axiom(a, configs) for a in AXIOM_IDS]
    reports.append(_check_spoke_theorem(seed))
    reports.append(_check_oscillating_curve())
    return reports


def suite_passed(reports) -> bool:
    return all(r.passed for r in reports)

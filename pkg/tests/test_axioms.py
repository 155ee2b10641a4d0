import math

import pytest
from scipy.optimize import brentq

from proxinerve import axioms
from proxinerve import proximity as px
from proxinerve.errors import UnknownAxiom


@pytest.fixture(scope="module")
def configs():
    return axioms.generate_configurations(seed=3, n=150)


@pytest.mark.parametrize("axiom", axioms.AXIOM_IDS)
def test_axiom_holds_on_random_configurations(axiom, configs):
    report = axioms.check_axiom(axiom, configs)
    assert report.trials == len(configs)
    assert report.passed, report.failures[:1]
    assert report.informational == (axiom in ("P5", "dP5"))


def test_reports_are_reproducible():
    a = [r.to_dict() for r in axioms.run_full_suite(seed=5, n=20)]
    b = [r.to_dict() for r in axioms.run_full_suite(seed=5, n=20)]
    assert a == b
    assert [r["axiom"] for r in a] == list(axioms.AXIOM_IDS) + ["Thm3.2", "oscillating_curve"]


def test_configurations_do_not_depend_on_n():
    short = axioms.generate_configurations(1, 3)
    long = axioms.generate_configurations(1, 10)
    assert short == long[:len(short)]


def test_forced_cases_are_present():
    forced = axioms.forced_configurations()
    assert any(c.A == () and c.C == tuple(range(len(c.universe))) for c in forced)
    first = forced[1]
    A, B, _ = first.sets
    assert px.near(A, B) and not px.strongly_near(A, B)  # corner contact


def test_configuration_round_trip(configs):
    for c in configs[:40]:
        assert axioms.Configuration.from_dict(c.to_dict()) == c


def test_unknown_axiom():
    with pytest.raises(UnknownAxiom):
        axioms.check_axiom("P9", [])


def test_injected_asymmetry_is_caught(monkeypatch, configs):
    real = px.near

    def lopsided(A, B):
        v = real(A, B)
        return px.ProximityVerdict("near", False) if len(A) > len(B) else v

    monkeypatch.setattr(px, "near", lopsided)
    report = axioms.check_axiom("P1", configs)
    assert not report.passed
    bad = axioms.Configuration.from_dict(report.failures[0]["configuration"])
    assert axioms.check_axiom("P1", [bad]).failures
    monkeypatch.undo()
    assert axioms.check_axiom("P1", [bad]).passed


def test_independent_predicates():
    from proxinerve.geometry import ConvexPolygon, Point, Segment
    sq = ConvexPolygon.rectangle
    assert axioms.shapes_meet(sq(0, 0, 1, 1), sq(1, 1, 2, 2))
    assert not axioms.interiors_meet(sq(0, 0, 1, 1), sq(1, 0, 2, 1))
    assert axioms.interiors_meet(sq(0, 0, 1, 1), sq(0.9, 0.9, 2, 2))
    assert axioms.shapes_meet(Segment.make((0, 0), (2, 2)), Segment.make((0, 2), (2, 0)))
    assert not axioms.shapes_meet(Point(3, 3), sq(0, 0, 1, 1))


def test_oscillating_curve_roots_match_root_finder():
    def f(x):
        return math.sin(5 / x)

    # brackets between consecutive extrema of sin(5/x) isolate each root
    ks = range(2, 16)
    oracle = [brentq(f, 5 / ((k + 0.5) * math.pi), 5 / ((k - 0.5) * math.pi), xtol=1e-15) for k in ks]
    wits = sorted(axioms.oscillating_curve_witnesses(), key=lambda p: p.x)
    assert len(wits) == 14
    for w, r in zip(wits, sorted(oracle)):
        assert abs(w.x - r) <= 1e-9
        assert abs(w.y) <= 1e-9 and abs(math.sin(5 / w.x)) <= 1e-9

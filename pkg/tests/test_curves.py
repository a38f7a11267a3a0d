from fractions import Fraction

import pytest

from sepcurves import Curve, build_chain_surface
from sepcurves.engine import CurveError, Overlay


def test_chain_curves_are_valid():
    for c in build_chain_surface(4).chain():
        c.validate()
        assert len(c) == 2
        assert not c.is_empty


def test_single_crossing_rejected():
    with pytest.raises(ValueError):
        Curve(3, ((0, Fraction(1, 2), 1),)).validate()


@pytest.mark.parametrize("crossings, message", [
    (((99, Fraction(1, 2), 1), (0, Fraction(1, 2), -1)), "out of range"),
    (((2, Fraction(3, 2), 1), (0, Fraction(1, 2), -1)), "not in"),
    (((2, Fraction(1, 2), 2), (0, Fraction(1, 2), -1)), "direction"),
])
def test_bad_crossings_rejected(crossings, message):
    with pytest.raises(ValueError, match=message):
        Curve(3, crossings).validate()


def test_shared_slot_rejected():
    c = build_chain_surface(3).chain_curve(1)
    (e, p, d), _ = c.crossings
    with pytest.raises(ValueError):
        Curve(3, ((e, p, d), (e, p, -d))).validate()


def test_faces_must_match():
    S = build_chain_surface(3)
    # two crossings of the same direction cannot close up through one face pair
    e0, e1 = S.edge(2, 0), S.edge(0, 0)
    with pytest.raises(ValueError, match="share a face"):
        Curve(3, ((e0, Fraction(1, 4), 1), (e1, Fraction(3, 4), 1))).validate()


def test_trivial_return_normalizes_away():
    c = build_chain_surface(3).chain_curve(2)
    e, p, d = c.crossings[0]
    fingered = Curve(3, (c.crossings[0], (e, p + Fraction(1, 100), -d),
                         (e, p + Fraction(2, 100), d)) + c.crossings[1:])
    fingered.validate()
    assert fingered.normalized().edge_weights() == c.edge_weights()


def test_two_crossing_bigon_is_null():
    S = build_chain_surface(3)
    e = S.edge(1, 0)
    c = Curve(3, ((e, Fraction(1, 3), 1), (e, Fraction(2, 3), -1)))
    assert c.normalized().is_empty


def test_roundtrip_and_fractions():
    c = build_chain_surface(5).chain_curve(7)
    d = Curve.from_dict(c.to_dict())
    assert d == c
    assert all(isinstance(p, Fraction) for _, p, _ in d.crossings)
    assert '"genus": 5' in c.to_json()


@pytest.mark.parametrize("which", ["r", "s", "iota", "m"])
def test_symmetry_images_are_valid(which):
    for c in build_chain_surface(3).chain():
        c.mapped(which).validate()


def test_reversed_twice_is_identity():
    c = build_chain_surface(3).chain_curve(0)
    assert c.reversed().reversed() == c


def test_edge_weights_length():
    c = build_chain_surface(3).chain_curve(0)
    assert len(c.edge_weights()) == 16 and sum(c.edge_weights()) == 2


def test_overlay_rejects_empty_curve():
    with pytest.raises(CurveError):
        Overlay(build_chain_surface(3), [Curve(3, ())])

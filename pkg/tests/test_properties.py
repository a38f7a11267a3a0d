"""Randomized engine properties with hypothesis (small budgets).

The full-size randomized runs live in the acceptance suite.
"""
import random

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from randcurves import apply_word, finger, pool, rerepresent, respace, rotate, sym_word
from sepcurves import Curve, build_chain_surface
from sepcurves.topology import (
    cut_pieces,
    geometric_intersection,
    is_isotopic,
    neighborhood_boundary,
    reduce_pair,
)

SETTINGS = settings(max_examples=40, deadline=None, derandomize=True,
                    suppress_health_check=[HealthCheck.too_slow])
genera = st.sampled_from([3, 4, 5])
seeds = st.integers(0, 2**32 - 1)


@SETTINGS
@given(genera, seeds)
def test_rerepresentations_are_valid_and_isotopic(g, seed):
    rng = random.Random(seed)
    P = pool(g)
    c = P.curves[rng.randrange(len(P))]
    d = rerepresent(rng, c, P.curves)
    d.validate()
    assert is_isotopic(c, d)


@SETTINGS
@given(genera, seeds)
def test_symmetries_preserve_intersection(g, seed):
    rng = random.Random(seed)
    P = pool(g)
    a, b = P.pair(rng)
    w = sym_word(rng, 6)
    x, y = apply_word(P.curves[a], w), apply_word(P.curves[b], w)
    assert geometric_intersection(x, y, cache=False) == P.i(a, b)


@SETTINGS
@given(genera, seeds)
def test_slot_moves_preserve_intersection(g, seed):
    rng = random.Random(seed)
    P = pool(g)
    a, b = P.pair(rng)
    x = respace(rng, rotate(rng, P.curves[a]))
    y = finger(rng, P.curves[b])
    assert geometric_intersection(x, y, cache=False) == P.i(a, b)
    assert geometric_intersection(y, x, cache=False) == P.i(a, b)


@SETTINGS
@given(genera, seeds)
def test_reduction_trace_strictly_decreases(g, seed):
    rng = random.Random(seed)
    P = pool(g)
    a, b = P.pair(rng, meeting=True)
    trace = []
    _, _, n = reduce_pair(rerepresent(rng, P.curves[a]), rerepresent(rng, P.curves[b]), trace)
    assert all(u > v for u, v in zip(trace, trace[1:]))
    assert trace[-1] == n == P.i(a, b)
    assert (trace[0] - n) % 2 == 0


@SETTINGS
@given(genera, seeds)
def test_neighbourhood_boundary_is_disjoint(g, seed):
    rng = random.Random(seed)
    P = pool(g)
    a, b = P.pair(rng, meeting=True)
    x, y = P.curves[a], P.curves[b]
    for bc in neighborhood_boundary([x, y]):
        assert geometric_intersection(bc.curve, x, cache=False) == 0
        assert geometric_intersection(bc.curve, y, cache=False) == 0


@SETTINGS
@given(genera, seeds)
def test_euler_characteristic_is_additive(g, seed):
    rng = random.Random(seed)
    P = pool(g)
    idx = P.simplex(rng, rng.randint(1, 2 * g - 3))
    pieces = cut_pieces(build_chain_surface(g), [P.curves[v] for v in idx])
    assert sum(p.euler for p in pieces) == 2 - 2 * g
    assert all(p.euler == 2 - 2 * p.genus - p.boundaries for p in pieces)
    assert sum(p.boundaries for p in pieces) == 2 * len(idx)
    # each separating member adds a piece; nonseparating ones may add more together
    seps = sum(1 for v in idx if P.Y.names[v].family in "SUV")
    assert 1 + seps <= len(pieces) <= 1 + len(idx)


@SETTINGS
@given(genera, seeds)
def test_curve_serialization_roundtrip(g, seed):
    rng = random.Random(seed)
    P = pool(g)
    c = rerepresent(rng, P.curves[rng.randrange(len(P))])
    assert Curve.from_dict(c.to_dict()) == c

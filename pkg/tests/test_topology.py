import pytest

from sepcurves import build_chain_surface
from sepcurves.engine import CurveError
from sepcurves.families import CurveName, Interval, build_set
from sepcurves.topology import (
    chain_check,
    curve_genus,
    cut_pieces,
    fills,
    fills_sides,
    geometric_intersection,
    is_isotopic,
    is_null_homotopic,
    is_separating,
    is_sharing_pair,
    neighborhood_boundary,
    reduce_pair,
    same_side,
    separating_genus,
    shared_curve,
    side_genus,
    side_of,
)


@pytest.fixture(scope="module")
def chain4():
    return build_chain_surface(4).chain()


def _s(Y, start, length):
    return Y[CurveName("S", Interval(start, length, 2 * Y.genus + 2))]


def test_chain_intersections(chain4):
    n = len(chain4)
    for j in range(n):
        for k in range(n):
            want = 1 if (j - k) % n in (1, n - 1) else 0
            assert geometric_intersection(chain4[j], chain4[k]) == want


def test_chain_check(chain4):
    assert chain_check(chain4[:5])
    assert not chain_check([chain4[0], chain4[2]])
    assert not chain_check([chain4[0], chain4[1], chain4[0 + 2], chain4[4]])


def test_isotopy_is_not_equality(chain4):
    c = chain4[3]
    assert is_isotopic(c, c.mapped("iota"))  # the deck involution fixes chain curves
    assert not is_isotopic(chain4[0], chain4[2])


def test_bigon_trace_decreases():
    Y = build_set(4, "Y")
    a, b = _s(Y, 0, 4), _s(Y, 2, 4)
    tr = []
    x, y, n = reduce_pair(a.mapped("r").mapped("r"), b, tr)
    assert tr[-1] == n
    assert all(u > v for u, v in zip(tr, tr[1:]))
    assert n == geometric_intersection(a.mapped("r").mapped("r"), b)


def test_intersection_symmetric():
    Y = build_set(4, "Y")
    a, b = _s(Y, 0, 2), _s(Y, 1, 2)
    assert geometric_intersection(a, b, cache=False) == geometric_intersection(b, a, cache=False) == 4


def test_nonseparating_and_genus(chain4):
    assert not is_separating(chain4[0])
    with pytest.raises(CurveError):
        separating_genus(chain4[0])
    Y = build_set(4, "Y")
    assert separating_genus(_s(Y, 0, 2)) == (1, 3)
    assert separating_genus(_s(Y, 0, 4)) == (2, 2)
    assert curve_genus(_s(Y, 3, 6)) == 1


def test_null_homotopic_boundary():
    # six consecutive chain curves at genus 3 fill everything but a disk
    ch = build_chain_surface(3).chain()
    bd = neighborhood_boundary(ch[:6])
    assert len(bd) == 1 and not bd[0].essential
    assert is_null_homotopic(bd[0].curve)


def test_neighbourhood_of_two_chain_curves(chain4):
    bd = neighborhood_boundary(chain4[:2])
    assert len(bd) == 1 and bd[0].essential
    assert curve_genus(bd[0].curve) == 1


def test_disconnected_union_rejected(chain4):
    with pytest.raises(CurveError):
        neighborhood_boundary([chain4[0], chain4[2]])


def test_cut_pieces_even_chain(chain4):
    pieces = cut_pieces(build_chain_surface(4), chain4[0::2])
    assert sorted((p.genus, p.boundaries) for p in pieces) == [(0, 5), (0, 5)]
    assert sum(p.euler for p in pieces) == -6


def test_cut_requires_disjoint(chain4):
    with pytest.raises(CurveError):
        cut_pieces(build_chain_surface(4), chain4[:2])


def test_fills_full_chain_only(chain4):
    assert fills(chain4)
    # 2g and 2g+1 chain curves fill; 2g-1 of them leave an annulus
    assert fills(chain4[:-1]) and fills(chain4[:-2])
    assert not fills(chain4[:-3])
    assert not fills(chain4[0::2])


def test_sides_of_a_genus_two_curve(chain4):
    Y = build_set(4, "Y")
    s = _s(Y, 0, 4)  # separates c_0..c_3 from c_5..c_8
    inner, outer = chain4[0:3], chain4[5:8]
    assert same_side(s, inner[0], inner[2])
    assert side_of(s, inner[0]) != side_of(s, outer[0])
    assert side_genus(s, side_of(s, inner[0])) == 2
    with pytest.raises(CurveError):
        side_of(s, chain4[4])
    assert fills_sides(s, [chain4[0:4], chain4[5:9]]) == [True, True]
    # negative control: a 3-chain does not fill a genus-2 side
    assert fills_sides(s, [chain4[0:3]]) == [False]


def test_sharing_pair_and_shared_curve(chain4):
    a = neighborhood_boundary(chain4[0:2])[0].curve
    b = neighborhood_boundary(chain4[1:3])[0].curve
    assert is_sharing_pair(a, b)
    assert is_isotopic(shared_curve(a, b), chain4[1])


def test_non_sharing_pairs(chain4):
    a = neighborhood_boundary(chain4[0:2])[0].curve
    far = neighborhood_boundary(chain4[4:6])[0].curve
    assert not is_sharing_pair(a, far)  # disjoint
    assert not is_sharing_pair(chain4[0], chain4[1])  # not separating
    with pytest.raises(CurveError):
        shared_curve(a, far)

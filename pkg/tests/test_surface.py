import pytest

from sepcurves import build_chain_surface
from sepcurves.surface import ChainSurface


@pytest.mark.parametrize("g", [2, 3, 4, 5, 6])
def test_cell_structure(g):
    S = build_chain_surface(g)
    assert S.n == 2 * g + 2
    assert S.num_edges == 4 * g + 4
    assert len(S.faces) == 4
    assert S.euler_characteristic == 2 - 2 * g
    S.validate()


@pytest.mark.parametrize("bad", [1, 0, -3, 2.5, "3"])
def test_rejects_bad_genus(bad):
    with pytest.raises(ValueError):
        build_chain_surface(bad)
    with pytest.raises(ValueError):
        ChainSurface(bad)


def test_memoized():
    assert build_chain_surface(4) is build_chain_surface(4)


@pytest.mark.parametrize("g", [3, 4])
def test_every_edge_has_both_sides(g):
    S = build_chain_surface(g)
    for e in range(S.num_edges):
        assert S.north_face(e) in (0, 1)
        assert S.south_face(e) in (2, 3)
        assert S.dart_face[2 * e] is not None and S.dart_face[2 * e + 1] is not None


@pytest.mark.parametrize("which", ["s", "iota", "m"])
def test_involutions_on_edges(which):
    S = build_chain_surface(4)
    for e in range(S.num_edges):
        e2, flip = S.edge_symmetry(which, e)
        e3, flip2 = S.edge_symmetry(which, e2)
        assert e3 == e and flip == flip2


def test_rotation_order():
    S = build_chain_surface(3)
    e = 0
    for _ in range(S.n):
        e, _ = S.edge_symmetry("r", e)
    assert e == 0
    with pytest.raises(ValueError):
        S.edge_symmetry("q", 0)


def test_vertex_links_cover_edge_ends():
    S = build_chain_surface(3)
    ends = sorted(x for link in S.rotation for x in link)
    assert ends == sorted((e, t) for e in range(S.num_edges) for t in (0, 1))


def test_side_labels_cover_four_faces():
    lab = build_chain_surface(3).side_labels
    assert sorted(lab) == ["N0", "N1", "S0", "S1"]
    assert lab["N1"] == ("e+", "o+")


def test_serialization():
    d = build_chain_surface(3).to_dict()
    assert d["genus"] == 3
    assert '"genus": 3' in build_chain_surface(3).to_json()

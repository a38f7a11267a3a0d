from dataclasses import replace

import pytest

from sepcurves.families import build_set, incidence_table
from sepcurves.rigidity import (
    Spine,
    VertexMap,
    ambient,
    certificate_catalog,
    certificate_conditions,
    check_certificate,
    check_incidence_preserving,
    count_automorphisms_vf2,
    cycle_notation,
    enumerate_incidence_automorphisms,
    extend_map,
    fill_check,
    genus_one_count,
    maximal_simplex,
    scan_intersecting_both,
    sharing_pair_from_spine,
    spine_pair_names,
    symmetry_map,
)
from sepcurves.topology import is_isotopic, is_sharing_pair, shared_curve


@pytest.fixture(scope="module")
def A4():
    return ambient(4)


def test_spine_validation(A4):
    Spine(A4.c(0), A4.c(1), A4.c(2), 4)
    with pytest.raises(ValueError):
        Spine(A4.c(0), A4.c(2), A4.c(4), 4)  # ends miss the middle
    with pytest.raises(ValueError):
        Spine(A4.c(0), A4.c(1), A4.c(0), 4)


def test_spine_pair_is_sharing(A4):
    sp = Spine(A4.c(3), A4.c(4), A4.c(5), 4)
    a, b = sharing_pair_from_spine(sp)
    assert is_sharing_pair(a, b)
    assert is_isotopic(shared_curve(a, b), A4.curve(A4.c(4)))
    na, nb = spine_pair_names(sp)
    assert is_isotopic(A4.curve(na), a) and is_isotopic(A4.curve(nb), b)


def test_catalog_needs_genus_four():
    with pytest.raises(ValueError):
        certificate_catalog(3)


def test_catalog_types_at_genus_four():
    cat = certificate_catalog(4)
    kinds = {c.kind for c in cat}
    assert kinds == {"i", "ii", "iii", "iv", "v", "vi"}
    assert sum(1 for c in cat if c.kind == "i") == 10
    assert all(check_certificate(c) for c in cat[:12])


def test_broken_certificate_is_rejected(A4):
    cert = certificate_catalog(4)[0]
    bad_w = next(nm for nm in A4.Ys.names if A4.i(nm, cert.alpha) != 0)
    broken = replace(cert, w=bad_w)
    conds = certificate_conditions(broken)
    assert conds["w misses alpha"] is False
    assert not check_certificate(broken)


def test_certificate_rejects_foreign_names(A4):
    cert = certificate_catalog(4)[0]
    with pytest.raises(KeyError):
        certificate_conditions(replace(cert, w=A4.c(0)))


def test_maximal_simplex_sizes():
    for g in (3, 4):
        D = maximal_simplex(g)
        assert len(D) == 2 * g - 3
        assert genus_one_count(g, D) == g


def test_cycle_notation(A4):
    a, b, c = A4.c(0), A4.c(1), A4.c(2)
    assert cycle_notation({a: b, b: a, c: c}) == "(c_0 c_1)"


def test_automorphisms_genus_three():
    Xs = build_set(3, "Xs")
    T = incidence_table(Xs)
    rep = enumerate_incidence_automorphisms(Xs, T)
    assert rep.contains_symmetries
    assert rep.order == count_automorphisms_vf2(Xs, T) == 64
    assert rep.symmetry_order == 32
    assert rep.extended_order == 64
    assert rep.to_dict()["order"] == 64


def test_symmetry_map_preserves_incidence():
    assert check_incidence_preserving(symmetry_map(4, "r"))


def test_extend_rejects_bad_maps(A4):
    names = list(A4.Ys.names)
    partial = VertexMap("Ys", "Ys", 4, {nm: nm for nm in names[:-1]})
    with pytest.raises(ValueError):
        extend_map(partial)
    # swapping two curves with different neighbourhoods breaks incidence
    a = A4.name("S", 0, 2)
    b = next(nm for nm in names if nm.family == "V")
    m = {nm: nm for nm in names}
    m[a], m[b] = b, a
    phi = VertexMap("Ys", "Ys", 4, m)
    assert not check_incidence_preserving(phi)
    with pytest.raises(ValueError):
        extend_map(phi)


def test_extension_of_rotation(A4):
    ext = extend_map(symmetry_map(4, "r"), all_spines=False)
    assert ext.simplicial
    for k in range(A4.n):
        assert ext[A4.c(k)] == A4.c(k + 1)


def test_scan_respects_constraints(A4):
    res = scan_intersecting_both(A4.Ys, A4.c(0), A4.c(2), disjoint_from=A4.c(1))
    assert res
    for nm in res:
        assert A4.i(nm, A4.c(0)) and A4.i(nm, A4.c(2)) and not A4.i(nm, A4.c(1))


def test_fill_check_shape(A4):
    v = next(nm for nm in A4.Ys.names if nm.family == "V")
    res = fill_check(4, v)
    assert res["four_chain_fills"] and res["other_chain_fills"]
    assert len(res["four_chain"]) == 4 and len(res["other_chain"]) == 4

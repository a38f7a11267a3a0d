import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sepcurves import build_chain_surface
from sepcurves.complex import (
    disjointness_graph,
    flag_complex,
    gf2_rank,
    is_maximal_separating_system,
)
from sepcurves.families import build_set, incidence_table


def _rank_by_elimination(rows):
    # independent check: Gaussian elimination over explicit bit lists
    width = max((r.bit_length() for r in rows), default=0)
    M = [[(r >> j) & 1 for j in range(width)] for r in rows]
    rank, col = 0, 0
    while rank < len(M) and col < width:
        piv = next((i for i in range(rank, len(M)) if M[i][col]), None)
        if piv is not None:
            M[rank], M[piv] = M[piv], M[rank]
            for i in range(len(M)):
                if i != rank and M[i][col]:
                    M[i] = [a ^ b for a, b in zip(M[i], M[rank])]
            rank += 1
        col += 1
    return rank


@given(st.lists(st.integers(0, 2**12 - 1), max_size=14))
def test_gf2_rank_matches_elimination(rows):
    assert gf2_rank(rows) == _rank_by_elimination(rows)


@given(st.integers(4, 9))
def test_cycle_graph_is_a_circle(m):
    K = flag_complex(nx.cycle_graph(m))
    assert K.betti_mod2()[:2] == [1, 1]
    assert K.euler_characteristic() == 0


@given(st.integers(1, 7))
def test_complete_graph_is_contractible(m):
    K = flag_complex(nx.complete_graph(m))
    assert K.f_vector == tuple(len(list(itertools.combinations(range(m), k + 1)))
                               for k in range(m))
    assert K.betti_mod2() == [1] + [0] * (m - 1)


def test_octahedron_is_a_sphere():
    # the cross-polytope graph has the 2-sphere as its flag complex
    G = nx.complete_multipartite_graph(2, 2, 2)
    K = flag_complex(G)
    assert K.f_vector == (6, 12, 8)
    assert K.betti_mod2() == [1, 0, 1]


@settings(max_examples=60)
@given(st.integers(2, 9), st.floats(0.1, 0.9), st.integers(0, 10**6))
def test_euler_equals_alternating_betti(n, p, seed):
    K = flag_complex(nx.gnp_random_graph(n, p, seed=seed))
    b = K.betti_mod2()
    assert sum((-1) ** k * x for k, x in enumerate(b)) == K.euler_characteristic()


def test_free_faces_of_a_single_triangle():
    K = flag_complex(nx.complete_graph(3))
    (tri, faces), = K.free_faces(2).items()
    assert len(faces) == 3


def test_empty_graph():
    K = flag_complex(nx.Graph())
    assert K.f_vector == () and K.betti_mod2() == []


def test_genus_three_complex(published_values):
    ref = published_values["genus3_xs"]
    Xs = build_set(3, "Xs")
    K = flag_complex(disjointness_graph(Xs.labels(), incidence_table(Xs)))
    rep = K.homology_report()
    assert rep["f_vector"] == ref["f_vector"]
    assert rep["euler"] == ref["euler"]
    assert rep["betti"] == ref["betti_mod2"]


def test_disjointness_graph_edges():
    G = disjointness_graph(["a", "b", "c"], [[0, 0, 2], [0, 0, 1], [2, 1, 0]])
    assert sorted(G.edges) == [("a", "b")]


def test_maximal_system_and_negative_control():
    S = build_chain_surface(4)
    Y = build_set(4, "Y")
    from sepcurves.rigidity import maximal_simplex

    D = [Y[nm] for nm in maximal_simplex(4)]
    ok, pieces = is_maximal_separating_system(S, D)
    assert ok
    assert sorted((p.genus, p.boundaries) for p in pieces) == [(0, 3)] * 2 + [(1, 1)] * 4
    ok, _ = is_maximal_separating_system(S, D[:-1])
    assert not ok
    with pytest.raises(ValueError):
        is_maximal_separating_system(S, [Y[Y.lookup("s_[0,1]")], Y[Y.lookup("s_[1,2]")]])

"""Flag complexes of disjointness graphs and their mod-2 homology."""
from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx


@dataclass
class SimplicialComplex:
    """Flag complex: simplices are the cliques of a graph."""

    vertices: list
    simplices: list = field(default_factory=list)  # per dimension, sorted index tuples

    @property
    def dimension(self) -> int:
        return len(self.simplices) - 1

    @property
    def f_vector(self) -> tuple:
        return tuple(len(s) for s in self.simplices)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * f for k, f in enumerate(self.f_vector))

    def betti_mod2(self) -> list:
        f = self.f_vector
        ranks = [0] * (len(f) + 1)
        for k in range(1, len(f)):
            ranks[k] = gf2_rank(self._boundary_rows(k))
        return [f[k] - ranks[k] - ranks[k + 1] for k in range(len(f))]

    def _boundary_rows(self, k: int) -> list:
        """Rows of the k-th boundary map as bitmasks over (k-1)-simplices."""
        index = {s: i for i, s in enumerate(self.simplices[k - 1])}
        rows = []
        for s in self.simplices[k]:
            mask = 0
            for j in range(len(s)):
                mask |= 1 << index[s[:j] + s[j + 1:]]
            rows.append(mask)
        return rows

    def free_faces(self, k: int) -> dict:
        """Map each k-simplex to its (k-1)-faces lying in no other k-simplex."""
        count = {}
        for s in self.simplices[k]:
            for j in range(len(s)):
                face = s[:j] + s[j + 1:]
                count[face] = count.get(face, 0) + 1
        return {s: [s[:j] + s[j + 1:] for j in range(len(s)) if count[s[:j] + s[j + 1:]] == 1]
                for s in self.simplices[k]}

    def homology_report(self) -> dict:
        return {
            "f_vector": list(self.f_vector),
            "euler": self.euler_characteristic(),
            "betti": self.betti_mod2(),
        }


def gf2_rank(rows: list) -> int:
    """Rank over the two-element field of rows given as integer bitmasks."""
    pivots = {}
    rank = 0
    for r in rows:
        while r:
            top = r.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = r
                rank += 1
                break
            r ^= p
    return rank


def flag_complex(graph: nx.Graph, order=None) -> SimplicialComplex:
    """Clique complex of a graph; vertices are indexed in ``order``."""
    verts = list(order) if order is not None else sorted(graph.nodes)
    pos = {v: i for i, v in enumerate(verts)}
    simplices = [[]]
    for clique in nx.enumerate_all_cliques(graph):
        s = tuple(sorted(pos[v] for v in clique))
        while len(simplices) < len(s):
            simplices.append([])
        simplices[len(s) - 1].append(s)
    for lst in simplices:
        lst.sort()
    if not verts:
        simplices = []
    return SimplicialComplex(verts, simplices)


def disjointness_graph(labels, table) -> nx.Graph:
    """Graph on labels with an edge for every zero off-diagonal entry."""
    G = nx.Graph()
    G.add_nodes_from(labels)
    m = len(labels)
    for i in range(m):
        for j in range(i + 1, m):
            if table[i][j] == 0:
                G.add_edge(labels[i], labels[j])
    return G


def is_maximal_separating_system(surface, curves) -> tuple:
    """Whether disjoint separating curves cut the surface into one-holed tori
    and pairs of pants. Returns (verdict, pieces)."""
    from .topology import cut_pieces, geometric_intersection

    for i in range(len(curves)):
        for j in range(i + 1, len(curves)):
            if geometric_intersection(curves[i], curves[j]):
                raise ValueError("simplex vertices must be pairwise disjoint")
    pieces = cut_pieces(surface, curves)
    ok = all((p.genus, p.boundaries) in ((1, 1), (0, 3)) for p in pieces)
    return ok, pieces

"""Cell model of the closed genus-g surface built from a closed chain.

The surface is the double cover of the sphere branched over points
p_0, ..., p_{n-1} (n = 2g+2) placed in order on the equator. The equator
arcs a_k = [p_k, p_{k+1}] lift to two edges each, one per sheet, and the
preimage of a_k is the chain curve c_k. The northern and southern
hemispheres lift to two disks each, giving four two-cells.

Conventions used everywhere else in the package:

* edge ``e = 2*k + i`` is the lift of a_k in sheet i, oriented p_k -> p_{k+1};
* dart ``2*e`` traverses e forwards, dart ``2*e + 1`` backwards;
* faces are N0, N1, S0, S1 with ids 0..3; edge (k, i) has N^i on its left
  and S^{(i+k) mod 2} on its right;
* face walks are counter-clockwise with the face on the left.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

FACE_NAMES = ("N0", "N1", "S0", "S1")


@dataclass(frozen=True)
class CutPiece:
    """A connected component of the surface cut along disjoint curves."""

    genus: int
    boundaries: int
    euler: int
    # one (curve index, side) pair per boundary circle; side is "L" or "R"
    provenance: tuple = ()
    region: int = -1

    @property
    def is_disk(self) -> bool:
        return self.genus == 0 and self.boundaries == 1

    @property
    def is_annulus(self) -> bool:
        return self.genus == 0 and self.boundaries == 2


@dataclass(frozen=True)
class ChainSurface:
    """Immutable cell structure of the genus-g surface."""

    genus: int
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 2:
            raise ValueError(f"genus must be an integer >= 2, got {self.genus!r}")

    @property
    def n(self) -> int:
        return 2 * self.genus + 2

    @property
    def num_edges(self) -> int:
        return 2 * self.n

    # -- one-cells ---------------------------------------------------------
    def edge(self, k: int, sheet: int) -> int:
        return 2 * (k % self.n) + (sheet % 2)

    def edge_arc(self, e: int) -> int:
        return e // 2

    def edge_sheet(self, e: int) -> int:
        return e % 2

    def tail(self, e: int) -> int:
        return e // 2

    def head(self, e: int) -> int:
        return (e // 2 + 1) % self.n

    def north_face(self, e: int) -> int:
        return e % 2

    def south_face(self, e: int) -> int:
        return 2 + ((e % 2 + e // 2) % 2)

    def left_face(self, e: int) -> int:
        return self.north_face(e)

    def right_face(self, e: int) -> int:
        return self.south_face(e)

    # -- two-cells ---------------------------------------------------------
    @cached_property
    def faces(self) -> tuple:
        """Dart cycles of the four faces, counter-clockwise."""
        n = self.n
        out = []
        for i in range(2):
            out.append(tuple(2 * self.edge(k, i) for k in range(n)))
        for j in range(2):
            out.append(tuple(2 * self.edge(k, j + k) + 1 for k in reversed(range(n))))
        return tuple(out)

    @cached_property
    def dart_face(self) -> tuple:
        table = [None] * (2 * self.num_edges)
        for f, walk in enumerate(self.faces):
            for m, d in enumerate(walk):
                table[d] = (f, m)
        return tuple(table)

    def dart_tail(self, d: int) -> int:
        e = d // 2
        return self.head(e) if d % 2 else self.tail(e)

    def dart_head(self, d: int) -> int:
        e = d // 2
        return self.tail(e) if d % 2 else self.head(e)

    @cached_property
    def rotation(self) -> tuple:
        """Cyclic order of (edge, end) pairs around each vertex.

        Derived from the face walks: leaving a vertex along dart d, the next
        dart clockwise is the successor of d's reverse in its face walk.
        ``end`` is 0 for the tail of the edge, 1 for its head.
        """
        succ = {}
        for walk in self.faces:
            for m, d in enumerate(walk):
                succ[d] = walk[(m + 1) % len(walk)]
        rot = []
        for v in range(self.n):
            start = 2 * self.edge(v, 0)  # leaves v forwards
            order = [start]
            d = succ[start ^ 1]
            while d != start:
                order.append(d)
                d = succ[d ^ 1]
            rot.append(tuple((d // 2, 1 if d % 2 else 0) for d in order))
        return tuple(rot)

    @cached_property
    def side_labels(self) -> dict:
        """Face name -> (side of the even cut, side of the odd cut).

        Cutting along the even cores glues N^i to S^{1-i} across the odd
        arcs, and cutting along the odd cores glues N^i to S^i. The "+" sides
        are the ones containing the sheet-1 north face N1; this choice makes
        the genus-3 incidence tables hold with their stated signs.
        """
        return {
            "N0": ("e-", "o-"),
            "N1": ("e+", "o+"),
            "S0": ("e+", "o-"),
            "S1": ("e-", "o+"),
        }

    @property
    def euler_characteristic(self) -> int:
        return self.n - self.num_edges + len(self.faces)

    def validate(self) -> None:
        seen = sorted(d for walk in self.faces for d in walk)
        if seen != list(range(2 * self.num_edges)):
            raise AssertionError("each edge side must occur exactly once")
        for walk in self.faces:
            for m, d in enumerate(walk):
                nxt = walk[(m + 1) % len(walk)]
                if self.dart_head(d) != self.dart_tail(nxt):
                    raise AssertionError("face walk is not closed")
        # orientability: every edge is used once in each direction
        for e in range(self.num_edges):
            if self.dart_face[2 * e] is None or self.dart_face[2 * e + 1] is None:
                raise AssertionError("edge missing a side")
        if sum(len(r) for r in self.rotation) != 2 * self.num_edges:
            raise AssertionError("vertex links do not cover all edge ends")
        if self.euler_characteristic != 2 - 2 * self.genus:
            raise AssertionError("Euler characteristic mismatch")

    # -- canonical curves --------------------------------------------------
    def chain_curve(self, k: int):
        """Transverse push-off of the core c_k into the sheet-0 side."""
        from fractions import Fraction

        from .curves import Curve

        n = self.n
        k %= n
        return Curve(
            self.genus,
            (
                (self.edge(k + 1, 0), Fraction(1, 4), 1),
                (self.edge(k - 1, 0), Fraction(3, 4), -1),
            ),
        )

    def chain(self) -> list:
        return [self.chain_curve(k) for k in range(self.n)]

    def core_edges(self, k: int) -> tuple:
        """The two edges forming the core of c_k."""
        return (self.edge(k, 0), self.edge(k, 1))

    # -- symmetries ----------------------------------------------------------
    def edge_symmetry(self, which: str, e: int) -> tuple:
        """Image ``(edge, reversed)`` of an edge under a cellular symmetry.

        ``r`` lifts the rotation p_k -> p_{k+1} and keeps sheets; ``s`` lifts
        the half-turn p_k -> p_{-k-1}, which exchanges the hemispheres and
        reverses edges; ``iota`` is the deck involution swapping sheets;
        ``m`` lifts the reflection fixing the equator, which reverses
        orientation by exchanging hemispheres while fixing every p_k.
        """
        k, i = e // 2, e % 2
        if which == "r":
            return self.edge(k + 1, i), False
        if which == "s":
            return self.edge(-k - 2, i + k), True
        if which == "iota":
            return self.edge(k, i + 1), False
        if which == "m":
            return self.edge(k, i + k), False
        raise ValueError(f"unknown symmetry {which!r}")

    # -- serialization -----------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "zero_cells": [{"id": v, "chain_pair": [(v - 1) % self.n, v]} for v in range(self.n)],
            "one_cells": [
                {"id": e, "chain": self.edge_arc(e), "sheet": self.edge_sheet(e),
                 "tail": self.tail(e), "head": self.head(e)}
                for e in range(self.num_edges)
            ],
            "two_cells": [
                {"id": f, "name": FACE_NAMES[f],
                 "walk": [[d // 2, -1 if d % 2 else 1] for d in walk],
                 "labels": list(self.side_labels[FACE_NAMES[f]])}
                for f, walk in enumerate(self.faces)
            ],
            "rotation": [[list(x) for x in r] for r in self.rotation],
            "euler_characteristic": self.euler_characteristic,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1)


_SURFACES: dict = {}


def build_chain_surface(g: int) -> ChainSurface:
    """Return the validated cell model for genus g (memoized)."""
    if not isinstance(g, int) or g < 2:
        raise ValueError(f"genus must be an integer >= 2, got {g!r}")
    surf = _SURFACES.get(g)
    if surf is None:
        surf = ChainSurface(g)
        surf.validate()
        _SURFACES[g] = surf
    return surf


def cut_along(surface: ChainSurface, curves, allow_inessential: bool = True) -> list:
    """Cut the surface along pairwise disjoint curves and summarize the pieces."""
    from .topology import cut_pieces

    return cut_pieces(surface, list(curves))

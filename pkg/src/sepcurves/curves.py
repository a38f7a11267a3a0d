"""Transverse simple closed curves on the chain surface.

A curve is stored as the cyclic list of its crossings with the one-skeleton.
Each crossing is ``(edge, position, direction)``: the position is an exact
fraction in (0, 1) measured along the edge's orientation, and the direction
is +1 when the curve passes from the edge's north face to its south face.
The arc between consecutive crossings is a chord of the face both share.
Relative order of slots on an edge is all that matters topologically; the
fractions just make that order explicit and comparable across curves.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction


def _origin(surface, e: int, direction: int) -> int:
    return surface.north_face(e) if direction > 0 else surface.south_face(e)


def _dest(surface, e: int, direction: int) -> int:
    return surface.south_face(e) if direction > 0 else surface.north_face(e)


@dataclass(frozen=True)
class Curve:
    """Immutable transverse curve; see module docstring for the encoding."""

    genus: int
    crossings: tuple

    def __post_init__(self):
        object.__setattr__(
            self,
            "crossings",
            tuple((int(e), Fraction(p), int(d)) for e, p, d in self.crossings),
        )

    def __len__(self) -> int:
        return len(self.crossings)

    @property
    def surface(self):
        from .surface import build_chain_surface

        return build_chain_surface(self.genus)

    @property
    def is_empty(self) -> bool:
        """True for a curve missing the skeleton (it bounds a disk in a face)."""
        return not self.crossings

    def validate(self) -> None:
        """Check closure, slot ranges and absence of self-crossings."""
        surf = self.surface
        cr = self.crossings
        m = len(cr)
        if m == 1:
            raise ValueError("a closed curve cannot cross the skeleton once")
        seen = set()
        for k, (e, p, d) in enumerate(cr):
            if not 0 <= e < surf.num_edges:
                raise ValueError(f"edge {e} out of range")
            if not 0 < p < 1:
                raise ValueError(f"slot position {p} not in (0, 1)")
            if d not in (1, -1):
                raise ValueError("direction must be +1 or -1")
            if (e, p) in seen:
                raise ValueError("two crossings share a slot")
            seen.add((e, p))
            e2, _, d2 = cr[(k + 1) % m]
            if _dest(surf, e, d) != _origin(surf, e2, d2):
                raise ValueError(f"crossings {k} and {k + 1} do not share a face")
        if m:
            from .engine import Overlay

            Overlay(surf, [self])  # raises on self-interleaving chords

    def normalized(self) -> "Curve":
        """Remove trivial returns (a chord bounding a half-disk with one edge)."""
        cr = list(self.crossings)
        changed = True
        while changed and len(cr) >= 2:
            changed = False
            m = len(cr)
            for k in range(m):
                e1, p1, _ = cr[k]
                e2, p2, _ = cr[(k + 1) % m]
                if e1 != e2:
                    continue
                lo, hi = (p1, p2) if p1 < p2 else (p2, p1)
                if any(e == e1 and lo < p < hi for e, p, _ in cr):
                    continue
                if m == 2:
                    cr = []
                elif k + 1 < m:
                    del cr[k : k + 2]
                else:
                    cr = cr[1:-1]
                changed = True
                break
        return Curve(self.genus, tuple(cr))

    def mapped(self, which: str) -> "Curve":
        """Image under one of the cellular symmetries r, s, iota, m."""
        surf = self.surface
        out = []
        for e, p, d in self.crossings:
            e2, flip = surf.edge_symmetry(which, e)
            # s and m exchange north and south faces, flipping directions
            if flip:
                out.append((e2, 1 - p, -d))
            elif which == "m":
                out.append((e2, p, -d))
            else:
                out.append((e2, p, d))
        return Curve(self.genus, tuple(out))

    def reversed(self) -> "Curve":
        return Curve(self.genus, tuple((e, p, -d) for e, p, d in reversed(self.crossings)))

    def edge_weights(self) -> tuple:
        """Number of crossings with each edge (a coarse normal-coordinate vector)."""
        w = [0] * self.surface.num_edges
        for e, _, _ in self.crossings:
            w[e] += 1
        return tuple(w)

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "crossings": [[e, f"{p.numerator}/{p.denominator}", d] for e, p, d in self.crossings],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Curve":
        return cls(data["genus"], tuple((e, Fraction(p), d) for e, p, d in data["crossings"]))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

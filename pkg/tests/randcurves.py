"""Seeded generators of random curves and curve configurations.

Every generated curve is isotopic to a known member of Y moved by a word in
the cellular symmetries, so reference answers come from the incidence table.
"""
from __future__ import annotations

import random
from fractions import Fraction

from sepcurves.curves import Curve
from sepcurves.families import _full_set, pair_intersection
from sepcurves.topology import reduce_pair

SYMS = ("r", "s", "iota", "m")


def sym_word(rng: random.Random, max_len: int = 4) -> tuple:
    return tuple(rng.choice(SYMS) for _ in range(rng.randint(0, max_len)))


def apply_word(c: Curve, word) -> Curve:
    for w in word:
        c = c.mapped(w)
    return c


def respace(rng: random.Random, c: Curve) -> Curve:
    """Slide slots along edges keeping their order on every edge."""
    by_edge = {}
    for e, p, _ in c.crossings:
        by_edge.setdefault(e, []).append(p)
    new = {}
    for e, ps in by_edge.items():
        ps = sorted(ps)
        qs = sorted(Fraction(rng.randint(1, 10**6), 10**6 + 1) for _ in ps)
        # ties would merge slots; fall back to an even spacing
        if len(set(qs)) < len(qs):
            qs = [Fraction(k + 1, len(ps) + 1) for k in range(len(ps))]
        new.update({(e, p): q for p, q in zip(ps, qs)})
    return Curve(c.genus, tuple((e, new[e, p], d) for e, p, d in c.crossings))


def rotate(rng: random.Random, c: Curve) -> Curve:
    if not c.crossings:
        return c
    k = rng.randrange(len(c.crossings))
    return Curve(c.genus, c.crossings[k:] + c.crossings[:k])


def finger(rng: random.Random, c: Curve) -> Curve:
    """Push a small finger of the curve back and forth across one edge."""
    cr = list(c.crossings)
    if not cr:
        return c
    k = rng.randrange(len(cr))
    e, p, d = cr[k]
    above = [q for f, q, _ in cr if f == e and q > p]
    q = min(above) if above else Fraction(1)
    p1, p2 = p + (q - p) / 3, p + 2 * (q - p) / 3
    cr[k + 1:k + 1] = [(e, p1, -d), (e, p2, d)]
    return Curve(c.genus, tuple(cr))


def rerepresent(rng: random.Random, c: Curve, pool=()) -> Curve:
    """A random transverse curve isotopic to ``c``."""
    moves = rng.randint(1, 4)
    for _ in range(moves):
        t = rng.random()
        if t < 0.3:
            c = respace(rng, c)
        elif t < 0.5:
            c = rotate(rng, c)
        elif t < 0.6:
            c = c.reversed()
        elif t < 0.85:
            c = finger(rng, c)
        elif pool:
            # isotope c into minimal position with an unrelated curve
            c = reduce_pair(c, rng.choice(pool))[0]
    return c


class CurvePool:
    """Members of Y for one genus with their table indices."""

    def __init__(self, g: int):
        self.g = g
        self.Y = _full_set(g)
        self.curves = [self.Y.curves[nm] for nm in self.Y.names]

    def __len__(self) -> int:
        return len(self.curves)

    def i(self, a: int, b: int) -> int:
        return pair_intersection(self.g, a, b)

    def pair(self, rng: random.Random, meeting: bool | None = None) -> tuple:
        while True:
            a, b = rng.randrange(len(self)), rng.randrange(len(self))
            if meeting is None or (self.i(a, b) > 0) == meeting:
                return a, b

    def simplex(self, rng: random.Random, size: int) -> list:
        """Random pairwise disjoint distinct members, greedily."""
        order = list(range(len(self)))
        rng.shuffle(order)
        out = []
        for v in order:
            if all(v != u and self.i(u, v) == 0 for u in out):
                out.append(v)
                if len(out) == size:
                    break
        return out


_POOLS: dict = {}


def pool(g: int) -> CurvePool:
    if g not in _POOLS:
        _POOLS[g] = CurvePool(g)
    return _POOLS[g]

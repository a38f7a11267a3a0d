"""Overlay of transverse curves: arrangement, regions, bigons and offsets.

Every face of the surface is a convex polygon once its boundary points
(corners and curve slots) are placed on a parabola. Chords of different
curves cross iff their endpoints interleave; crossing order along a chord is
read off from exact rational intersection coordinates. The arrangement is a
half-edge structure that lives entirely inside the faces: boundary half-edges
are glued to their partners in the neighbouring face by ``twin``.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .curves import Curve
from .surface import CutPiece


class DegenerateArrangement(Exception):
    """Three chords met in one point for the chosen boundary coordinates."""


class CurveError(ValueError):
    pass


def _separate_ties(surface, curves) -> list:
    """Re-space slots by rank on edges where two curves share a position.

    Sliding slots along an edge without changing their order is an isotopy,
    and afterwards every slot has a distinct position, so offsets computed
    "a third of the way to the neighbour" never collide.
    """
    slots = {}
    for ci, c in enumerate(curves):
        for k, (e, p, _) in enumerate(c.crossings):
            slots.setdefault(e, []).append((p, ci, k))
    moved = {}
    for e, lst in slots.items():
        lst.sort()
        if all(lst[i][0] != lst[i + 1][0] for i in range(len(lst) - 1)):
            continue
        L = len(lst)
        for r, (_, ci, k) in enumerate(lst):
            moved[(ci, k)] = Fraction(r + 1, L + 1)
    if not moved:
        return list(curves)
    out = []
    for ci, c in enumerate(curves):
        cr = tuple((e, moved.get((ci, k), p), d) for k, (e, p, d) in enumerate(c.crossings))
        out.append(Curve(c.genus, cr) if cr != c.crossings else c)
    return out


class Overlay:
    """Arrangement of several curves drawn on one surface.

    ``curves`` holds the curves actually drawn: they equal the inputs except
    where coincident slot positions had to be re-spaced.
    """

    def __init__(self, surface, curves, seed: int = 0):
        self.surface = surface
        self.curves = list(curves)
        for c in self.curves:
            if c.is_empty:
                raise CurveError("cannot overlay a curve that misses the skeleton")
        self.curves = _separate_ties(surface, self.curves)
        for attempt in range(20):
            try:
                self._build(seed + attempt)
                return
            except DegenerateArrangement:
                continue
        raise RuntimeError("could not find a generic arrangement")

    # -- construction ------------------------------------------------------
    def _build(self, seed: int) -> None:
        surf = self.surface
        curves = self.curves
        ne = surf.num_edges
        edge_slots = [[] for _ in range(ne)]
        for ci, c in enumerate(curves):
            for k, (e, p, d) in enumerate(c.crossings):
                edge_slots[e].append((p, ci, k))
        for lst in edge_slots:
            lst.sort()
        self.edge_slots = edge_slots
        slot_rank = {}
        for lst in edge_slots:
            for r, (_, ci, k) in enumerate(lst):
                slot_rank[(ci, k)] = r
        self.slot_rank = slot_rank

        rng = random.Random(seed)
        # boundary points of every face
        nf = len(surf.faces)
        bps = []  # per face: list of ("v", vertex) or ("s", ci, k)
        slot_bp = [dict() for _ in range(nf)]
        bseg = []  # per face: boundary point index -> (edge, segment)
        tcoord = []
        for f, walk in enumerate(surf.faces):
            pts, segs = [], []
            for d in walk:
                e = d // 2
                slots = edge_slots[e]
                L = len(slots)
                pts.append(("v", surf.dart_tail(d)))
                segs.append((e, L if d % 2 else 0))
                order = range(L - 1, -1, -1) if d % 2 else range(L)
                for j, r in enumerate(order):
                    _, ci, k = slots[r]
                    slot_bp[f][(ci, k)] = len(pts)
                    pts.append(("s", ci, k))
                    segs.append((e, L - 1 - j if d % 2 else r + 1))
            bps.append(pts)
            bseg.append(segs)
            t, acc = [], 0
            for _ in pts:
                acc += 1000 + rng.getrandbits(9)
                t.append(acc)
            tcoord.append(t)
        self.bps, self.slot_bp, self.bseg = bps, slot_bp, bseg

        # chords
        ch_curve, ch_k, ch_face, ch_a, ch_b = [], [], [], [], []
        bp_chord = [dict() for _ in range(nf)]
        chord_of = {}
        for ci, c in enumerate(curves):
            cr = c.crossings
            m = len(cr)
            for k in range(m):
                e, p, d = cr[k]
                f = surf.south_face(e) if d > 0 else surf.north_face(e)
                a = slot_bp[f].get((ci, k))
                b = slot_bp[f].get((ci, (k + 1) % m))
                if a is None or b is None:
                    raise CurveError("curve is not closed through consecutive faces")
                u = len(ch_curve)
                chord_of[(ci, k)] = u
                ch_curve.append(ci)
                ch_k.append(k)
                ch_face.append(f)
                ch_a.append(a)
                ch_b.append(b)
                bp_chord[f][a] = (u, True)
                bp_chord[f][b] = (u, False)
        self.ch_curve, self.ch_k, self.ch_face = ch_curve, ch_k, ch_face
        self.ch_a, self.ch_b, self.bp_chord, self.chord_of = ch_a, ch_b, bp_chord, chord_of
        nch = len(ch_curve)

        # crossings inside each face
        by_face = [[] for _ in range(nf)]
        for u in range(nch):
            by_face[ch_face[u]].append(u)
        along = [[] for _ in range(nch)]  # (key, crossing id)
        xs = []  # (u, v, sign of cross(du, dv))
        pair_count = {}
        for f in range(nf):
            t = tcoord[f]
            lst = by_face[f]
            ivs = []
            for u in lst:
                a, b = ch_a[u], ch_b[u]
                lo, hi = (a, b) if a < b else (b, a)
                ivs.append((lo, hi, u))
            ivs.sort()
            # interleaving pairs: lo1 < lo2 < hi1 < hi2
            for i1 in range(len(ivs)):
                lo1, hi1, u = ivs[i1]
                for i2 in range(i1 + 1, len(ivs)):
                    lo2, hi2, v = ivs[i2]
                    if lo2 >= hi1:
                        break
                    if hi2 <= hi1:
                        continue
                    cu, cv = ch_curve[u], ch_curve[v]
                    if cu == cv:
                        raise CurveError("curve crosses itself")
                    ta, tb = t[ch_a[u]], t[ch_b[u]]
                    tc, td = t[ch_a[v]], t[ch_b[v]]
                    s1, s2 = ta + tb, tc + td
                    # exact integers divided once: equal rationals give equal
                    # floats, and near-ties only cost a retry
                    x = (ta * tb - tc * td) / (s1 - s2)
                    xid = len(xs)
                    sgn = (tb - ta) * (td - tc) * (s2 - s1)
                    xs.append((u, v, 1 if sgn > 0 else -1))
                    along[u].append((x if tb > ta else -x, xid))
                    along[v].append((x if td > tc else -x, xid))
                    key = (cu, cv) if cu < cv else (cv, cu)
                    pair_count[key] = pair_count.get(key, 0) + 1
        self.crossing_points = xs
        self.pair_count = pair_count
        # order crossings along chords
        xpos = {}
        ch_x = []
        for u in range(nch):
            lst = along[u]
            lst.sort()
            for i in range(1, len(lst)):
                if lst[i][0] == lst[i - 1][0]:
                    raise DegenerateArrangement
            ids = [xid for _, xid in lst]
            ch_x.append(ids)
            for j, xid in enumerate(ids):
                xpos[(xid, u)] = j + 1  # index in the chord's point list
        self.ch_x = ch_x
        self.xpos = xpos

        # half-edges: boundary ones first, then two per chord segment
        bbase, nb = [], 0
        for f in range(nf):
            bbase.append(nb)
            nb += len(bps[f])
        cbase, nc = [], nb
        for u in range(nch):
            cbase.append(nc)
            nc += 2 * (len(ch_x[u]) + 1)
        self.bbase, self.cbase, self.nb, self.nhe = bbase, cbase, nb, nc
        nxt = [0] * nc
        twin = [0] * nc
        he_face = [0] * nc
        # boundary
        seg_he = {}
        for f in range(nf):
            B = len(bps[f])
            base = bbase[f]
            for i in range(B):
                h = base + i
                he_face[h] = f
                j = (i + 1) % B
                hit = bp_chord[f].get(j)
                if hit is None:
                    nxt[h] = base + j
                else:
                    u, start = hit
                    nxt[h] = cbase[u] if start else cbase[u] + 2 * len(ch_x[u]) + 1
                seg = bseg[f][i]
                other = seg_he.get(seg)
                if other is None:
                    seg_he[seg] = h
                else:
                    twin[h] = other
                    twin[other] = h
        # chords
        for u in range(nch):
            f = ch_face[u]
            ids = ch_x[u]
            nseg = len(ids) + 1
            base = cbase[u]
            for j in range(nseg):
                hf, hb = base + 2 * j, base + 2 * j + 1
                twin[hf], twin[hb] = hb, hf
                he_face[hf] = he_face[hb] = f
                # forward: arrives at point j+1
                if j + 1 == nseg:
                    nxt[hf] = bbase[f] + ch_b[u]
                else:
                    nxt[hf] = self._turn(u, ids[j], 1, xpos)
                # backward: arrives at point j
                if j == 0:
                    nxt[hb] = bbase[f] + ch_a[u]
                else:
                    nxt[hb] = self._turn(u, ids[j - 1], -1, xpos)
        self.nxt, self.twin, self.he_face = nxt, twin, he_face

        # cells
        cell = [-1] * nc
        ncell = 0
        for h in range(nc):
            if cell[h] >= 0:
                continue
            g = h
            while cell[g] < 0:
                cell[g] = ncell
                g = nxt[g]
            ncell += 1
        self.cell, self.ncell = cell, ncell

    def _turn(self, u: int, xid: int, s: int, xpos) -> int:
        a, b, sgn = self.crossing_points[xid]
        if a == u:
            v, sv = b, sgn
        else:
            v, sv = a, -sgn
        jv = xpos[(xid, v)]
        if s * sv > 0:
            return self.cbase[v] + 2 * jv
        return self.cbase[v] + 2 * (jv - 1) + 1

    # -- queries -----------------------------------------------------------
    @property
    def crossing_count(self) -> int:
        return len(self.crossing_points)

    def count_between(self, i: int, j: int) -> int:
        key = (i, j) if i < j else (j, i)
        return self.pair_count.get(key, 0)

    def _chord_table(self):
        t = getattr(self, "_he_info", None)
        if t is None:
            t = [None] * self.nhe
            for u in range(len(self.ch_curve)):
                base = self.cbase[u]
                for j in range(len(self.ch_x[u]) + 1):
                    t[base + 2 * j] = (u, 1)
                    t[base + 2 * j + 1] = (u, -1)
            self._he_info = t
        return t

    def regions(self, walls) -> "Regions":
        return Regions(self, set(walls))


class Regions:
    """Complementary regions of a subset of the overlaid curves."""

    def __init__(self, ov: Overlay, walls: set):
        self.ov = ov
        self.walls = walls
        info = ov._chord_table()
        self.info = info
        ch_curve = ov.ch_curve
        parent = list(range(ov.ncell))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        cell, twin = ov.cell, ov.twin
        for h in range(ov.nhe):
            if h < ov.nb or ch_curve[info[h][0]] not in walls:
                a, b = find(cell[h]), find(cell[twin[h]])
                if a != b:
                    parent[a] = b
        roots = sorted({find(c) for c in range(ov.ncell)})
        rid = {r: i for i, r in enumerate(roots)}
        self.cell_region = [rid[find(c)] for c in range(ov.ncell)]
        nreg = len(roots)
        self.count = nreg
        chi = [0] * nreg
        for c in range(ov.ncell):
            chi[self.cell_region[c]] += 1
        cr = self.cell_region
        # edges: boundary segments counted once, transparent chord segments once
        for h in range(ov.nb):
            if h < twin[h]:
                chi[cr[cell[h]]] -= 1
        for u in range(len(ch_curve)):
            if ch_curve[u] not in walls:
                base = ov.cbase[u]
                for j in range(len(ov.ch_x[u]) + 1):
                    chi[cr[cell[base + 2 * j]]] -= 1
        # vertices: skeleton corners, transparent slots, transparent crossings
        surf = ov.surface
        seen_v = set()
        for f, pts in enumerate(ov.bps):
            base = ov.bbase[f]
            for i, pt in enumerate(pts):
                if pt[0] == "v":
                    if pt[1] in seen_v:
                        continue
                    seen_v.add(pt[1])
                    chi[cr[cell[base + i]]] += 1
                elif pt[1] not in walls and f == surf.north_face(ov.curves[pt[1]].crossings[pt[2]][0]):
                    chi[cr[cell[base + i]]] += 1
        for xid, (u, v, _) in enumerate(ov.crossing_points):
            if ch_curve[u] not in walls and ch_curve[v] not in walls:
                h = ov.cbase[u] + 2 * (ov.xpos[(xid, u)] - 1)
                chi[cr[cell[h]]] += 1
        self.chi = chi
        # boundary cycles along walls
        nxt = ov.nxt
        cycles = []
        cyc_of = {}
        for u in range(len(ch_curve)):
            if ch_curve[u] not in walls:
                continue
            base = ov.cbase[u]
            for h in range(base, base + 2 * (len(ov.ch_x[u]) + 1)):
                if h in cyc_of:
                    continue
                cyc = []
                g = h
                while g not in cyc_of:
                    cyc_of[g] = len(cycles)
                    cyc.append(g)
                    g = nxt[g]
                    while g < ov.nb or ch_curve[info[g][0]] not in walls:
                        g = nxt[twin[g]]
                cycles.append(cyc)
        self.cycles = cycles
        self.cycle_region = [cr[cell[c[0]]] for c in cycles]
        nbd = [0] * nreg
        for r in self.cycle_region:
            nbd[r] += 1
        self.nboundary = nbd
        genus = []
        for r in range(nreg):
            twice = 2 - nbd[r] - chi[r]
            if twice % 2 or twice < 0:
                raise AssertionError("inconsistent region topology")
            genus.append(twice // 2)
        self.genus = genus

    def region_of_he(self, h: int) -> int:
        return self.cell_region[self.ov.cell[h]]

    def region_left_of(self, ci: int, k: int = 0) -> int:
        """Region on the left of chord k of curve ci."""
        u = self.ov.chord_of[(ci, k)]
        return self.region_of_he(self.ov.cbase[u])

    def region_right_of(self, ci: int, k: int = 0) -> int:
        u = self.ov.chord_of[(ci, k)]
        return self.region_of_he(self.ov.cbase[u] + 1)

    def region_of_curve(self, ci: int) -> int:
        """Region containing a transparent curve."""
        return self.region_left_of(ci, 0)

    def region_of_edge(self, e: int, seg: int = 0) -> int:
        """Region containing a segment of a skeleton edge (seg 0 is at the tail)."""
        surf = self.ov.surface
        f, m = surf.dart_face[2 * e]
        pts = self.ov.bps[f]
        # locate the boundary half-edge carrying (e, seg)
        for i, s in enumerate(self.ov.bseg[f]):
            if s == (e, seg):
                return self.region_of_he(self.ov.bbase[f] + i)
        raise KeyError((e, seg))

    def cycle_curve_runs(self, idx: int):
        """List of (curve, [half-edges]) maximal runs along a boundary cycle."""
        cyc = self.cycles[idx]
        ch_curve, info = self.ov.ch_curve, self.info
        labels = [ch_curve[info[h][0]] for h in cyc]
        n = len(cyc)
        if all(l == labels[0] for l in labels):
            return [(labels[0], list(cyc))]
        start = next(i for i in range(n) if labels[i] != labels[i - 1])
        runs = []
        for t in range(n):
            i = (start + t) % n
            if not runs or labels[i] != runs[-1][0] or i == start:
                runs.append((labels[i], [cyc[i]]))
            else:
                runs[-1][1].append(cyc[i])
        return runs

    def pieces(self) -> list:
        out = []
        ov = self.ov
        for r in range(self.count):
            prov = []
            for idx, reg in enumerate(self.cycle_region):
                if reg != r:
                    continue
                runs = self.cycle_curve_runs(idx)
                if len(runs) == 1:
                    _, s = self.info[self.cycles[idx][0]]
                    prov.append((runs[0][0], "L" if s > 0 else "R"))
                else:
                    prov.append(tuple(sorted({c for c, _ in runs})))
            out.append(CutPiece(self.genus[r], self.nboundary[r], self.chi[r],
                                tuple(sorted(prov, key=repr)), r))
        return out



# -- boundary walks ---------------------------------------------------------
def _cycle_passages(R: Regions, idx: int) -> list:
    ov, info = R.ov, R.info
    cyc = R.cycles[idx]
    n = len(cyc)
    out = []
    for t in range(n):
        ua, sa = info[cyc[t]]
        ub, _ = info[cyc[(t + 1) % n]]
        ci = ov.ch_curve[ua]
        if ci != ov.ch_curve[ub] or ua == ub:
            continue
        k = ov.ch_k[ub] if sa > 0 else ov.ch_k[ua]
        out.append((ci, k, sa * ov.curves[ci].crossings[k][2]))
    return out


def _run_passages(R: Regions, run) -> list:
    ov, info = R.ov, R.info
    out = []
    for t in range(len(run) - 1):
        ua, sa = info[run[t]]
        ub, _ = info[run[t + 1]]
        if ua == ub:
            continue
        ci = ov.ch_curve[ua]
        k = ov.ch_k[ub] if sa > 0 else ov.ch_k[ua]
        out.append((ci, k, sa * ov.curves[ci].crossings[k][2]))
    return out


def _shifted(ov: Overlay, ci: int, k: int, side: int) -> tuple:
    """Edge and a position one third of the way toward the next slot on ``side``."""
    e, p, _ = ov.curves[ci].crossings[k]
    lst = ov.edge_slots[e]
    r = ov.slot_rank[(ci, k)]
    if side > 0:
        nb = lst[r + 1][0] if r + 1 < len(lst) else Fraction(1)
    else:
        nb = lst[r - 1][0] if r > 0 else Fraction(0)
    return e, p + (nb - p) / 3


def offset_crossing(ov: Overlay, ci: int, k: int, travel: int, left: bool) -> tuple:
    # crossing with travel +1 exits the north face through the forward dart;
    # the walker's left then points toward increasing positions
    side = travel if left else -travel
    e, q = _shifted(ov, ci, k, side)
    return (e, q, travel)


def cycle_offset(R: Regions, idx: int) -> Curve:
    """Copy of a boundary cycle pushed slightly into its region."""
    ov = R.ov
    cr = [offset_crossing(ov, ci, k, d, True) for ci, k, d in _cycle_passages(R, idx)]
    return Curve(ov.surface.genus, tuple(cr))


# -- bigons -------------------------------------------------------------------
def find_bigons(R: Regions) -> list:
    """Boundary cycles of disk regions made of exactly one arc of two curves."""
    out = []
    for idx, reg in enumerate(R.cycle_region):
        if R.chi[reg] == 1 and R.nboundary[reg] == 1:
            runs = R.cycle_curve_runs(idx)
            if len(runs) == 2:
                out.append((idx, runs))
            elif len(runs) == 1:
                raise CurveError("a curve bounds a disk")
    return out


def push_across(R: Regions, runs, mover: int) -> Curve:
    """Isotope curve ``mover`` across a bigon, just past the opposite arc."""
    ov, info = R.ov, R.info
    if runs[0][0] == mover:
        xrun, yrun = runs[0][1], runs[1][1]
    else:
        xrun, yrun = runs[1][1], runs[0][1]
    X = ov.curves[mover].crossings
    n = len(X)
    sx = info[xrun[0]][1]
    ks = []
    for h in xrun:
        k = ov.ch_k[info[h][0]]
        if not ks or ks[-1] != k:
            ks.append(k)
    r = len(ks) - 1
    start = ks[-1] + 1 if sx > 0 else ks[0] + 1
    kept = [X[(start + t) % n] for t in range(n - r)]
    arc = [offset_crossing(ov, ci, k, d, False) for ci, k, d in _run_passages(R, yrun)]
    if sx > 0:
        arc = [(e, q, -d) for e, q, d in reversed(arc)]
    return Curve(ov.surface.genus, tuple(kept + arc)).normalized()

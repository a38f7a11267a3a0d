"""Topological queries on curves: minimal position, isotopy, cutting, sides.

Everything reduces to two primitives of :mod:`sepcurves.engine`: tracing the
complementary regions of an overlay and pushing one curve across a bigon.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .curves import Curve
from .engine import CurveError, Overlay, cycle_offset, find_bigons, push_across
from .surface import build_chain_surface


@dataclass(frozen=True)
class BoundaryCurve:
    """One component of the boundary of a regular neighbourhood."""

    curve: Curve
    essential: bool
    region_genus: int
    region_boundaries: int


def _surface(curves):
    gs = {c.genus for c in curves}
    if len(gs) != 1:
        raise CurveError("curves live on different surfaces")
    return build_chain_surface(gs.pop())


@lru_cache(maxsize=65536)
def is_null_homotopic(c: Curve) -> bool:
    c = c.normalized()
    if c.is_empty:
        return True
    R = Overlay(c.surface, [c]).regions({0})
    return any(R.chi[r] == 1 and R.nboundary[r] == 1 for r in range(R.count))


def reduce_pair(a: Curve, b: Curve, trace: list | None = None):
    """Isotope ``a`` until it is in minimal position with ``b``.

    Returns ``(a', b, count)``. With ``trace`` given, the crossing count of
    every intermediate overlay is appended to it.
    """
    surf = _surface([a, b])
    x, y = a.normalized(), b.normalized()
    if x.is_empty or y.is_empty:
        return x, y, 0
    while True:
        ov = Overlay(surf, [x, y])
        x, y = ov.curves
        n = ov.crossing_count
        if trace is not None:
            trace.append(n)
        if n <= 1:
            return x, y, n
        R = ov.regions({0, 1})
        try:
            bigons = find_bigons(R)
        except CurveError:
            # a curve bounding a disk misses everything after an isotopy
            if is_null_homotopic(x) or is_null_homotopic(y):
                return x, y, 0
            raise
        if not bigons:
            return x, y, n
        _, runs = bigons[0]
        x = push_across(R, runs, 0)
        if x.is_empty:
            return x, y, 0


@lru_cache(maxsize=400000)
def _gi(a: Curve, b: Curve) -> int:
    if a == b:
        return 0
    return reduce_pair(a, b)[2]


def geometric_intersection(a: Curve, b: Curve, cache: bool = True) -> int:
    """Minimal number of intersection points of curves isotopic to a and b."""
    if not cache:
        return 0 if a == b else reduce_pair(a, b)[2]
    if (b.crossings, ) < (a.crossings, ):
        a, b = b, a
    return _gi(a, b)


def reduce_against(x: Curve, fixed):
    """Isotope ``x`` into minimal position with pairwise disjoint fixed curves.

    Returns ``(x', fixed')``; the fixed curves only change by sliding slots
    along edges, so they should be used together with ``x'``.
    """
    x = x.normalized()
    fixed = list(fixed)
    if x.is_empty or not fixed:
        return x, fixed
    surf = _surface([x] + fixed)
    walls = set(range(len(fixed) + 1))
    while True:
        ov = Overlay(surf, fixed + [x])
        fixed, x = list(ov.curves[:-1]), ov.curves[-1]
        if ov.crossing_count == 0:
            return x, fixed
        R = ov.regions(walls)
        mover = len(fixed)
        pick = [runs for _, runs in find_bigons(R) if mover in (runs[0][0], runs[1][0])]
        if not pick:
            return x, fixed
        x = push_across(R, pick[0], mover)


def minimal_position(curves, fixed=()) -> list:
    """Isotope a list of curves into pairwise minimal position.

    Curves whose index is in ``fixed`` are only moved when no other bigon
    move helps.
    """
    cur = [c.normalized() for c in curves]
    if len(cur) < 2:
        return cur
    surf = _surface(cur)
    if any(c.is_empty for c in cur):
        raise CurveError("null curve in a multi-curve configuration")
    walls = set(range(len(cur)))
    while True:
        ov = Overlay(surf, cur)
        cur = list(ov.curves)
        total = ov.crossing_count
        R = ov.regions(walls)
        bigons = find_bigons(R)
        if bigons:
            _, runs = bigons[0]
            mover = runs[0][0] if runs[0][0] not in fixed else runs[1][0]
            cur[mover] = push_across(R, runs, mover)
            continue
        moved = False
        for (i, j), cnt in sorted(ov.pair_count.items()):
            if cnt < 2:
                continue
            Rij = ov.regions({i, j})
            for _, runs in find_bigons(Rij):
                for mover in sorted((i, j), key=lambda m: m in fixed):
                    trial = list(cur)
                    trial[mover] = push_across(Rij, runs, mover)
                    if Overlay(surf, trial).crossing_count < total:
                        cur = trial
                        moved = True
                        break
                if moved:
                    break
            if moved:
                break
        if not moved:
            return cur


def _connected(n: int, pairs) -> bool:
    adj = {i: set() for i in range(n)}
    for (i, j), cnt in pairs.items():
        if cnt:
            adj[i].add(j)
            adj[j].add(i)
    seen, stack = {0}, [0]
    while stack:
        for j in adj[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == n


def neighborhood_boundary(curves, presorted: bool = False, fixed=()) -> list:
    """Boundary components of a regular neighbourhood of a connected union."""
    cur = list(curves) if presorted else minimal_position(curves, fixed)
    if not cur:
        raise CurveError("empty input")
    surf = _surface(cur)
    ov = Overlay(surf, cur)
    if not _connected(len(cur), ov.pair_count):
        raise CurveError("union of curves is disconnected")
    R = ov.regions(set(range(len(cur))))
    out = []
    for idx, reg in enumerate(R.cycle_region):
        c = cycle_offset(R, idx).normalized()
        disk = R.chi[reg] == 1 and R.nboundary[reg] == 1
        out.append(BoundaryCurve(c, not disk and not c.is_empty,
                                 R.genus[reg], R.nboundary[reg]))
    return out


def cut_pieces(surface, curves) -> list:
    """Pieces of the surface cut along pairwise disjoint curves."""
    cur = [c.normalized() for c in curves]
    if not cur:
        raise CurveError("nothing to cut along")
    if any(c.is_empty for c in cur):
        raise CurveError("cannot cut along a curve missing the skeleton")
    for c in cur:
        c.validate()
    if len(cur) > 1:
        cur = minimal_position(cur)
    ov = Overlay(surface, cur)
    if ov.crossing_count:
        raise CurveError("curves to cut along must be pairwise disjoint")
    return ov.regions(set(range(len(cur)))).pieces()


def is_isotopic(a: Curve, b: Curve) -> bool:
    if a == b:
        return True
    x, y, n = reduce_pair(a, b)
    if n:
        return False
    if x.is_empty or y.is_empty:
        return x.is_empty and y.is_empty
    R = Overlay(x.surface, [x, y]).regions({0, 1})
    for r in range(R.count):
        if R.genus[r] == 0 and R.nboundary[r] == 2:
            owners = set()
            for idx, reg in enumerate(R.cycle_region):
                if reg == r:
                    owners.update(c for c, _ in R.cycle_curve_runs(idx))
            if owners == {0, 1}:
                return True
    return False


@lru_cache(maxsize=65536)
def _side_genera(c: Curve):
    c = c.normalized()
    if c.is_empty:
        raise CurveError("null-homotopic curve")
    R = Overlay(c.surface, [c]).regions({0})
    if any(R.chi[r] == 1 and R.nboundary[r] == 1 for r in range(R.count)):
        raise CurveError("null-homotopic curve")
    if R.count == 1:
        return None
    left = R.region_left_of(0)
    return R.genus[left], R.genus[1 - left]


def is_separating(a: Curve) -> bool:
    return _side_genera(a) is not None


def separating_genus(a: Curve) -> tuple:
    """Genera of the two sides of a separating curve, ascending."""
    sg = _side_genera(a)
    if sg is None:
        raise CurveError("curve is not separating")
    return tuple(sorted(sg))


def curve_genus(a: Curve) -> int:
    """Genus of a separating curve: the smaller genus of its two sides."""
    return separating_genus(a)[0]


def _disjoint_rep(sep: Curve, a: Curve):
    x, sep, n = reduce_pair(a, sep)
    if n:
        raise CurveError("curve intersects the separating curve")
    return x, sep


def side_of(sep: Curve, a: Curve) -> str:
    """'L' or 'R': the side of ``sep`` (w.r.t. its orientation) containing a."""
    sep = sep.normalized()
    if not is_separating(sep):
        raise CurveError("first argument must be separating")
    x, sep = _disjoint_rep(sep, a)
    if x.is_empty:
        raise CurveError("null curve has no side")
    R = Overlay(sep.surface, [sep, x]).regions({0})
    return "L" if R.region_of_curve(1) == R.region_left_of(0) else "R"


def side_genus(sep: Curve, side: str) -> int:
    gl, gr = _side_genera(sep.normalized())
    return gl if side == "L" else gr


def same_side(sep: Curve, a: Curve, b: Curve) -> bool:
    return side_of(sep, a) == side_of(sep, b)


def fills(curves) -> bool:
    """True iff every complementary region of the union is a disk."""
    cur = minimal_position(curves)
    if any(c.is_empty for c in cur):
        return False
    R = Overlay(cur[0].surface, cur).regions(set(range(len(cur))))
    return all(R.chi[r] == 1 and R.nboundary[r] == 1 for r in range(R.count))


def fills_sides(sep: Curve, families) -> list:
    """For each list of curves, whether it fills the side of ``sep`` it lies in.

    A collection disjoint from ``sep`` fills its side when every region of the
    complement of sep and the collection, on that side, is a disk or an
    annulus between sep and the collection.
    """
    sep = sep.normalized()
    reps = [[_disjoint_rep(sep, c)[0] for c in fam] for fam in families]
    flat = [c for fam in reps for c in fam]
    cur = minimal_position([sep] + flat)
    # sep may have moved; it stays isotopic and disjoint from the others
    ov = Overlay(sep.surface, cur)
    if any(ov.count_between(0, j) for j in range(1, len(cur))):
        raise CurveError("collection meets the separating curve")
    Rs = ov.regions({0})
    R = ov.regions(set(range(len(cur))))
    results = []
    pos = 1
    for fam in reps:
        idxs = list(range(pos, pos + len(fam)))
        pos += len(fam)
        side = Rs.region_of_curve(idxs[0])
        if any(Rs.region_of_curve(i) != side for i in idxs):
            results.append(False)
            continue
        sub = ov.regions({0, *idxs})
        ok = True
        for r in range(sub.count):
            # which side of sep is this region on
            cyc = [i for i, reg in enumerate(sub.cycle_region) if reg == r]
            if not cyc:
                ok = False
                break
            h = sub.cycles[cyc[0]][0]
            if Rs.cell_region[ov.cell[h]] != side:
                continue
            if sub.chi[r] == 1 and sub.nboundary[r] == 1:
                continue
            if sub.genus[r] == 0 and sub.nboundary[r] == 2:
                kinds = sorted(
                    sorted({c for c, _ in sub.cycle_curve_runs(i)}) == [0] for i in cyc
                )
                if kinds == [False, True]:
                    continue
            ok = False
            break
        results.append(ok)
    return results


# -- sharing pairs ------------------------------------------------------------
def _sharing_structure(a: Curve, b: Curve):
    x, y, n = reduce_pair(a, b)
    if n == 0:
        return None
    ov = Overlay(x.surface, [x, y])
    Ra, Rb, R = ov.regions({0}), ov.regions({1}), ov.regions({0, 1})
    if Ra.count != 2 or Rb.count != 2:
        return None
    one_a = [r for r in range(2) if Ra.genus[r] == 1]
    one_b = [r for r in range(2) if Rb.genus[r] == 1]
    if len(one_a) != 1 or len(one_b) != 1:
        return None
    inside, outside = [], []
    for r in range(R.count):
        cyc = [i for i, reg in enumerate(R.cycle_region) if reg == r]
        h = R.cycles[cyc[0]][0]
        c = ov.cell[h]
        in_a = Ra.cell_region[c] == one_a[0]
        in_b = Rb.cell_region[c] == one_b[0]
        if in_a and in_b:
            inside.append((r, cyc))
        elif not in_a and not in_b:
            outside.append(r)
    return R, inside, outside


def is_sharing_pair(a: Curve, b: Curve) -> bool:
    """Genus-1 curves whose genus-1 sides meet in an annulus with connected outside."""
    for c in (a, b):
        if not is_separating(c) or curve_genus(c) != 1:
            return False
    st = _sharing_structure(a, b)
    if st is None:
        return False
    R, inside, outside = st
    if len(inside) != 1 or len(outside) != 1:
        return False
    r, _ = inside[0]
    return R.genus[r] == 0 and R.nboundary[r] == 2


def shared_curve(a: Curve, b: Curve) -> Curve:
    """Core of the annulus shared by the genus-1 sides of a sharing pair."""
    if not is_sharing_pair(a, b):
        raise CurveError("not a sharing pair")
    R, inside, _ = _sharing_structure(a, b)
    _, cyc = inside[0]
    return cycle_offset(R, cyc[0]).normalized()


def chain_check(curves) -> bool:
    """Consecutive intersections 1 and all other pairs disjoint."""
    m = len(curves)
    for i, j in combinations(range(m), 2):
        want = 1 if j == i + 1 else 0
        if geometric_intersection(curves[i], curves[j]) != want:
            return False
    return True

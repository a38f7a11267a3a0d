"""Named curve families C, S, B, U, V and the sets Y, Y^s, X, X^s.

Intervals of chain indices are ``(start, length)`` pairs read modulo 2g+2.
Every family member is built by taking neighbourhood boundaries of unions of
chain curves (and bounding-pair curves), then deduplicated by isotopy; the
lexicographically least name of each class becomes canonical.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

from .curves import Curve
from .surface import build_chain_surface
from .topology import (
    chain_check,
    curve_genus,
    geometric_intersection,
    is_isotopic,
    is_null_homotopic,
    is_separating,
    neighborhood_boundary,
    reduce_against,
)
from .engine import Overlay

FAMILY_ORDER = {"C": 0, "S": 1, "B": 2, "U": 3, "V": 4}
SIGN_ORDER = {"": 0, "+": 1, "-": 2}
DESIGNATORS = {
    "Y": "CSBUV",
    "Ys": "SUV",
    "X": "CSBU",
    "Xs": "SU",
}


@dataclass(frozen=True)
class Interval:
    start: int
    length: int
    n: int

    def __post_init__(self):
        # all empty intervals are the same interval
        object.__setattr__(self, "start", self.start % self.n if self.length else 0)
        if not 0 <= self.length <= self.n - 1:
            raise ValueError("interval length out of range")

    @property
    def end(self) -> int:
        return (self.start + self.length - 1) % self.n

    def members(self) -> list:
        return [(self.start + t) % self.n for t in range(self.length)]

    def shifted(self, k: int) -> "Interval":
        return Interval(self.start + k, self.length, self.n)

    def reflected(self) -> "Interval":
        """Image under the index map i -> -i-2 (reverses the order)."""
        if not self.length:
            return self
        return Interval(-self.end - 2, self.length, self.n)

    def complement_core(self) -> "Interval":
        """Complement with both neighbours of the interval removed."""
        return Interval(self.end + 2, self.n - self.length - 2, self.n)

    def key(self) -> tuple:
        return (self.start, self.length) if self.length else (-1, 0)

    def __str__(self) -> str:
        if not self.length:
            return "{}"
        return f"[{self.start},{self.end}]"


@dataclass(frozen=True)
class CurveName:
    """Symbolic label of a family member."""

    family: str
    J: Interval
    sign: str = ""
    attach: int = -1
    pre: Interval | None = None
    post: Interval | None = None

    def sort_key(self) -> tuple:
        return (
            FAMILY_ORDER[self.family],
            self.J.start,
            self.J.length,
            SIGN_ORDER[self.sign],
            self.attach,
            self.pre.key() if self.pre else (),
            self.post.key() if self.post else (),
        )

    def __lt__(self, other: "CurveName") -> bool:
        return self.sort_key() < other.sort_key()

    @property
    def n(self) -> int:
        return self.J.n

    @property
    def genus(self) -> int:
        return (self.J.n - 2) // 2

    def __str__(self) -> str:
        f = self.family
        if f == "C":
            return f"c_{self.J.start}"
        if f == "S":
            return f"s_{self.J}"
        if f == "B":
            return f"b{self.sign}_{self.J}"
        if f == "U":
            return f"u{self.sign}_{self.attach},{self.J}"
        return f"v{self.sign}_{self.pre}*{self.J}*{self.post}"

    # -- index actions used by the symmetries ------------------------------
    def relabel(self, which: str) -> tuple:
        """Predicted image names under r, s, iota or m, for both sign choices.

        The sign of the image is not determined by index algebra alone, so
        callers resolve it by isotopy testing.
        """
        n = self.n
        flip = {"+": "-", "-": "+", "": ""}
        if which == "r":
            fJ = lambda I: I.shifted(1)
            fa = lambda a: (a + 1) % n
        elif which == "s":
            fJ = lambda I: I.reflected()
            fa = lambda a: (-a - 2) % n
        elif which == "m":
            fJ = lambda I: I
            fa = lambda a: a
        elif which == "iota":
            if self.sign:
                return (_replace(self, sign=flip[self.sign]),)
            return (self,)
        else:
            raise ValueError(which)
        J = fJ(self.J)
        if self.family in "CS":
            return (CurveName(self.family, J),)
        signs = ("+", "-")
        if self.family == "B":
            return tuple(CurveName("B", J, s) for s in signs)
        if self.family == "U":
            return tuple(CurveName("U", J, s, fa(self.attach)) for s in signs)
        pre, post = fJ(self.pre), fJ(self.post)
        if which == "s":
            pre, post = post, pre
        return tuple(CurveName("V", J, s, -1, pre, post) for s in signs)


def _replace(name: CurveName, **kw) -> CurveName:
    d = dict(family=name.family, J=name.J, sign=name.sign, attach=name.attach,
             pre=name.pre, post=name.post)
    d.update(kw)
    return CurveName(**d)


def chain_name(i: int, n: int) -> CurveName:
    return CurveName("C", Interval(i, 1, n))


# -- construction ----------------------------------------------------------
class FamilyBuilder:
    """Builds curves for names on one surface, memoizing shared pieces."""

    def __init__(self, g: int):
        self.g = g
        self.surface = build_chain_surface(g)
        self.n = self.surface.n
        self.chain = self.surface.chain()
        self._bp = {}
        self._walls = {}

    def _c(self, I: Interval) -> list:
        return [self.chain[k] for k in I.members()]

    def sep(self, J: Interval):
        """s_J for even |J|; None when null-homotopic."""
        bd = neighborhood_boundary(self._c(J), fixed=range(J.length))
        if len(bd) != 1:
            raise AssertionError("even chain should have connected boundary")
        return bd[0].curve if bd[0].essential else None

    def sign_reference(self, parity: int):
        """Push-offs of the chain curves of one parity and a reference edge."""
        if parity not in self._walls:
            walls = [self.chain[k] for k in range(parity, self.n, 2)]
            # sheet-1 edges are never crossed by chain push-offs; edge (1,1)
            # lies on the plus side of the even cut, (0,1) on the odd one
            ref = self.surface.edge(1, 1) if parity == 0 else self.surface.edge(0, 1)
            self._walls[parity] = (walls, ref)
        return self._walls[parity]

    def side_sign(self, curve: Curve, parity: int) -> str:
        walls, ref = self.sign_reference(parity)
        x, walls = reduce_against(curve, walls)
        ov = Overlay(self.surface, walls + [x])
        if ov.crossing_count:
            raise AssertionError("bounding-pair curve meets a chain curve of its parity")
        R = ov.regions(set(range(len(walls))))
        plus = R.region_of_edge(ref, 0)
        return "+" if R.region_of_curve(len(walls)) == plus else "-"

    def bounding_pair(self, J: Interval) -> dict:
        """{'+': curve, '-': curve} for odd |J| >= 3; empty when degenerate."""
        key = (J.start, J.length)
        if key not in self._bp:
            bd = neighborhood_boundary(self._c(J), fixed=range(J.length))
            out = {}
            if len(bd) == 2 and all(b.essential for b in bd):
                parity = J.start % 2
                for b in bd:
                    out[self.side_sign(b.curve, parity)] = b.curve
                if set(out) != {"+", "-"}:
                    raise AssertionError(f"bounding pair of {J} not split by the cut")
            self._bp[key] = out
        return self._bp[key]

    def build(self, name: CurveName):
        """Curve for a name, or None when the construction degenerates."""
        f = name.family
        if f == "C":
            return self.chain[name.J.start]
        if f == "S":
            return self.sep(name.J)
        bp = self.bounding_pair(name.J).get(name.sign)
        if f == "B":
            return bp
        if bp is None:
            return None
        if f == "U":
            parts = [self.chain[name.attach], bp]
            bd = neighborhood_boundary(parts, fixed=(0,))
            return bd[0].curve if len(bd) == 1 and bd[0].essential else None
        parts = self._c(name.pre) + [bp] + self._c(name.post)
        if not chain_check(parts):
            return None
        fixed = [i for i in range(len(parts)) if parts[i] is not bp]
        bd = neighborhood_boundary(parts, fixed=fixed)
        return bd[0].curve if len(bd) == 1 and bd[0].essential else None


def candidate_names(g: int, family: str) -> list:
    """All formal names of a family before degeneracy filtering and dedup."""
    n = 2 * g + 2
    out = []
    if family == "C":
        out = [chain_name(i, n) for i in range(n)]
    elif family == "S":
        out = [CurveName("S", Interval(i, L, n)) for L in range(2, 2 * g + 1, 2) for i in range(n)]
    elif family == "B":
        out = [CurveName("B", Interval(i, L, n), s)
               for L in range(3, 2 * g + 2, 2) for i in range(n) for s in "+-"]
    elif family == "U":
        for L in range(3, 2 * g, 2):
            for i in range(n):
                J = Interval(i, L, n)
                for s in "+-":
                    out.append(CurveName("U", J, s, (i - 1) % n))
                    out.append(CurveName("U", J, s, (J.end + 1) % n))
    elif family == "V":
        for L in range(3, 2 * g, 2):
            for i in range(n):
                J = Interval(i, L, n)
                for m in range(4):
                    pre = Interval(i - m, m, n)
                    post = Interval(J.end + 1, 3 - m, n)
                    if L + 3 > n:
                        continue
                    for s in "+-":
                        out.append(CurveName("V", J, s, -1, pre, post))
    else:
        raise ValueError(family)
    return sorted(out)


def _fingerprint(curve: Curve, chain) -> tuple:
    return tuple(geometric_intersection(curve, c) for c in chain)


@dataclass
class NamedCurveSet:
    """Canonical names bound to pairwise non-isotopic curves."""

    genus: int
    designator: str
    names: list
    curves: dict
    aliases: dict = field(default_factory=dict)  # alias name -> canonical name
    dropped: list = field(default_factory=list)  # degenerate candidates

    def __len__(self) -> int:
        return len(self.names)

    def __getitem__(self, name: CurveName) -> Curve:
        return self.curves[self.canonical(name)]

    def __contains__(self, name) -> bool:
        return name in self.curves or name in self.aliases

    def canonical(self, name: CurveName) -> CurveName:
        if name in self.curves:
            return name
        if name in self.aliases:
            return self.aliases[name]
        raise KeyError(str(name))

    def index(self, name: CurveName) -> int:
        return self._index()[self.canonical(name)]

    def _index(self) -> dict:
        idx = getattr(self, "_idx", None)
        if idx is None or len(idx) != len(self.names):
            idx = {nm: i for i, nm in enumerate(self.names)}
            self._idx = idx
        return idx

    def by_family(self, fam: str) -> list:
        return [nm for nm in self.names if nm.family == fam]

    def labels(self) -> list:
        return [str(nm) for nm in self.names]

    def lookup(self, label: str) -> CurveName:
        for nm in list(self.names) + list(self.aliases):
            if str(nm) == label:
                return nm
        raise KeyError(label)

    def subset(self, families: str, designator: str = "custom") -> "NamedCurveSet":
        names = [nm for nm in self.names if nm.family in families]
        aliases = {a: c for a, c in self.aliases.items() if c.family in families}
        return NamedCurveSet(self.genus, designator, names,
                             {nm: self.curves[nm] for nm in names}, aliases)

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "designator": self.designator,
            "curves": [{"name": str(nm), "family": nm.family,
                        "curve": self.curves[nm].to_dict()} for nm in self.names],
            "aliases": sorted([str(a), str(c)] for a, c in self.aliases.items()),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=True)


@lru_cache(maxsize=None)
def _full_set(g: int) -> NamedCurveSet:
    """All of Y, deduplicated; other designators are subsets of it."""
    fb = FamilyBuilder(g)
    chain = fb.chain
    names, curves, aliases, dropped = [], {}, {}, []
    buckets = {}
    for fam in "CSBUV":
        for nm in candidate_names(g, fam):
            c = fb.build(nm)
            if c is None or is_null_homotopic(c):
                dropped.append(nm)
                continue
            sep = is_separating(c)
            key = (sep, curve_genus(c) if sep else -1, _fingerprint(c, chain))
            match = None
            for other in buckets.get(key, []):
                if is_isotopic(c, curves[other]):
                    match = other
                    break
            if match is not None:
                aliases[nm] = match
                continue
            buckets.setdefault(key, []).append(nm)
            names.append(nm)
            curves[nm] = c
    # candidates are visited in canonical order, so the first of each class
    # is already the least name
    return NamedCurveSet(g, "Y", names, curves, aliases, dropped)


def build_set(g: int, designator: str = "Y") -> NamedCurveSet:
    """Assemble Y, Ys, X or Xs for genus g >= 3."""
    if not isinstance(g, int) or g < 3:
        raise ValueError("families are defined for genus >= 3")
    if designator not in DESIGNATORS:
        raise ValueError(f"unknown set designator {designator!r}")
    full = _full_set(g)
    fams = DESIGNATORS[designator]
    sub = full.subset(fams, designator)
    # a separating designator keeps only separating classes
    if designator in ("Ys", "Xs"):
        keep = [nm for nm in sub.names if is_separating(sub.curves[nm])]
        sub = NamedCurveSet(g, designator, keep, {nm: sub.curves[nm] for nm in keep},
                            {a: c for a, c in sub.aliases.items() if c in keep})
    return sub


# -- incidence tables and symmetries -------------------------------------------
_PAIR_CACHE: dict = {}


def pair_intersection(g: int, i: int, j: int) -> int:
    """Memoized i(a, b) for members of Y given by their canonical indices."""
    if i == j:
        return 0
    key = (g, min(i, j), max(i, j))
    v = _PAIR_CACHE.get(key)
    if v is None:
        full = _full_set(g)
        v = geometric_intersection(full.curves[full.names[key[1]]],
                                   full.curves[full.names[key[2]]])
        _PAIR_CACHE[key] = v
    return v


@lru_cache(maxsize=None)
def _full_table(g: int) -> tuple:
    m = len(_full_set(g).names)
    rows = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            rows[i][j] = rows[j][i] = pair_intersection(g, i, j)
    return tuple(tuple(r) for r in rows)


def incidence_table(nset: NamedCurveSet) -> list:
    """Symmetric matrix of intersection numbers in canonical name order."""
    full = _full_set(nset.genus)
    if all(nm in full.curves and full.curves[nm] is nset.curves[nm] for nm in nset.names):
        T = _full_table(nset.genus)
        idx = [full.index(nm) for nm in nset.names]
        return [[T[a][b] for b in idx] for a in idx]
    cs = [nset.curves[nm] for nm in nset.names]
    m = len(cs)
    rows = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            rows[i][j] = rows[j][i] = geometric_intersection(cs[i], cs[j])
    return rows


def identify(nset: NamedCurveSet, curve: Curve, hints=()) -> CurveName | None:
    """Canonical name of the member isotopic to ``curve``, or None."""
    for h in hints:
        if h in nset:
            nm = nset.canonical(h)
            if nm in nset.curves and is_isotopic(curve, nset.curves[nm]):
                return nm
    fb_chain = build_chain_surface(nset.genus).chain()
    fp = _fingerprint(curve, fb_chain)
    for nm in nset.names:
        other = nset.curves[nm]
        if _fingerprint(other, fb_chain) == fp and is_isotopic(curve, other):
            return nm
    return None


_SYM_CACHE: dict = {}


def symmetry(nset: NamedCurveSet, which: str) -> dict:
    """Permutation of canonical names induced by r, s or iota.

    Each curve is moved by the cellular symmetry and its image is named by
    isotopy testing, starting from the names predicted by index relabeling.
    """
    if which not in ("r", "s", "iota", "m"):
        raise ValueError(f"unknown symmetry {which!r}")
    perm = {}
    for nm in nset.names:
        key = (nset.genus, nm, which, nset.curves[nm])
        target = _SYM_CACHE.get(key)
        if target is None or target not in nset.curves:
            img = nset.curves[nm].mapped(which)
            target = identify(nset, img, nm.relabel(which))
            if target is None:
                raise AssertionError(f"image of {nm} under {which} is not in the set")
            _SYM_CACHE[key] = target
        perm[nm] = target
    if len(set(perm.values())) != len(perm):
        raise AssertionError(f"{which} does not act injectively")
    return perm

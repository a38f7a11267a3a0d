"""Regenerate the golden files under tests/golden/derived.

Two independent oracles are used; neither shares code with the engine.

* curver works on the sphere with 2g+2 marked points, the quotient of the
  surface by the hyperelliptic involution. The separating curve s_J is the
  lift of the boundary of a disk around the points of J's arcs, so S-S
  intersection numbers are twice the quotient numbers, and curves isotopic
  downstairs lift to isotopic curves. Bounding pairs lift from disks around an
  even number of points; such a disk gives a genuine pair when at least four
  points lie on each side.
* networkx's VF2 matcher counts automorphisms of the disjointness graphs.

Run from the repository root:  python tools/make_golden.py
"""
from __future__ import annotations

import argparse
import json
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "tests" / "golden" / "derived"


def sphere_oracle(g: int) -> dict:
    import curver

    n = 2 * g + 2
    C = curver.load(0, n)
    arcs = [C.arcs[f"s_{i}"] for i in range(n)]

    def disk(i, L):
        m = arcs[i % n]
        for k in range(1, L):
            m = m + arcs[(i + k) % n]
        return m.boundary()

    seps = {}
    for L in range(2, 2 * g + 1, 2):
        for i in range(n):
            seps[f"s_[{i},{(i + L - 1) % n}]"] = disk(i, L)
    # only essential curves: at least two points on each side
    seps = {k: v for k, v in seps.items() if not v.is_peripheral()}
    classes = []
    for k, v in seps.items():
        if all(v != w for w in classes):
            classes.append(v)
    keys = sorted(seps)
    table = {}
    for a in range(len(keys)):
        for b in range(a + 1, len(keys)):
            ka, kb = keys[a], keys[b]
            table[f"{ka}|{kb}"] = 2 * seps[ka].intersection(seps[kb])
    bp = []
    for L in range(3, 2 * g + 2, 2):
        if L + 1 < 4 or n - (L + 1) < 4:
            continue
        for i in range(n):
            c = disk(i, L)
            if all(c != w for w in bp):
                bp.append(c)
    return {
        "genus": g,
        "S_classes": len(classes),
        "B_classes": 2 * len(bp),
        "ss_intersections": table,
    }


def vf2_orders() -> dict:
    import networkx as nx
    from networkx.algorithms.isomorphism import GraphMatcher

    from sepcurves.families import build_set, incidence_table

    out = {}
    for g, des in ((3, "Xs"), (4, "Ys")):
        nset = build_set(g, des)
        T = incidence_table(nset)
        G = nx.Graph()
        G.add_nodes_from(range(len(T)))
        G.add_edges_from((a, b) for a in range(len(T)) for b in range(a + 1, len(T))
                         if T[a][b] == 0)
        out[f"{des}_g{g}"] = sum(1 for _ in GraphMatcher(G, G).isomorphisms_iter())
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--skip-vf2", action="store_true")
    args = ap.parse_args()
    OUT.mkdir(parents=True, exist_ok=True)
    data = {str(g): sphere_oracle(g) for g in (3, 4, 5)}
    data["v_star"] = {"genus": 4, "pair": ["s_[0,1]", "s_[1,2]"],
                      "value": data["4"]["ss_intersections"]["s_[0,1]|s_[1,2]"]}
    (OUT / "sphere_oracle.json").write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
    if not args.skip_vf2:
        orders = vf2_orders()
        (OUT / "automorphism_orders.json").write_text(
            json.dumps(orders, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()

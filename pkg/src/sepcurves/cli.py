"""Command-line front end.

Exit status: 0 when everything passes, 1 on a verification failure, 2 on a
usage or model error (including a genus outside 3..6).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

from .suites import GENUS_RANGE, SUITE_NAMES

log = logging.getLogger("sepcurves")

SETS = ("Y", "Ys", "X", "Xs")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sepcurves", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_set=True):
        sp.add_argument("--genus", type=int, required=True)
        if with_set:
            sp.add_argument("--set", dest="designator", choices=SETS, default="Y")
        sp.add_argument("--out", required=True)
        sp.add_argument("--no-plots", action="store_true", help="skip PNG figures")

    common(sub.add_parser("build", help="write a curve set as JSON"))
    sp = sub.add_parser("table", help="write the intersection table")
    common(sp)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    common(sub.add_parser("homology", help="f-vector, Euler characteristic, Betti numbers"))
    sp = sub.add_parser("verify", help="run a verification suite")
    common(sp, with_set=False)
    sp.add_argument("--suite", required=True)
    sp.add_argument("--jobs", type=int, default=1)
    common(sub.add_parser("export-dot", help="disjointness graph as DOT"))
    return p


def _png(out: Path) -> Path:
    return out.with_suffix(".png") if out.suffix else Path(str(out) + ".png")


def _write(out: Path, text: str) -> None:
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text)


def table_csv(labels, table) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["name"] + list(labels))
    for lab, row in zip(labels, table):
        w.writerow([lab] + list(row))
    return buf.getvalue()


def table_json(nset, table) -> str:
    return json.dumps({"genus": nset.genus, "set": nset.designator,
                       "names": nset.labels(), "table": [list(r) for r in table]},
                      indent=1) + "\n"


def graph_dot(nset, table) -> str:
    styles = {"C": "ellipse", "S": "box", "B": "diamond", "U": "hexagon", "V": "octagon"}
    from .plots import FAMILY_COLORS

    lines = [f'graph "{nset.designator}_g{nset.genus}" {{', "  node [style=filled];"]
    labels = nset.labels()
    for nm, lab in zip(nset.names, labels):
        lines.append(f'  "{lab}" [shape={styles[nm.family]}, '
                     f'fillcolor="{FAMILY_COLORS[nm.family]}", family={nm.family}];')
    for a in range(len(labels)):
        for b in range(a + 1, len(labels)):
            if table[a][b] == 0:
                lines.append(f'  "{labels[a]}" -- "{labels[b]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _load(args):
    from .families import build_set, incidence_table

    nset = build_set(args.genus, args.designator)
    return nset, incidence_table(nset)


def cmd_build(args) -> int:
    from .families import build_set

    nset = build_set(args.genus, args.designator)
    _write(Path(args.out), nset.to_json() + "\n")
    log.info("wrote %d curves to %s", len(nset), args.out)
    return 0


def cmd_table(args) -> int:
    nset, T = _load(args)
    out = Path(args.out)
    text = table_csv(nset.labels(), T) if args.format == "csv" else table_json(nset, T)
    _write(out, text)
    if not args.no_plots:
        from .plots import plot_table

        plot_table(nset.labels(), T, _png(out),
                   f"{nset.designator} at genus {nset.genus}")
    return 0


def cmd_homology(args) -> int:
    from .complex import disjointness_graph, flag_complex

    nset, T = _load(args)
    K = flag_complex(disjointness_graph(nset.labels(), T))
    rep = {"genus": nset.genus, "set": nset.designator, **K.homology_report()}
    out = Path(args.out)
    _write(out, json.dumps(rep, indent=1) + "\n")
    if not args.no_plots:
        from .plots import plot_homology

        plot_homology(rep, _png(out), f"{nset.designator} at genus {nset.genus}")
    return 0


def cmd_verify(args) -> int:
    from .suites import run_suite

    if args.suite not in SUITE_NAMES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITE_NAMES)}")
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    rep = run_suite(args.suite, args.genus, jobs=args.jobs)
    out = Path(args.out)
    _write(out, rep.to_json())
    timing = out.with_name(out.stem + ".timing.json")
    _write(timing, json.dumps(rep.timing(), indent=1) + "\n")
    if not args.no_plots:
        from .plots import plot_verify

        plot_verify(rep.to_dict(), _png(out))
    for c in rep.checks:
        log.info("%-4s %s", c.status, c.id)
    print(f"{rep.suite} genus {rep.genus}: {rep.status} {rep.summary()}")
    return 0 if rep.ok else 1


def cmd_export_dot(args) -> int:
    from .complex import disjointness_graph

    nset, T = _load(args)
    out = Path(args.out)
    _write(out, graph_dot(nset, T))
    if not args.no_plots:
        from .plots import plot_graph

        G = disjointness_graph(nset.labels(), T)
        fams = {lab: nm.family for nm, lab in zip(nset.names, nset.labels())}
        plot_graph(G, fams, _png(out), f"{nset.designator} at genus {nset.genus}")
    return 0


COMMANDS = {
    "build": cmd_build,
    "table": cmd_table,
    "homology": cmd_homology,
    "verify": cmd_verify,
    "export-dot": cmd_export_dot,
}


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(message)s")
        if args.genus not in GENUS_RANGE:
            raise UsageError(f"genus {args.genus} outside the supported range 3..6")
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"model error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

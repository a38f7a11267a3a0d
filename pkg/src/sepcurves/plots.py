"""PNG figures written next to the CLI's CSV/JSON outputs."""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

FAMILY_COLORS = {"C": "#4c72b0", "S": "#dd8452", "B": "#55a868", "U": "#c44e52", "V": "#8172b3"}
STATUS_COLORS = {"pass": "#55a868", "fail": "#c44e52", "skip": "#999999"}
_META = {"Software": None}


def _save(fig, path) -> None:
    fig.tight_layout()
    fig.savefig(path, dpi=110, metadata=_META)
    plt.close(fig)


def plot_table(labels, table, path, title: str = "") -> None:
    """Heatmap of an intersection table; zero entries stay white."""
    m = len(labels)
    size = max(4.0, min(18.0, 0.16 * m + 2))
    fig, ax = plt.subplots(figsize=(size, size))
    data = [[float(v) if v else float("nan") for v in row] for row in table]
    im = ax.imshow(data, cmap="viridis", interpolation="nearest")
    if m <= 60:
        ax.set_xticks(range(m))
        ax.set_yticks(range(m))
        ax.set_xticklabels(labels, rotation=90, fontsize=6)
        ax.set_yticklabels(labels, fontsize=6)
    else:
        ax.set_xticks([])
        ax.set_yticks([])
    fig.colorbar(im, ax=ax, shrink=0.7, label="intersection number")
    ax.set_title(title or "intersection table (blank = disjoint)")
    _save(fig, path)


def plot_homology(report: dict, path, title: str = "") -> None:
    """Bars for the f-vector and the mod-2 Betti numbers."""
    fig, (a1, a2) = plt.subplots(1, 2, figsize=(8, 3.5))
    f, b = report["f_vector"], report["betti"]
    a1.bar(range(len(f)), f, color="#4c72b0")
    a1.set_xticks(range(len(f)))
    a1.set_xlabel("dimension")
    a1.set_title("simplices")
    a2.bar(range(len(b)), b, color="#dd8452")
    a2.set_xticks(range(len(b)))
    a2.set_xlabel("degree")
    a2.set_title(f"mod-2 Betti numbers (chi = {report['euler']})")
    for ax, vals in ((a1, f), (a2, b)):
        for x, v in enumerate(vals):
            ax.annotate(str(v), (x, v), ha="center", va="bottom", fontsize=8)
    if title:
        fig.suptitle(title)
    _save(fig, path)


def plot_verify(report: dict, path) -> None:
    """One row per check, coloured by status."""
    checks = report["checks"]
    h = max(2.5, 0.22 * len(checks) + 1)
    fig, ax = plt.subplots(figsize=(8, h))
    ys = list(range(len(checks)))[::-1]
    ax.barh(ys, [1] * len(checks), color=[STATUS_COLORS[c["status"]] for c in checks])
    ax.set_yticks(ys)
    ax.set_yticklabels([c["id"] for c in checks], fontsize=7)
    ax.set_xticks([])
    s = report["summary"]
    ax.set_title(f"{report['suite']} at genus {report['genus']}: "
                 f"{s['pass']} pass, {s['fail']} fail, {s['skip']} skip")
    _save(fig, path)


def plot_graph(graph, families: dict, path, title: str = "") -> None:
    """Disjointness graph on a circle, vertices coloured by family."""
    import networkx as nx

    nodes = list(graph.nodes)
    pos = nx.circular_layout(nodes)
    size = max(5.0, min(16.0, 0.08 * len(nodes) + 4))
    fig, ax = plt.subplots(figsize=(size, size))
    nx.draw_networkx_edges(graph, pos, ax=ax, alpha=0.25, width=0.6)
    nx.draw_networkx_nodes(graph, pos, ax=ax, node_size=60,
                           node_color=[FAMILY_COLORS[families[v]] for v in nodes])
    if len(nodes) <= 60:
        nx.draw_networkx_labels(graph, pos, ax=ax, font_size=6)
    ax.set_axis_off()
    ax.set_title(title or "disjointness graph")
    _save(fig, path)

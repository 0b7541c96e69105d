"""SVG figures for the CLI (matplotlib, headless)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Polygon  # noqa: E402

from .cellres import LabeledCellComplex  # noqa: E402
from .trees import LabeledTree, tree_generators  # noqa: E402


def draw_complex(
    X: LabeledCellComplex,
    points: list[tuple[float, float]],
    path: str,
    label=str,
    title: str = "",
) -> None:
    """Planar drawing: shaded 2-cells, edges, and vertex labels."""
    fig, ax = plt.subplots(figsize=(2.2 + 1.3 * len(points) ** 0.5 * 2, 2 + 1.3 * len(points) ** 0.5 * 2))
    for f in X.faces:
        if f.dim == 2:
            cyc = _cycle(X, f)
            ax.add_patch(Polygon([points[v] for v in cyc], closed=True, facecolor="#dde8f5", edgecolor="none"))
    for f in X.faces:
        if f.dim == 1:
            (x0, y0), (x1, y1) = (points[v] for v in f.vertices)
            ax.plot([x0, x1], [y0, y1], color="#333333", lw=1.2)
    for v, (x, y) in enumerate(points):
        ax.plot(x, y, "o", color="#1f4e79", ms=4)
        ax.annotate(label(X.labels[v]), (x, y), textcoords="offset points", xytext=(0, 7), ha="center", fontsize=7)
    if title:
        ax.set_title(title, fontsize=9)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.margins(0.15)
    fig.savefig(path, format="svg", bbox_inches="tight")
    plt.close(fig)


def _cycle(X: LabeledCellComplex, face) -> list[int]:
    # walk the boundary edges of a 2-cell back into a vertex cycle
    adj: dict[int, list[int]] = {}
    for g, _ in face.facets:
        a, b = X.faces[g].vertices
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    start = min(adj)
    cyc, prev, cur = [start], None, start
    while True:
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        if nxt == start:
            return cyc
        cyc.append(nxt)
        prev, cur = cur, nxt


def draw_tree(T: LabeledTree, path: str, title: str = "") -> None:
    """Tree on a circle; edges carry their labels, vertices their generators."""
    import math

    import networkx as nx

    gens = tree_generators(T)
    pos = {v: (math.cos(2 * math.pi * (v - 1) / T.n), math.sin(2 * math.pi * (v - 1) / T.n)) for v in range(1, T.n + 1)}
    fig, ax = plt.subplots(figsize=(5, 5))
    nx.draw_networkx_edges(T.graph, pos, ax=ax)
    nx.draw_networkx_edge_labels(T.graph, pos, edge_labels={(v, w): f"e{k}" for k, (v, w) in enumerate(T.edges, 1)}, ax=ax, font_size=8)
    nx.draw_networkx_nodes(T.graph, pos, ax=ax, node_size=250, node_color="#dde8f5")
    nx.draw_networkx_labels(T.graph, pos, ax=ax, font_size=8)
    for v, (x, y) in pos.items():
        ax.annotate(str(gens[v]), (x, y), textcoords="offset points", xytext=(0, -18), ha="center", fontsize=6)
    if title:
        ax.set_title(title, fontsize=9)
    ax.axis("off")
    ax.margins(0.2)
    fig.savefig(path, format="svg", bbox_inches="tight")
    plt.close(fig)

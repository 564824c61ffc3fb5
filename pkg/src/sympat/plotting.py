"""Figures for the report command; rendered off-screen to PNG."""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _layout(graph):
    rows = {}
    for vid in graph.ids():
        rows.setdefault(graph.dim(vid), []).append(vid)
    pos = {}
    for d, vids in rows.items():
        w = len(vids)
        for k, v in enumerate(vids):
            pos[v] = (k - (w - 1) / 2, d)
    return pos


def plot_moment_graph(graph, path, labels: bool = True):
    pos = _layout(graph)
    V = len(pos)
    width = max(6, 1.6 * max(sum(1 for v in pos if pos[v][1] == d) for d in set(graph.dims)))
    fig, ax = plt.subplots(figsize=(width, 1.8 * (max(graph.dims) + 2)))
    for lo, hi, ch in graph.edges:
        (x0, y0), (x1, y1) = pos[lo], pos[hi]
        ax.plot([x0, x1], [y0, y1], color="0.55", lw=0.8, zorder=1)
        if labels and V <= 30:
            ax.text(0.6 * x0 + 0.4 * x1, 0.6 * y0 + 0.4 * y1, ch.label(), fontsize=6,
                    ha="center", va="center", color="tab:blue",
                    bbox=dict(fc="white", ec="none", pad=0.3), zorder=2)
    for vid, (x, y) in pos.items():
        ax.scatter([x], [y], s=260, color="white", edgecolor="k", zorder=3)
        ax.text(x, y, str(vid), ha="center", va="center", fontsize=8, zorder=4)
        if V <= 30:
            ax.text(x, y - 0.22, graph.vertex(vid).short(), ha="center", va="top", fontsize=6)
    ax.set_yticks(sorted(set(graph.dims)))
    ax.set_ylabel("dimension")
    ax.set_xticks([])
    for side in ("top", "right", "bottom"):
        ax.spines[side].set_visible(False)
    ax.set_title(f"moment graph, n={graph.n}: {V} vertices, {len(graph.edges)} edges")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_poincare(coeffs, path, n=None):
    fig, ax = plt.subplots(figsize=(4.5, 3))
    ax.bar(range(len(coeffs)), coeffs, color="tab:gray", edgecolor="k")
    for d, c in enumerate(coeffs):
        ax.text(d, c, str(c), ha="center", va="bottom", fontsize=8)
    ax.set_xlabel("degree")
    ax.set_ylabel("cells")
    ax.set_xticks(range(len(coeffs)))
    if n is not None:
        ax.set_title(f"cells by dimension, n={n}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path

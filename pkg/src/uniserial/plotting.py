"""Static figures: pieces of AR quivers and Hom-dimension matrices."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

STYLE = {
    "font.family": "serif",
    "font.size": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 200,
    "savefig.bbox": "tight",
}


def plot_ar_quiver(graph: dict, path: str, title: str | None = None) -> str:
    """Draw a mesh layout produced by :func:`uniserial.cli.ar_graph`.

    ``graph`` holds ``nodes`` (with ``x``, ``y`` and ``label``), ``edges``
    and ``tau`` pairs of node ids.
    """
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(6.4, 4.0))
        pos = {n["id"]: (n["x"], n["y"]) for n in graph["nodes"]}
        for u, v in graph["tau"]:
            (x0, y0), (x1, y1) = pos[u], pos[v]
            ax.plot([x0, x1], [y0, y1], ls=":", lw=0.8, color="0.6", zorder=1)
        for u, v in graph["edges"]:
            (x0, y0), (x1, y1) = pos[u], pos[v]
            ax.annotate("", xy=(x1, y1), xytext=(x0, y0),
                        arrowprops=dict(arrowstyle="-|>", lw=0.8, color="0.2", shrinkA=9, shrinkB=9))
        for n in graph["nodes"]:
            face = "#f4d35e" if n.get("center") else "white"
            ax.text(n["x"], n["y"], n["label"], ha="center", va="center", fontsize=7,
                    bbox=dict(boxstyle="round,pad=0.25", fc=face, ec="0.3", lw=0.6), zorder=3)
        xs = [p[0] for p in pos.values()] or [0]
        ys = [p[1] for p in pos.values()] or [0]
        ax.set_xlim(min(xs) - 1, max(xs) + 1)
        ax.set_ylim(min(ys) - 1, max(ys) + 1)
        ax.set_xticks([])
        ax.set_yticks([])
        for side in ("left", "bottom"):
            ax.spines[side].set_visible(False)
        if title:
            ax.set_title(title)
        fig.savefig(path)
        plt.close(fig)
    return path


def plot_hom_matrix(labels: list[str], dims, path: str, title: str | None = None) -> str:
    """Heat map of ``dim Hom(X_i, X_j)``."""
    dims = np.asarray(dims)
    with plt.rc_context(STYLE):
        size = max(3.0, 0.18 * len(labels) + 1.5)
        fig, ax = plt.subplots(figsize=(size, size))
        im = ax.imshow(dims, cmap="viridis", interpolation="nearest")
        if len(labels) <= 40:
            ax.set_xticks(range(len(labels)), labels, rotation=90, fontsize=6)
            ax.set_yticks(range(len(labels)), labels, fontsize=6)
        ax.set_xlabel("target")
        ax.set_ylabel("source")
        fig.colorbar(im, ax=ax, shrink=0.8, label="dim Hom")
        if title:
            ax.set_title(title)
        fig.savefig(path)
        plt.close(fig)
    return path

"""PNG rendering of graph documents (the CLI's --figure option)."""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .serialize import GraphDocument  # noqa: E402

LABEL_LIMIT = 120


def mathtext(label: str) -> str:
    """Turn combining overlines into mathtext bars: 0\u03051 -> $\\bar{0}1$."""
    if "\u0305" not in label:
        return label
    out = []
    for ch in label:
        if ch == "\u0305" and out:
            out[-1] = rf"\bar{{{out[-1]}}}"
        elif ch == "⊗":
            out.append(r"\otimes ")
        else:
            out.append(ch)
    return "$" + "".join(out) + "$"


def layers(doc: GraphDocument) -> list[int]:
    """Longest-path depth from the sources; arrows always point one layer down or more."""
    n = len(doc.nodes)
    succ = defaultdict(list)
    indeg = [0] * n
    for e in doc.edges:
        if e.color == 0:
            continue  # 0-arrows climb back up; lay out by the classical arrows
        succ[e.src].append(e.dst)
        indeg[e.dst] += 1
    depth = [0] * n
    stack = [v for v in range(n) if indeg[v] == 0]
    while stack:
        v = stack.pop()
        for w in succ[v]:
            depth[w] = max(depth[w], depth[v] + 1)
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return depth


def positions(doc: GraphDocument) -> list[tuple[float, float]]:
    depth = layers(doc)
    rows = defaultdict(list)
    for v, d in enumerate(depth):
        rows[d].append(v)
    width = max(len(r) for r in rows.values()) if rows else 1
    pos = [(0.0, 0.0)] * len(doc.nodes)
    for d, members in rows.items():
        step = width / (len(members) + 1)
        for k, v in enumerate(members):
            pos[v] = ((k + 1) * step, -float(d))
    return pos


def plot_document(doc: GraphDocument, path, title: str | None = None) -> Path:
    pos = positions(doc)
    n = len(doc.nodes)
    depth = max((-y for _, y in pos), default=0)
    width = max((x for x, _ in pos), default=1)
    fig, ax = plt.subplots(figsize=(min(4 + width * 0.9, 40), min(3 + depth * 0.8, 40)))
    cmap = plt.get_cmap("tab10")
    seen = set()
    for e in doc.edges:
        (x0, y0), (x1, y1) = pos[e.src], pos[e.dst]
        c = "0.5" if e.color is None else cmap(e.color % 10)
        label = None if e.color in seen or e.color is None else f"{e.color}"
        seen.add(e.color)
        ax.annotate("", xy=(x1, y1), xytext=(x0, y0),
                    arrowprops=dict(arrowstyle="->", color=c, lw=0.8, shrinkA=6, shrinkB=6))
        if label is not None:
            ax.plot([], [], color=c, label=label)
    xs, ys = zip(*pos) if pos else ((), ())
    ax.scatter(xs, ys, s=12 if n > LABEL_LIMIT else 30, color="k", zorder=3)
    if n <= LABEL_LIMIT:
        for node, (x, y) in zip(doc.nodes, pos):
            ax.annotate(mathtext(node.label), (x, y), textcoords="offset points", xytext=(0, 6),
                        ha="center", fontsize=7)
    if seen - {None}:
        ax.legend(title="color", fontsize=7, title_fontsize=8, loc="upper right")
    ax.set_title(title or doc.header.get("name", ""), fontsize=10)
    ax.set_axis_off()
    fig.tight_layout()
    out = Path(path)
    fig.savefig(out, dpi=100)
    plt.close(fig)
    return out

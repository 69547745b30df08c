"""Figures written next to the CLI's text output (matplotlib, file backend)."""
from __future__ import annotations

import math
from pathlib import Path as FilePath

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import FancyArrowPatch  # noqa: E402

from .quiver import Quiver  # noqa: E402

KIND_COLORS = {"PERFECT": "tab:green", "ACYCLIC": "tab:blue", "DEFECT": "tab:red"}


def _circle_layout(vertices) -> dict[str, tuple[float, float]]:
    n = len(vertices)
    if n == 1:
        return {vertices[0]: (0.0, 0.0)}
    return {
        v: (math.cos(2 * math.pi * i / n + math.pi / 2), math.sin(2 * math.pi * i / n + math.pi / 2))
        for i, v in enumerate(vertices)
    }


def draw_quiver(q: Quiver, path, kinds: dict[str, str] | None = None, title: str = "") -> FilePath:
    """Draw q on a circle; vertices are coloured by ``kinds`` when given."""
    kinds = kinds or {}
    pos = _circle_layout(q.vertices)
    fig, ax = plt.subplots(figsize=(5, 5))
    seen: dict[tuple[str, str], int] = {}
    for a in q.arrows:
        x0, y0 = pos[a.source]
        x1, y1 = pos[a.target]
        k = seen.get((a.source, a.target), 0)
        seen[(a.source, a.target)] = k + 1
        if a.source == a.target:
            r = 0.12 + 0.05 * k
            ax.add_patch(plt.Circle((x0, y0 + r + 0.08), r, fill=False, lw=1.2))
            continue
        rad = 0.15 + 0.12 * k
        ax.add_patch(
            FancyArrowPatch(
                (x0, y0), (x1, y1), connectionstyle=f"arc3,rad={rad}",
                arrowstyle="-|>", mutation_scale=14, shrinkA=14, shrinkB=14, lw=1.2,
            )
        )
    for v, (x, y) in pos.items():
        ax.scatter([x], [y], s=500, color=KIND_COLORS.get(kinds.get(v, ""), "lightgray"), zorder=3)
        ax.annotate(v, (x, y), ha="center", va="center", fontsize=9, zorder=4)
    ax.set_xlim(-1.6, 1.6)
    ax.set_ylim(-1.6, 1.6)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    out = FilePath(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, bbox_inches="tight")
    plt.close(fig)
    return out


def plot_dimensions(series: dict[str, list[int]], path, title: str = "") -> FilePath:
    """Hom dimension against syzygy level, one line per named series."""
    fig, ax = plt.subplots(figsize=(6, 4))
    for name, dims in series.items():
        ax.plot(range(len(dims)), dims, marker="o", label=name)
    ax.set_xlabel("syzygy level i")
    ax.set_ylabel("dim Hom(Ω^i X, Ω^i Y)")
    ax.legend()
    if title:
        ax.set_title(title)
    out = FilePath(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, bbox_inches="tight")
    plt.close(fig)
    return out

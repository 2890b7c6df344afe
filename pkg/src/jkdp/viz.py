"""Figure rendering for the report paths of the command line tool.

Everything draws with matplotlib to a file; the data itself always goes to
the delimited outputs, figures are companions for reading.
"""

from __future__ import annotations

import math
from fractions import Fraction

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
from matplotlib.patches import FancyArrowPatch

from .eckardt import Configuration, monomials
from .mckay import McKayQuiver


def quiver_figure(quiver: McKayQuiver, path: str) -> None:
    """Vertices on a circle, multiplicity as parallel arcs, dashed for Ext^2."""
    r = quiver.r
    pos = {
        v: (math.cos(2 * math.pi * v / r + math.pi / 2), math.sin(2 * math.pi * v / r + math.pi / 2))
        for v in range(r)
    }
    fig, ax = plt.subplots(figsize=(5, 5))
    seen: dict[tuple[int, int, str], int] = {}

    def draw(edges, style):
        for mu, nu in edges:
            count = seen.get((mu, nu, style), 0)
            seen[(mu, nu, style)] = count + 1
            rad = 0.12 + 0.14 * count + (0.07 if style == "dashed" else 0.0)
            if mu == nu:
                # self arrow: small loop just outside the vertex
                x, y = pos[mu]
                loop = plt.Circle(
                    (1.08 * x, 1.08 * y), 0.06, fill=False, linestyle=style,
                    color="tab:blue" if style == "solid" else "tab:red", lw=0.9,
                )
                ax.add_patch(loop)
                continue
            arrow = FancyArrowPatch(
                pos[mu],
                pos[nu],
                connectionstyle=f"arc3,rad={rad}",
                arrowstyle="-|>",
                mutation_scale=9,
                linestyle=style,
                color="tab:blue" if style == "solid" else "tab:red",
                shrinkA=9,
                shrinkB=9,
                lw=0.9,
            )
            ax.add_patch(arrow)

    draw(quiver.solid_edges, "solid")
    draw(quiver.dashed_edges, "dashed")
    for v, (x, y) in pos.items():
        ax.plot([x], [y], "o", color="black", markersize=4)
        ax.annotate(f"r{v}", (1.14 * x, 1.14 * y), ha="center", va="center", fontsize=9)
    ax.set_xlim(-1.35, 1.35)
    ax.set_ylim(-1.35, 1.35)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.savefig(path, dpi=160, bbox_inches="tight")
    plt.close(fig)


def _curve_values(curve, xs, ys):
    import numpy as np

    grid_x, grid_y = np.meshgrid(xs, ys)
    total = np.zeros_like(grid_x)
    for c, (i, j, k) in zip(curve.coeffs, monomials(curve.degree)):
        total = total + float(c) * grid_x**i * grid_y**j
    return total


def configuration_figure(config: Configuration, path: str) -> None:
    """Implicit plot of the member curves with the seven points marked."""
    import numpy as np

    pts = [(float(Fraction(p.coords[0])), float(Fraction(p.coords[1]))) for p in config.points]
    q = (float(config.eckardt_point.coords[0]), float(config.eckardt_point.coords[1]))
    all_x = [p[0] for p in pts] + [q[0]]
    all_y = [p[1] for p in pts] + [q[1]]
    pad = 0.6 * max(max(all_x) - min(all_x), max(all_y) - min(all_y), 1.0)
    xs = np.linspace(min(all_x) - pad, max(all_x) + pad, 500)
    ys = np.linspace(min(all_y) - pad, max(all_y) + pad, 500)
    fig, ax = plt.subplots(figsize=(6, 6))
    colors = ("tab:blue", "tab:orange", "tab:green", "tab:red")
    for curve, color in zip(config.curves, colors):
        ax.contour(xs, ys, _curve_values(curve, xs, ys), levels=[0.0], colors=[color], linewidths=1.1)
    if config.tangent is not None and config.tangent not in config.curves:
        ax.contour(
            xs, ys, _curve_values(config.tangent, xs, ys), levels=[0.0],
            colors=["gray"], linewidths=0.8, linestyles="dashed",
        )
    for idx, (x, y) in enumerate(pts, start=1):
        ax.plot([x], [y], "o", color="black", markersize=4)
        ax.annotate(f"x{idx}", (x, y), textcoords="offset points", xytext=(5, 4), fontsize=8)
    ax.plot([q[0]], [q[1]], "*", color="purple", markersize=10)
    ax.set_aspect("equal")
    ax.set_title(f"variant {config.variant}")
    fig.savefig(path, dpi=160, bbox_inches="tight")
    plt.close(fig)


def gram_figure(matrix, labels, path: str) -> None:
    """Heat map of the Euler pairing matrix with the object labels."""
    import numpy as np

    arr = np.array(matrix, dtype=float)
    n = len(labels)
    fig, ax = plt.subplots(figsize=(0.32 * n + 2.2, 0.32 * n + 2.0))
    vmax = max(1.0, abs(arr).max())
    im = ax.imshow(arr, cmap="RdBu_r", vmin=-vmax, vmax=vmax)
    ax.set_xticks(range(n), labels, rotation=90, fontsize=6)
    ax.set_yticks(range(n), labels, fontsize=6)
    for r in range(n):
        for c in range(n):
            if matrix[r][c]:
                ax.text(c, r, str(matrix[r][c]), ha="center", va="center", fontsize=5)
    fig.colorbar(im, shrink=0.75)
    fig.savefig(path, dpi=160, bbox_inches="tight")
    plt.close(fig)

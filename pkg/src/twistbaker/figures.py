"""Figure rendering: cylinder tilings and report plots.

Two output paths: a hand-written SVG emitter for the rectangle tilings
(byte-identical across runs, suitable for golden-file comparisons) and
matplotlib renderings saved next to the delimited reports.
"""

from __future__ import annotations

from fractions import Fraction

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Rectangle as MplRectangle

from .symbolic import BasicRectangle

# Fixed fill palette for suffix coloring; index = suffix read as binary
# with L=0, R=1.  Eight entries cover suffix length 3.
PALETTE = (
    "#4c72b0",
    "#dd8452",
    "#55a868",
    "#c44e52",
    "#8172b3",
    "#937860",
    "#da8bc3",
    "#8c8c8c",
)

SVG_WIDTH = 800
SVG_HEIGHT = 400


def suffix_color(word: str, suffix_len: int) -> str:
    """Rectangles sharing their last ``suffix_len`` symbols share a color."""
    suffix = word[-suffix_len:] if suffix_len > 0 else ""
    idx = 0
    for a in suffix:
        idx = 2 * idx + (1 if a == "R" else 0)
    return PALETTE[idx % len(PALETTE)]


def _svg_coords(rect: BasicRectangle) -> tuple[float, float, float, float]:
    ix, iy = rect.intervals[0], rect.intervals[1]
    x = float((ix.lo + 1) / 2) * SVG_WIDTH
    w = float(ix.length / 2) * SVG_WIDTH
    # x2 increases upward; SVG y increases downward.
    y = float(1 - iy.hi) * SVG_HEIGHT
    h = float(iy.length) * SVG_HEIGHT
    return x, y, w, h


def rectangles_svg(rects: list[BasicRectangle], color_suffix: int = 0) -> str:
    """Deterministic SVG of a planar cylinder tiling (dimension 2 only)."""
    if any(r.dim != 2 for r in rects):
        raise ValueError("SVG tilings are only defined for dimension 2")
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_WIDTH}" '
        f'height="{SVG_HEIGHT}" viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}">',
    ]
    for rect in rects:
        x, y, w, h = _svg_coords(rect)
        fill = suffix_color(rect.word, color_suffix) if color_suffix else "#dddddd"
        lines.append(
            f'<rect x="{x:.4f}" y="{y:.4f}" width="{w:.4f}" height="{h:.4f}" '
            f'fill="{fill}" stroke="#000000" stroke-width="0.6">'
            f"<title>{rect.word}</title></rect>"
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def save_rectangles_figure(
    rects: list[BasicRectangle], path: str, color_suffix: int = 3
) -> None:
    """Matplotlib rendering of a planar cylinder tiling."""
    fig, ax = plt.subplots(figsize=(8, 4.2))
    for rect in rects:
        ix, iy = rect.intervals[0], rect.intervals[1]
        ax.add_patch(
            MplRectangle(
                (float(ix.lo), float(iy.lo)),
                float(ix.length),
                float(iy.length),
                facecolor=suffix_color(rect.word, color_suffix),
                edgecolor="black",
                linewidth=0.4,
            )
        )
    ax.set_xlim(-1, 1)
    ax.set_ylim(0, 1)
    ax.set_xlabel("$x_1$")
    ax.set_ylabel("$x_2$")
    depth = len(rects[0].word) if rects else 0
    ax.set_title(f"basic {depth}-rectangles, colored by last {color_suffix} symbols")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_mixing_figure(series: list[tuple[int, Fraction]], u: str, v: str, path: str) -> None:
    """Correlation decay of two cylinders against the shift count."""
    ns = [n for n, _ in series]
    vals = [float(c) for _, c in series]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.axhline(0.0, color="gray", linewidth=0.8)
    ax.stem(ns, vals)
    ax.set_xlabel("n")
    ax.set_ylabel("correlation")
    ax.set_title(f"m([{u}] $\\cap$ F$^{{-n}}$[{v}]) $-$ m[{u}] m[{v}]")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_equidist_figure(report, path: str) -> None:
    """Deviation of class averages from the exact means, per observable."""
    named = [s for s in report.stats if s.deviation is not None]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar(range(len(named)), [s.deviation for s in named], color=PALETTE[0])
    ax.axhline(
        float(report.discrepancy),
        color=PALETTE[3],
        linestyle="--",
        label=f"cylinder discrepancy (depth {report.cylinder_depth})",
    )
    ax.set_xticks(range(len(named)))
    ax.set_xticklabels([s.name for s in named])
    ax.set_ylabel("|average $-$ mean|")
    ax.set_title(
        f"period {report.period}, class {report.class_filter}, "
        f"{report.count} points"
    )
    ax.legend(loc="upper right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_chi_figure(terms, path: str) -> None:
    """Expansion exponents and their upper bounds along the biased words."""
    xs = [t.word_length for t in terms]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.plot(xs, [float(t.chi_log2) for t in terms], "o-", label="$\\log_2 \\chi$")
    ax.plot(xs, [float(t.bound_log2) for t in terms], "s--", label="bound")
    ax.axhline(0.0, color="gray", linewidth=0.8)
    ax.set_xscale("log")
    ax.set_xlabel("word length")
    ax.set_ylabel("$\\log_2$")
    ax.set_title("expansion rate squeezed toward 1 on biased words")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_count_figure(report, path: str) -> None:
    """Residue shares of the twist histogram against the uniform share."""
    ratios = report.ratios()
    rs = sorted(ratios)
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar(rs, [float(ratios[r]) for r in rs], color=PALETTE[2])
    ax.axhline(1.0 / report.dim, color=PALETTE[3], linestyle="--", label="1/m")
    ax.set_xlabel("twist residue r (mod m)")
    ax.set_ylabel("share of the $2^n - 1$ points")
    ax.set_title(f"period {report.period}, dimension {report.dim}")
    ax.set_xticks(rs)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_orbit_figure(report, path: str) -> None:
    """Deviations of exact orbit averages from the space means."""
    named = [s for s in report.stats if s.deviation is not None]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    labels = [s.name for s in named] + ["freq(R) $-$ 1/2"]
    values = [s.deviation for s in named] + [abs(float(report.r_frequency) - 0.5)]
    ax.bar(range(len(values)), values, color=PALETTE[4])
    ax.set_xticks(range(len(values)))
    ax.set_xticklabels(labels, fontsize=8)
    ax.set_ylabel("deviation")
    ax.set_title(f"orbit averages after {report.steps} exact steps")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)

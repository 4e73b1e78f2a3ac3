"""Figures for the report path of the CLI."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .intervalgraph import IntervalRep  # noqa: E402
from .setcore import GroundSet, canonical_key  # noqa: E402


def plot_interval_representation(rep: IntervalRep, ground: GroundSet, path: str, title: str = "") -> None:
    """One horizontal bar per set, drawn on the integer line of the model."""
    sets = sorted(rep.intervals, key=lambda m: (rep.intervals[m], canonical_key(m)))
    height = max(2.0, 0.35 * len(sets) + 1.0)
    fig, ax = plt.subplots(figsize=(8, height))
    for row, m in enumerate(sets):
        lo, hi = rep.intervals[m]
        singleton = m & (m - 1) == 0
        ax.barh(row, hi - lo, left=lo, height=0.6,
                color="0.6" if singleton else "tab:blue", edgecolor="k", linewidth=0.5)
    ax.set_yticks(range(len(sets)))
    ax.set_yticklabels([ground.format(m) for m in sets], fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("position")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_closure_sizes(rows: list[tuple[int, int, int, int]], path: str) -> None:
    """``rows`` are ``(n, achieved, general_bound, convex_bound)``."""
    ns = [r[0] for r in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogy(ns, [r[2] for r in rows], "o--", label="general bound")
    ax.semilogy(ns, [r[3] for r in rows], "s--", label="convex bound")
    ax.semilogy(ns, [r[1] for r in rows], "k^-", label="closure size")
    ax.set_xlabel("number of generators")
    ax.set_ylabel("patchwork size")
    ax.set_xticks(ns)
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)

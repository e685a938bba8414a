"""Statistics reports: delimited tables plus matplotlib figures.

The delimited output (stats.tsv) is part of the deterministic CLI contract;
the figures are rendered alongside it for human consumption.
"""

from __future__ import annotations

import os
from typing import Optional

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .verify import StatsBlock


def write_stats(block: StatsBlock, outdir: str, figures: bool = True) -> list[str]:
    """Write stats.tsv (and figures) under `outdir`; returns written paths."""
    os.makedirs(outdir, exist_ok=True)
    written = []
    tsv = os.path.join(outdir, "stats.tsv")
    with open(tsv, "w") as fh:
        fh.write(block.tsv())
    written.append(tsv)
    if figures:
        written.extend(render_figures(block, outdir))
    return written


def render_figures(block: StatsBlock, outdir: str) -> list[str]:
    labels = [r.label for r in block.rows]
    written = []

    def bar(values, title, ylabel, fname, log=False):
        fig, ax = plt.subplots(figsize=(max(6, 0.6 * len(labels) + 2), 4))
        ax.bar(range(len(labels)), values, color="#4878a8")
        ax.set_xticks(range(len(labels)))
        ax.set_xticklabels(labels, rotation=45, ha="right", fontsize=8)
        ax.set_title(f"{block.algebra}: {title}")
        ax.set_ylabel(ylabel)
        if log and max(values, default=0) > 0:
            ax.set_yscale("log")
        fig.tight_layout()
        path = os.path.join(outdir, fname)
        fig.savefig(path, dpi=110)
        plt.close(fig)
        written.append(path)

    bar([r.paths for r in block.rows], "paths per generator", "directed paths",
        "paths.png", log=True)
    bar([r.monomials_legacy for r in block.rows],
        "reduced monomials per generator (legacy weighting)", "monomials",
        "monomials.png")
    bar([r.max_degree_legacy for r in block.rows],
        "max monomial degree per generator (legacy weighting)", "degree",
        "degrees.png")
    return written

"""Figures for benchmark runs, written next to the CSV."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from levelmeet.bench import CLAIMED_RATIO, HARD_RATIO, BenchRecord  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.labelsize": 9,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
}
MARKERS = {"bimeet": "o", "dijkstra": "s", "bfs": "^", "unweighted": "v"}


def plot_benchmark(records: list[BenchRecord], path: str | Path) -> Path:
    """Scan ratio and wall time against edge count, one series per algorithm."""
    path = Path(path)
    algos = sorted({r.algo for r in records})
    with plt.rc_context(STYLE):
        fig, (ax_ratio, ax_time) = plt.subplots(1, 2, figsize=(9, 3.6))
        for algo in algos:
            rs = [r for r in records if r.algo == algo and r.m > 0]
            m = [r.m for r in rs]
            marker = MARKERS.get(algo, "x")
            ax_ratio.scatter(m, [r.scan_ratio for r in rs], s=10, marker=marker, alpha=0.6, label=algo)
            ax_time.scatter(m, [r.wall_us for r in rs], s=10, marker=marker, alpha=0.6, label=algo)
        ax_ratio.axhline(CLAIMED_RATIO, color="k", ls="--", lw=0.8, label="claimed 2m")
        ax_ratio.axhline(HARD_RATIO, color="r", ls=":", lw=0.8, label="bound 4m")
        ax_ratio.set_xscale("log")
        ax_ratio.set_xlabel("edges m")
        ax_ratio.set_ylabel("edge scans / m")
        ax_ratio.legend(frameon=False)
        ax_time.set_xscale("log")
        ax_time.set_yscale("log")
        ax_time.set_xlabel("edges m")
        ax_time.set_ylabel("median wall time (us)")
        fig.tight_layout()
        fig.savefig(path, dpi=150)
        plt.close(fig)
    return path

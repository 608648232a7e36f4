"""Figures for complexity/halting sweeps, written next to the CSV output."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .experiments import DensityRecord  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.labelsize": 9,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
}


def figure_path(csv_path: str | Path, suffix: str = ".png") -> Path:
    """``sweep.csv`` -> ``sweep.png``."""
    return Path(csv_path).with_suffix(suffix)


def plot_density(series: dict[str, Sequence[DensityRecord]], path: str | Path, title: str = "") -> Path:
    """Mean complexity and halting fraction against edge count, one line per series."""
    path = Path(path)
    with plt.rc_context(STYLE):
        fig, (ax_c, ax_h) = plt.subplots(1, 2, figsize=(7.0, 2.8), constrained_layout=True)
        for label, records in series.items():
            ms = [r.m for r in records]
            ax_c.plot(ms, [r.mean_complexity for r in records], marker=".", label=label)
            ax_h.plot(ms, [100 * r.halting_fraction for r in records], marker=".", label=label)
        ax_c.set_xlabel("edges M")
        ax_c.set_ylabel("mean complexity")
        ax_h.set_xlabel("edges M")
        ax_h.set_ylabel("halting games (%)")
        if len(series) > 1:
            ax_c.legend(frameon=False)
        if title:
            fig.suptitle(title)
        # fixed metadata keeps repeated renders byte-identical
        fig.savefig(path, metadata={"Software": None})
        plt.close(fig)
    return path

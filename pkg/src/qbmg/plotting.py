"""Matplotlib figures written next to the tab-delimited reports."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .genlab import CrossCheckReport  # noqa: E402


def _finish(fig, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_cross_check(report: CrossCheckReport, path, title: str | None = None) -> Path:
    """Stacked bars of accepted / rejected instances per vertex count."""
    sizes = report.by_size()
    ns = list(sizes)
    acc = np.array([sizes[n][0] for n in ns])
    rej = np.array([sizes[n][1] for n in ns])
    fig, ax = plt.subplots(figsize=(5.5, 3.4))
    ax.bar(ns, acc, color="0.25", label="un2qBMG")
    ax.bar(ns, rej, bottom=acc, color="0.75", edgecolor="0.25", label="not un2qBMG")
    ax.set_xlabel("vertices")
    ax.set_ylabel("graphs")
    if acc.max(initial=0) + rej.max(initial=0) > 1000:
        ax.set_yscale("log")
    ax.set_xticks(ns)
    ax.legend(frameon=False)
    ax.set_title(title or f"{report.total} graphs, {report.disagreements} disagreements")
    return _finish(fig, path)


def plot_scaling(ns: Sequence[int], seconds: Sequence[float], path, exponent: float | None = None) -> Path:
    """Log-log recognition time against vertex count, with the fitted slope."""
    x = np.asarray(ns, dtype=float)
    y = np.asarray(seconds, dtype=float)
    fig, ax = plt.subplots(figsize=(4.5, 3.4))
    ax.loglog(x, y, "o-", color="k", label="HEART-TREE")
    if exponent is not None:
        ref = y[-1] * (x / x[-1]) ** 3
        ax.loglog(x, ref, "--", color="0.6", label="n^3 reference")
        ax.set_title(f"fitted exponent {exponent:.2f}")
    ax.set_xlabel("vertices")
    ax.set_ylabel("seconds")
    ax.legend(frameon=False)
    return _finish(fig, path)

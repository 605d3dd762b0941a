"""Figures for growth tables."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .enumerate import GrowthRow  # noqa: E402


def plot_growth(rows: Sequence[GrowthRow], path: str | Path) -> Path:
    """Plot log2(count)/n for all and for maximal sum-free sets against n.

    Reference lines at 1/2 and 1/4 mark the two exponential rates.
    """
    path = Path(path)
    ns = [r.n for r in rows]
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.plot(ns, [math.log2(r.f) / r.n for r in rows], "o-", ms=3, label=r"$\log_2 f(n)/n$")
    ax.plot(ns, [r.log2fmax_over_n for r in rows], "s-", ms=3, label=r"$\log_2 f_{\max}(n)/n$")
    ax.axhline(0.5, color="0.5", lw=0.8, ls="--")
    ax.axhline(0.25, color="0.5", lw=0.8, ls=":")
    ax.set_xlabel("n")
    ax.set_ylabel("exponential rate")
    ax.set_ylim(0, max(1.0, max((math.log2(r.f) / r.n for r in rows), default=1.0)) * 1.05)
    ax.legend(frameon=False)
    fig.tight_layout()
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, metadata={"Software": None} if path.suffix == ".png" else None)
    plt.close(fig)
    return path

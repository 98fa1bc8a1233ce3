"""Figures written next to the CSV reports."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .enumeration import CollectionRow

# PNG metadata would otherwise carry the matplotlib version string
_META = {"Software": None}


def plot_collection_summary(rows: Sequence[CollectionRow], D: int, path) -> Path:
    """Horizontal bars: solutions per collection, coloured by girth."""
    path = Path(path)
    labels = [" ".join(map(str, r.collection.values)) for r in rows]
    counts = [r.solutions for r in rows]
    girths = [r.diameter_girth[0][1] if r.diameter_girth else 0 for r in rows]
    distinct = sorted(set(girths))
    cmap = plt.get_cmap("viridis", max(len(distinct), 2))
    colors = [cmap(distinct.index(g)) for g in girths]

    fig, ax = plt.subplots(figsize=(7, 0.45 * len(rows) + 1.5))
    y = range(len(rows))
    ax.barh(list(y), counts, color=colors)
    ax.set_yticks(list(y))
    ax.set_yticklabels(labels, fontfamily="monospace", fontsize=8)
    ax.invert_yaxis()
    for yi, r in zip(y, rows):
        dg = ", ".join(f"({d},{g})" for d, g in r.diameter_girth)
        ax.text(r.solutions, yi, f" {r.solutions}  {dg}", va="center", fontsize=8)
    ax.set_xlabel("graphs (RHS permutations with a natural solution)")
    ax.set_title(f"Geodetic homeomorphs at diameter {D}: {sum(counts)} graphs")
    ax.set_xlim(0, max(counts, default=1) * 1.45)
    fig.tight_layout()
    fig.savefig(path, dpi=100, metadata=_META)
    plt.close(fig)
    return path


def plot_counts(
    ds: Sequence[int],
    series: dict[str, Sequence[int]],
    path,
    title: str = "",
    logy: bool = True,
) -> Path:
    path = Path(path)
    fig, ax = plt.subplots(figsize=(6, 4))
    markers = "osD^v<>"
    for (name, values), mk in zip(series.items(), markers):
        ax.plot(list(ds), list(values), marker=mk, label=name)
    if logy:
        ax.set_yscale("log")
    ax.set_xlabel("diameter")
    ax.set_ylabel("count")
    if title:
        ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=100, metadata=_META)
    plt.close(fig)
    return path


def plot_partition_table(table: Sequence[Sequence[int]], path) -> Path:
    path = Path(path)
    fig, ax = plt.subplots(figsize=(8, 5))
    im = ax.imshow(table, cmap="Blues", aspect="auto")
    for k, row in enumerate(table):
        for i, v in enumerate(row):
            ax.text(i, k, str(v), ha="center", va="center", fontsize=7)
    ax.set_xticks(range(len(table[0])))
    ax.set_xticklabels(range(1, len(table[0]) + 1))
    ax.set_yticks(range(len(table)))
    ax.set_yticklabels(range(1, len(table) + 1))
    ax.set_xlabel("i")
    ax.set_ylabel("k")
    ax.set_title("partitions of i into exactly k parts")
    fig.colorbar(im, ax=ax)
    fig.tight_layout()
    fig.savefig(path, dpi=100, metadata=_META)
    plt.close(fig)
    return path

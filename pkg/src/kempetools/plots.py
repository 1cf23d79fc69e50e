"""Figure rendering for the report paths.

Each function writes one PNG next to the delimited output; callers opt
in via the CLI's --figures flag.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

_VERDICT_COLORS = {"PASS": "#2a9d42", "FAIL": "#c0392b", "SKIP": "#888888"}


def save_verify_figure(rows, path: str) -> str:
    """Bar chart of colouring and class counts per graph, coloured by verdict."""
    fig, (ax1, ax2) = plt.subplots(
        2, 1, figsize=(max(6.0, 0.35 * len(rows) + 2), 6.4), sharex=True
    )
    xs = range(len(rows))
    colors = [_VERDICT_COLORS.get(r.verdict, "#888888") for r in rows]
    ax1.bar(xs, [r.colorings for r in rows], color=colors)
    ax1.set_ylabel("proper colourings")
    ax2.bar(xs, [r.classes for r in rows], color=colors)
    ax2.set_ylabel("Kempe classes")
    ax2.set_xlabel("graph index (input order)")
    ax2.set_yticks(sorted({r.classes for r in rows} | {0}))
    handles = [
        plt.Rectangle((0, 0), 1, 1, color=c) for c in _VERDICT_COLORS.values()
    ]
    ax1.legend(handles, _VERDICT_COLORS.keys(), loc="upper right", fontsize=8)
    fig.suptitle("Kempe class verification")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_class_sizes_figure(reports, path: str) -> str:
    """Stacked bars of class sizes per analysed graph."""
    fig, ax = plt.subplots(figsize=(max(6.0, 0.5 * len(reports) + 2), 4.8))
    for i, rep in enumerate(reports):
        bottom = 0
        for size in rep.sizes:
            ax.bar(i, size, bottom=bottom, edgecolor="white", color="#4878a8")
            bottom += size
    ax.set_xlabel("graph index (input order)")
    ax.set_ylabel("colourings, split by Kempe class")
    ax.set_title("Class sizes")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_witness_figure(chain_sizes, path: str) -> str:
    """Per-move exchanged-chain sizes of one witness."""
    fig, ax = plt.subplots(figsize=(6.4, 3.6))
    if chain_sizes:
        ax.bar(range(len(chain_sizes)), chain_sizes, color="#4878a8")
    ax.set_xlabel("move index")
    ax.set_ylabel("chain size")
    ax.set_title(f"Witness profile ({len(chain_sizes)} moves)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def figure_path(directory: str, name: str) -> str:
    os.makedirs(directory, exist_ok=True)
    return os.path.join(directory, name)

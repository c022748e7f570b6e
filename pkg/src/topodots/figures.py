"""Optional matplotlib figures rendered next to the delimited reports."""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .analysis import BettiProfile
from .persistence import Barcode

# fixed PNG metadata so identical runs write identical bytes
_META = {"Software": "topodots"}


def save_profile_png(p: BettiProfile, path: str) -> None:
    """Step plot of pieces and holes against disc radius."""
    radii = [r for r, _ in p.entries]
    fig, ax = plt.subplots(figsize=(6.4, 3.6))
    ax.step(radii, [s.pieces for _, s in p.entries], where="post", label="pieces", color="#3b6ea5")
    ax.step(radii, [s.holes for _, s in p.entries], where="post", label="holes", color="#d2691e")
    ax.set_xlabel("disc radius")
    ax.set_ylabel("count")
    if p.source:
        ax.set_title(p.source, fontsize=10)
    ax.legend()
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata=_META)
    plt.close(fig)


def save_barcode_png(b: Barcode, path: str, include_zero_length: bool = False) -> None:
    """Horizontal interval per pair, split by dimension, arrows for survivors."""
    pairs = [p for p in b.pairs if include_zero_length or not p.is_zero_length]
    fig, ax = plt.subplots(figsize=(6.4, 3.6))
    y = 0
    for dim, color in ((0, "#3b6ea5"), (1, "#d2691e")):
        for p in pairs:
            if p.dimension != dim:
                continue
            death = b.r_max if p.is_infinite else p.death
            ax.hlines(y, p.birth, death, color=color, lw=2)
            if p.is_infinite:
                ax.plot([death], [y], marker=">", color=color, ms=5)
            y += 1
        y += 2
    ax.set_xlim(0, b.r_max * 1.02)
    ax.set_xlabel("disc radius")
    ax.set_yticks([])
    ax.set_title(f"{len(pairs)} features, mode={b.mode}", fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata=_META)
    plt.close(fig)

"""Figure rendering for reports; files land next to the CSV/JSON output."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def fct_comparison_figure(policies, schemes, norm_mean, norm_p99, out_path):
    """Grouped bars of normalized FCT per policy, one panel per metric.

    ``norm_mean`` / ``norm_p99`` map (policy, scheme) to a ratio (group
    minimum = 1.0); missing cells are skipped.
    """
    fig, axes = plt.subplots(1, 2, figsize=(10, 4))
    width = 0.8 / max(1, len(schemes))
    x = np.arange(len(policies))
    for ax, title, table in zip(axes, ("mean FCT", "p99 FCT"), (norm_mean, norm_p99)):
        for i, scheme in enumerate(schemes):
            vals = [table.get((p, scheme), np.nan) for p in policies]
            ax.bar(x + i * width, vals, width, label=scheme)
        ax.set_xticks(x + width * (len(schemes) - 1) / 2)
        ax.set_xticklabels(policies)
        ax.set_ylabel(f"normalized {title}")
        ax.set_xlabel("scheduling policy")
        ax.grid(axis="y", alpha=0.3)
    axes[0].legend()
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)


def gap_figure(cells, out_path):
    """Bars of mean routing-weight gap (%) per topology and distribution.

    ``cells`` maps (topology, dist) to {"mean": float, "std": float}.
    """
    topos = sorted({t for t, _ in cells})
    dists = sorted({d for _, d in cells})
    fig, ax = plt.subplots(figsize=(7, 4))
    width = 0.8 / max(1, len(dists))
    x = np.arange(len(topos))
    for i, dist in enumerate(dists):
        means = [100.0 * cells.get((t, dist), {}).get("mean", np.nan) for t in topos]
        stds = [100.0 * cells.get((t, dist), {}).get("std", 0.0) for t in topos]
        ax.bar(x + i * width, means, width, yerr=stds, capsize=3, label=dist)
    ax.set_xticks(x + width * (len(dists) - 1) / 2)
    ax.set_xticklabels(topos)
    ax.set_ylabel("mean weight gap (%)")
    ax.grid(axis="y", alpha=0.3)
    ax.legend(title="flow sizes")
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)


def latency_figure(points, out_path):
    """Max route-computation time (ms) against arrival rate.

    ``points`` is a list of dicts with keys topology, lam, max_latency;
    one line per topology (max over the other sweep dimensions).
    """
    by_topo: dict[str, dict[float, float]] = {}
    for p in points:
        line = by_topo.setdefault(p["topology"], {})
        lam = p["lam"]
        line[lam] = max(line.get(lam, 0.0), p["max_latency"])
    fig, ax = plt.subplots(figsize=(7, 4))
    for topo, line in sorted(by_topo.items()):
        lams = sorted(line)
        ax.plot(lams, [1000.0 * line[l] for l in lams], marker="o", label=topo)
    ax.set_xlabel("arrival rate (flows per slot)")
    ax.set_ylabel("max route time (ms)")
    ax.grid(alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)

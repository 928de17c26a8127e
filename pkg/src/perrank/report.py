"""Report files for batch runs: a delimited per-instance table plus figures.

Figures are written with the Agg backend so no display is needed.
"""

from __future__ import annotations

import csv
import json
import os
from collections import Counter

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402

CSV_FIELDS = ["seed", "n", "rho", "eta", "sum", "rank", "identity", "ek", "ok"]


def write_csv(records: list[dict], path: str) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS)
        writer.writeheader()
        for rec in records:
            writer.writerow({k: ("" if rec.get(k) is None else rec[k]) for k in CSV_FIELDS})


def plot_rank_nullity(records: list[dict], path: str, title: str = "") -> None:
    """Scatter of (rho, eta) with marker area by multiplicity; the line rho + eta = n per size."""
    fig, (ax, bx) = plt.subplots(1, 2, figsize=(10, 4.2))

    held = Counter((r["rho"], r["eta"]) for r in records if r["identity"])
    failed = Counter((r["rho"], r["eta"]) for r in records if not r["identity"])
    for counts, colour, label in ((held, "tab:blue", "rho + eta = n"), (failed, "tab:red", "rho + eta > n")):
        if counts:
            xs, ys = zip(*counts)
            ax.scatter(xs, ys, s=[20 + 8 * c for c in counts.values()], c=colour, alpha=0.6, label=label)
    for n in sorted({r["n"] for r in records}):
        ax.plot([0, n], [n, 0], color="0.8", lw=0.8, zorder=0)
    ax.xaxis.set_major_locator(MaxNLocator(integer=True))
    ax.yaxis.set_major_locator(MaxNLocator(integer=True))
    ax.set_xlabel("permanental rank")
    ax.set_ylabel("permanental nullity")
    ax.legend(loc="upper right", fontsize=8)

    sizes = sorted({r["n"] for r in records})
    ok = [sum(1 for r in records if r["n"] == n and r["identity"]) for n in sizes]
    bad = [sum(1 for r in records if r["n"] == n and not r["identity"]) for n in sizes]
    bx.bar(sizes, ok, color="tab:blue", label="identity holds")
    bx.bar(sizes, bad, bottom=ok, color="tab:red", label="identity fails")
    bx.set_xticks(sizes)
    bx.set_xlabel("n")
    bx.set_ylabel("instances")
    bx.legend(loc="upper center", bbox_to_anchor=(0.5, -0.16), ncol=2, fontsize=8)

    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def write_batch_report(summary, directory: str) -> dict[str, str]:
    """Write instances.csv, summary.json and rank_nullity.png; return their paths."""
    os.makedirs(directory, exist_ok=True)
    paths = {
        "csv": os.path.join(directory, "instances.csv"),
        "json": os.path.join(directory, "summary.json"),
        "figure": os.path.join(directory, "rank_nullity.png"),
    }
    write_csv(summary.records, paths["csv"])
    with open(paths["json"], "w", encoding="utf-8") as fh:
        json.dump(summary.to_json(), fh, indent=2)
    plot_rank_nullity(summary.records, paths["figure"], f"{summary.kind}, {summary.count} instances")
    return paths

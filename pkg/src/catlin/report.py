"""Suite reports: a CSV of per-run records plus summary figures.

Rendering is headless (Agg backend) and writes deterministic file names
into the requested directory, returning the paths it created.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .suite import SuiteSummary

CSV_COLUMNS = [
    "suite",
    "index",
    "source",
    "n",
    "d",
    "outcome",
    "ok",
    "alpha",
    "big_class_size",
    "colors_used",
    "chi",
    "augmentations",
    "fallbacks",
    "millis",
]


def write_report(summaries: list[SuiteSummary], directory: str | Path) -> list[Path]:
    """Write runs.csv and the PNG figures; returns every path written."""
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    written = [_write_csv(summaries, out / "runs.csv")]
    records = [r for s in summaries for r in s.records if r.outcome != "precondition"]
    if records:
        written.append(_class_size_figure(records, out / "class_size_vs_alpha.png"))
        written.append(_case_mix_figure(records, out / "case_mix.png"))
        written.append(_runtime_figure(records, out / "runtime_hist.png"))
    base = [r for s in summaries if s.name == "base-case" for r in s.records]
    if base:
        written.append(_augmentation_figure(base, out / "augmentations.png"))
    return written


def _write_csv(summaries: list[SuiteSummary], path: Path) -> Path:
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(CSV_COLUMNS)
        for summary in summaries:
            for r in summary.records:
                writer.writerow(
                    [
                        summary.name,
                        r.index,
                        r.source,
                        r.n,
                        r.d,
                        r.outcome,
                        int(r.ok),
                        r.alpha,
                        r.big_class_size,
                        r.colors_used,
                        r.chi,
                        r.augmentations,
                        r.fallbacks,
                        round(r.millis, 3),
                    ]
                )
    return path


def _class_size_figure(records, path: Path) -> Path:
    xs = [r.alpha for r in records if r.alpha is not None]
    ys = [r.big_class_size for r in records if r.alpha is not None]
    fig, ax = plt.subplots(figsize=(5, 5))
    ax.scatter(xs, ys, s=12, alpha=0.3, linewidths=0)
    top = max(xs, default=1) + 1
    ax.plot([0, top], [0, top], lw=1, color="gray", ls="--")
    ax.set_xlabel("maximum independent set size")
    ax.set_ylabel("big class size")
    ax.set_title("big class vs independence number")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def _case_mix_figure(records, path: Path) -> Path:
    totals: dict[str, int] = {}
    for r in records:
        for case, count in r.cases.items():
            totals[case] = totals.get(case, 0) + count
    labels = sorted(totals)
    values = [totals[k] for k in labels]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.bar(range(len(labels)), values)
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=30, ha="right", fontsize=8)
    ax.set_ylabel("recursion steps")
    ax.set_title("case mix across the corpus")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def _runtime_figure(records, path: Path) -> Path:
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.hist([r.millis for r in records], bins=40)
    ax.set_xlabel("run time (ms)")
    ax.set_ylabel("runs")
    ax.set_title("engine + verifier run time")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def _augmentation_figure(records, path: Path) -> Path:
    counts = [r.augmentations for r in records if r.outcome == "ok"]
    top = max(counts, default=0)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.hist(counts, bins=range(top + 2), align="left", rwidth=0.8)
    ax.set_xlabel("independent-set swaps per run")
    ax.set_ylabel("runs")
    ax.set_title("base-case augmentation counts")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path

"""Write a search report to a directory: CSV table, JSON, and figures.

The directory ends up with ``candidates.csv`` (one row per candidate
union), ``report.json`` (the full report), and a couple of PNG figures:
suborbit valencies, a classification overview of all candidates, and an
adjacency bitmap for each accepted union small enough to be worth drawing.
Figures are rendered with the Agg backend so this works headless.
"""

from __future__ import annotations

import csv
import json
import os

from . import bits
from .graphs import union_graph
from .orbitals import OrbitalDecomposition
from .search import SearchReport, _safe_name

_KIND_COLORS = {
    "srg": "#2a9d8f",
    "drg": "#e9c46a",
    "disconnected": "#adb5bd",
    "none": "#b0b7bd",
    "skipped": "#e76f51",
}

_BITMAP_MAX_N = 512
_BITMAP_MAX_COUNT = 6


def write_report_dir(report: SearchReport, outdir, dec: OrbitalDecomposition | None = None) -> list[str]:
    """Render everything; returns the paths written."""
    os.makedirs(outdir, exist_ok=True)
    written = []

    path = os.path.join(outdir, "candidates.csv")
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            [
                "index",
                "bits",
                "atoms",
                "orbitals",
                "degree",
                "connected",
                "components",
                "classification",
                "srg",
                "drg",
                "distance_distribution",
                "complement_index",
                "notes",
            ]
        )
        for r in report.results:
            writer.writerow(
                [
                    r.candidate.index,
                    r.candidate.bit_string(report.rank),
                    " ".join(map(str, r.candidate.atom_indices)),
                    " ".join(map(str, r.candidate.subset)),
                    r.degree,
                    int(r.connected),
                    r.components,
                    r.kind,
                    str(r.srg) if r.srg else "",
                    str(r.drg) if r.drg else "",
                    " ".join(map(str, r.distance_distribution)),
                    "" if r.complement_index is None else r.complement_index,
                    "; ".join(r.notes),
                ]
            )
    written.append(path)

    path = os.path.join(outdir, "report.json")
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report.to_json_dict(), fh, indent=2)
        fh.write("\n")
    written.append(path)

    written.extend(_render_figures(report, outdir, dec))
    return written


def _agg_pyplot():
    import matplotlib

    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt

    return plt


def _render_figures(report: SearchReport, outdir, dec: OrbitalDecomposition | None) -> list[str]:
    plt = _agg_pyplot()
    written = []

    fig, ax = plt.subplots(figsize=(6, 3.2))
    idx = range(report.rank)
    ax.bar(idx, report.valencies, color="#457b9d")
    ax.set_xlabel("orbital index")
    ax.set_ylabel("valency")
    ax.set_title(f"{report.group_name}: suborbit valencies (rank {report.rank})")
    ax.set_xticks(list(idx))
    fig.tight_layout()
    path = os.path.join(outdir, "valencies.png")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)

    if report.results:
        fig, ax = plt.subplots(figsize=(max(6, 0.28 * len(report.results)), 3.6))
        xs = [r.candidate.index for r in report.results]
        ys = [r.degree for r in report.results]
        colors = [_KIND_COLORS.get(r.kind, "#b0b7bd") for r in report.results]
        ax.bar(xs, ys, color=colors)
        ax.set_xlabel("candidate index")
        ax.set_ylabel("degree")
        ax.set_title(f"{report.group_name}: candidate unions by classification")
        seen_kinds = []
        for r in report.results:
            if r.kind not in seen_kinds:
                seen_kinds.append(r.kind)
        handles = [plt.Rectangle((0, 0), 1, 1, color=_KIND_COLORS.get(k, "#b0b7bd")) for k in seen_kinds]
        ax.legend(handles, seen_kinds, fontsize=8)
        fig.tight_layout()
        path = os.path.join(outdir, "classifications.png")
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)

    if dec is not None and dec.n <= _BITMAP_MAX_N:
        drawn = 0
        for r in report.results:
            if r.kind not in ("srg", "drg") or drawn >= _BITMAP_MAX_COUNT:
                continue
            g = union_graph(dec, r.candidate.subset)
            dense = bits.unpack_rows(g.rows, g.n)
            fig, ax = plt.subplots(figsize=(4, 4))
            ax.imshow(dense, cmap="Greys", interpolation="nearest")
            label = str(r.srg) if r.srg else str(r.drg)
            ax.set_title(f"candidate {r.candidate.index}: {label}", fontsize=9)
            ax.set_xticks([])
            ax.set_yticks([])
            fig.tight_layout()
            path = os.path.join(
                outdir, f"adjacency_{_safe_name(report.group_name)}_{r.candidate.bit_string(report.rank)}.png"
            )
            fig.savefig(path, dpi=120)
            plt.close(fig)
            written.append(path)
            drawn += 1
    return written

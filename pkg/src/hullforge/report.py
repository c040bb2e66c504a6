"""Rendering of EAQECC tables: CSV, JSON, markdown, and a PNG summary figure."""

from __future__ import annotations

import csv
import io
import json

from .eaqecc import TableRow

CSV_COLUMNS = ("k", "ell", "n", "kappa", "d", "c", "q")


def to_csv(rows: list[TableRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.csv_row())
    return buf.getvalue()


def to_json(rows: list[TableRow], family: str, payload: bool = True, fixture: dict | None = None) -> str:
    doc = {
        "schema": "hullforge.table/1",
        "family": family,
        "rows": [row.to_json(payload=payload) for row in rows],
    }
    if fixture is not None:
        doc["fixture"] = fixture
    return json.dumps(doc, indent=1) + "\n"


def to_markdown(rows: list[TableRow]) -> str:
    lines = ["| q | k | ell | code |", "|---|---|---|---|"]
    for row in rows:
        lines.append(f"| {row.params.q} | {row.k} | {row.ell} | {row.params} |")
    return "\n".join(lines) + "\n"


RENDERERS = {"csv": to_csv, "markdown": to_markdown}


def render_figure(rows: list[TableRow], path, title: str = "") -> None:
    """Heatmap of ebits c over (k, ell), one panel per q, with kappa annotated."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    qs = sorted({row.params.q for row in rows})
    fig, axes = plt.subplots(1, max(1, len(qs)), figsize=(4.5 * max(1, len(qs)), 4), squeeze=False)
    for ax, q in zip(axes[0], qs):
        sub = [row for row in rows if row.params.q == q]
        ks = sorted({row.k for row in sub})
        ells = sorted({row.ell for row in sub})
        grid = np.full((len(ells), len(ks)), np.nan)
        for row in sub:
            i, j = ells.index(row.ell), ks.index(row.k)
            grid[i, j] = row.params.c
            ax.text(j, i, str(row.params.kappa), ha="center", va="center", fontsize=7)
        im = ax.imshow(grid, origin="lower", cmap="viridis", alpha=0.8, aspect="auto")
        ax.set_xticks(range(len(ks)), [str(k) for k in ks])
        ax.set_yticks(range(len(ells)), [str(e) for e in ells])
        ax.set_xlabel("k")
        ax.set_ylabel("ell")
        ax.set_title(f"q={q}, n={sub[0].params.n}")
        fig.colorbar(im, ax=ax, label="ebits c")
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)

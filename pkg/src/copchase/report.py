"""Corpus survey: delimited summary plus rendered figures.

Separate from the CLI so matplotlib stays out of library imports.  The
Agg backend is forced because report runs are headless batch jobs.
"""

from __future__ import annotations

import csv
from pathlib import Path

from .families import standard_corpus
from .oracle import solve
from .pursuit import OracleRobber, simulate

CSV_NAME = "corpus_report.csv"
FIELDS = (
    "label",
    "n",
    "m",
    "cop_number",
    "optimal_capture_2",
    "pursuit_capture_2",
    "bound",
    "within_bound",
)


def corpus_rows(sample: int | None = None) -> list[dict]:
    """One row per corpus graph: oracle optimum vs live 2-cop pursuit."""
    corpus = standard_corpus()
    if sample is not None:
        corpus = corpus[: max(sample, 0)]
    rows = []
    for label, g in corpus:
        res = solve(g, 2)
        k = 1 if solve(g, 1).cop_win else 2
        t = simulate(g, 2, 0, OracleRobber(res), 2 * g.n + 1, skip_member_check=True)
        captured = t.captured_at if t.captured_at is not None else -1
        rows.append(
            {
                "label": label,
                "n": g.n,
                "m": g.m,
                "cop_number": k,
                "optimal_capture_2": res.capture_time,
                "pursuit_capture_2": captured,
                "bound": 2 * g.n + 1,
                "within_bound": int(0 <= captured <= 2 * g.n + 1),
            }
        )
    return rows


def _render_figures(rows: list[dict], out: Path) -> list[Path]:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    paths = []

    fig, ax = plt.subplots(figsize=(7, 5))
    ns = [r["n"] for r in rows]
    ax.scatter(ns, [r["pursuit_capture_2"] for r in rows], s=18, alpha=0.6,
               label="pursuit vs optimal robber")
    xs = sorted(set(ns))
    ax.plot(xs, [2 * x + 1 for x in xs], "r--", label="round budget 2n+1")
    ax.set_xlabel("vertices")
    ax.set_ylabel("capture round")
    ax.set_title("Two-cop capture rounds across the corpus")
    ax.legend()
    fig.tight_layout()
    path = out / "capture_rounds.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    paths.append(path)

    fig, ax = plt.subplots(figsize=(7, 5))
    times = [r["pursuit_capture_2"] for r in rows]
    ax.hist(times, bins=range(0, max(times) + 2), edgecolor="black")
    ax.set_xlabel("capture round")
    ax.set_ylabel("graphs")
    ax.set_title("Capture round distribution, two cops")
    fig.tight_layout()
    path = out / "capture_histogram.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    paths.append(path)

    return paths


def corpus_report(out_dir: str | Path, sample: int | None = None) -> dict:
    """Write the CSV and figures, returning a summary for stdout."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows = corpus_rows(sample)
    csv_path = out / CSV_NAME
    with csv_path.open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=FIELDS)
        writer.writeheader()
        writer.writerows(rows)
    figures = _render_figures(rows, out) if rows else []
    return {
        "graphs": len(rows),
        "all_within_bound": all(r["within_bound"] for r in rows),
        "csv": str(csv_path),
        "figures": [str(p) for p in figures],
    }

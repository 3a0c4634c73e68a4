"""Figure and CSV rendering for classification and verification reports.

Given a report directory, each renderer writes delimited data next to
matplotlib figures; nothing here feeds back into any decision path.
"""

from __future__ import annotations

import csv
from pathlib import Path


def _plt():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_classify_report(result, out_dir) -> list[str]:
    """Write classes.csv plus summary figures for a classification run."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []

    csv_path = out / "classes.csv"
    with open(csv_path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(
            ["order", "n", "t", "r", "ell", "num_presentations", "catalog_members"]
        )
        for cls in result.classes:
            n, t, r, ell = cls.representative.astuple()
            w.writerow(
                [
                    cls.order,
                    n,
                    t,
                    r,
                    ell,
                    len(cls.members),
                    " ".join(
                        "/".join(map(str, e.presentation.astuple()))
                        for e in cls.catalog_members
                    ),
                ]
            )
    written.append(str(csv_path))

    plt = _plt()
    orders = sorted({c.order for c in result.classes})
    counts = [sum(1 for c in result.classes if c.order == o) for o in orders]
    fig, ax = plt.subplots(figsize=(9, 4.5))
    ax.bar([str(o) for o in orders], counts, color="#30649b")
    ax.set_xlabel("group order")
    ax.set_ylabel("isomorphism classes")
    ax.set_title("cut metacyclic groups by order")
    ax.tick_params(axis="x", labelrotation=60, labelsize=8)
    fig.tight_layout()
    fig_path = out / "classes_by_order.png"
    fig.savefig(fig_path, dpi=150)
    plt.close(fig)
    written.append(str(fig_path))

    fig, ax = plt.subplots(figsize=(7, 4.5))
    sizes = sorted(len(c.members) for c in result.classes)
    ax.hist(sizes, bins=range(1, max(sizes) + 2), color="#8a4d76", rwidth=0.85)
    ax.set_xlabel("presentations per isomorphism class")
    ax.set_ylabel("classes")
    ax.set_title("presentation multiplicity")
    fig.tight_layout()
    fig_path = out / "presentations_per_class.png"
    fig.savefig(fig_path, dpi=150)
    plt.close(fig)
    written.append(str(fig_path))
    return written


def render_verify_report(results, out_dir) -> list[str]:
    """Write criteria.csv plus a pass/fail chart for a verification run."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []

    csv_path = out / "criteria.csv"
    with open(csv_path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["number", "name", "passed", "seconds", "detail"])
        for r in results:
            w.writerow([r.number, r.name, r.passed, f"{r.seconds:.2f}", r.detail])
    written.append(str(csv_path))

    plt = _plt()
    fig, ax = plt.subplots(figsize=(8, 4.5))
    names = [f"{r.number}: {r.name}" for r in results]
    secs = [r.seconds for r in results]
    colors = ["#2e7d32" if r.passed else "#c62828" for r in results]
    ax.barh(names, secs, color=colors)
    ax.set_xlabel("seconds")
    ax.set_title("verification checks (green = pass, red = fail)")
    ax.invert_yaxis()
    fig.tight_layout()
    fig_path = out / "criteria.png"
    fig.savefig(fig_path, dpi=150)
    plt.close(fig)
    written.append(str(fig_path))
    return written

"""Render a verification report to JSON, CSV, and figures on disk.

The JSON and CSV outputs are byte-for-byte reproducible for a fixed
configuration and seed: no timestamps, no environment-dependent fields,
fixed key order, repr-exact floats.  Figures are rendered alongside them
with the Agg backend; pass figures=False to skip them.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

from .verify import VerificationReport

CSV_COLUMNS = ("name", "variant", "lhs", "rhs", "constant", "slack", "pass", "params")


def report_json_text(report: VerificationReport) -> str:
    return json.dumps(report.to_json(), indent=2) + "\n"


def write_report(
    report: VerificationReport,
    out_dir: str | Path,
    figures: bool = True,
    basename: str = "report",
) -> dict[str, str]:
    """Write report files into out_dir; returns {kind: path} for what was written."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths: dict[str, str] = {}

    json_path = out / f"{basename}.json"
    json_path.write_text(report_json_text(report))
    paths["json"] = str(json_path)

    csv_path = out / f"{basename}.csv"
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for check in report.checks:
            row = check.to_json()
            writer.writerow(
                [
                    row["name"],
                    row["variant"],
                    repr(row["lhs"]),
                    repr(row["rhs"]),
                    "" if row["constant"] is None else repr(row["constant"]),
                    repr(row["slack"]),
                    "true" if row["pass"] else "false",
                    json.dumps(row["params"], sort_keys=True),
                ]
            )
    paths["csv"] = str(csv_path)

    if figures:
        paths.update(_write_figures(report, out, basename))
    return paths


def _group_tag(params: dict) -> str:
    g = params.get("group", {})
    kind = g.get("kind", "?")
    if kind == "cyclic":
        return f"Z{g.get('N')}"
    if kind == "dihedral":
        return f"D{g.get('n')}"
    return kind


def _write_figures(report: VerificationReport, out: Path, basename: str) -> dict[str, str]:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    paths: dict[str, str] = {}
    checks = report.checks

    # Slack by check family: how much headroom each bound family has.
    fig, ax = plt.subplots(figsize=(9, 5))
    series: dict[str, list[float]] = {}
    for c in checks:
        series.setdefault(f"{c.name}/{c.variant}", []).append(c.slack)
    labels = sorted(series)
    data = [series[k] for k in labels]
    ax.boxplot(data, orientation="horizontal", tick_labels=labels, whis=(0, 100))
    ax.axvline(0.0, color="crimson", linewidth=1.0, linestyle="--")
    ax.set_xscale("symlog", linthresh=1e-12)
    ax.set_xlabel("slack (symlog; negative = violation)")
    ax.set_title("Slack distribution by check family")
    fig.tight_layout()
    p = out / f"{basename}_slack.png"
    fig.savefig(p, dpi=110)
    plt.close(fig)
    paths["fig_slack"] = str(p)

    # Pass-rate matrix: check family x group.
    fams = sorted({f"{c.name}/{c.variant}" for c in checks})
    groups = sorted({_group_tag(c.params) for c in checks})
    counts = {(f, g): [0, 0] for f in fams for g in groups}
    for c in checks:
        key = (f"{c.name}/{c.variant}", _group_tag(c.params))
        counts[key][0] += 1 if c.passed else 0
        counts[key][1] += 1
    import numpy as np

    matrix = np.full((len(fams), len(groups)), np.nan)
    for i, f in enumerate(fams):
        for j, g in enumerate(groups):
            done, total = counts[(f, g)]
            if total:
                matrix[i, j] = done / total
    label_width = 0.09 * max((len(f) for f in fams), default=4)
    fig, ax = plt.subplots(
        figsize=(2.4 + label_width + 1.1 * len(groups), 1.4 + 0.45 * len(fams))
    )
    im = ax.imshow(matrix, vmin=0.0, vmax=1.0, cmap="RdYlGn", aspect="auto")
    ax.set_xticks(range(len(groups)), groups)
    ax.set_yticks(range(len(fams)), fams)
    for i in range(len(fams)):
        for j in range(len(groups)):
            if not np.isnan(matrix[i, j]):
                ax.text(j, i, f"{matrix[i, j]:.2f}", ha="center", va="center", fontsize=8)
    fig.colorbar(im, ax=ax, label="pass rate")
    ax.set_title("Pass rate by check family and group")
    fig.tight_layout()
    p = out / f"{basename}_passrate.png"
    fig.savefig(p, dpi=110)
    plt.close(fig)
    paths["fig_passrate"] = str(p)

    # The two Sobolev constants side by side: lhs/rhs ratio per check;
    # points above 1 violate the bound with that constant.
    sob = [c for c in checks if c.name == "sobolev_embedding"]
    fig, ax = plt.subplots(figsize=(9, 5))
    for variant, color, marker in (("kappa_stated", "#c0392b", "o"), ("kappa_star", "#2471a3", "x")):
        xs, ys = [], []
        for c in sob:
            if c.variant == variant and c.rhs > 0:
                xs.append(len(xs))
                ys.append(c.lhs / c.rhs)
        ax.scatter(xs, ys, s=12, c=color, marker=marker, label=variant, alpha=0.7)
    ax.axhline(1.0, color="black", linewidth=1.0, linestyle="--", label="bound")
    ax.set_xlabel("check index")
    ax.set_ylabel("lhs / rhs")
    ax.set_title("Sobolev embedding: stated vs proof-implied constant")
    ax.legend(loc="upper right", fontsize=8)
    fig.tight_layout()
    p = out / f"{basename}_sobolev.png"
    fig.savefig(p, dpi=110)
    plt.close(fig)
    paths["fig_sobolev"] = str(p)
    return paths

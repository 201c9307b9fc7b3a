"""Render experiment outputs into a markdown report, plot data, and figures.

Consumes the JSONL records and summary CSVs produced by the harness. The
markdown is deterministic: identical inputs yield byte-identical output, so
reports can be diffed across reruns.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Sequence

from .errors import MissingInput, SkillabError
from .fitting import FitResult, fit_law
from .harness import ConditionSummary, accuracy, load_records, read_summary_csv
from .types import SCHEMA_VERSION

REPORT_NAME = "report.md"
PLOT_DATA_NAME = "plot_data.json"

_SECTION_TITLES = {
    "h1": "Accuracy versus library size",
    "h2": "Competitor interference",
    "h3": "Policy complexity",
    "h4": "Hierarchical versus flat selection",
}

_METHOD_COLUMNS = (
    ("flat", "Flat"),
    ("naive-domain", "Naive"),
    ("confusability", "Confusability-aware"),
)

_FIGURE_NAMES = {
    "h1": "h1_capacity.png",
    "h2": "h2_interference.png",
    "h3": "h3_complexity.png",
    "h4": "h4_hierarchy.png",
}


def condition_fields(condition: str) -> tuple[str, dict[str, str]]:
    """Split a condition key into its hypothesis prefix and field map."""
    prefix, _, rest = condition.partition(":")
    fields: dict[str, str] = {}
    for part in rest.split(","):
        key, sep, value = part.partition("=")
        if sep:
            fields[key.strip()] = value.strip()
    return prefix, fields


def collect_inputs(input_dir) -> dict[str, list[ConditionSummary]]:
    """Load all records JSONL and summary CSV files under a directory.

    Records take precedence over CSV rows for the same condition because
    they carry trial counts. Summaries are grouped by hypothesis prefix.
    """
    root = Path(input_dir)
    if not root.is_dir():
        raise MissingInput(f"input directory not found: {root}")

    summaries: dict[str, ConditionSummary] = {}
    records = []
    for path in sorted(root.glob("*.jsonl")):
        records.extend(load_records(path))
    if records:
        for summary in accuracy(records):
            summaries[summary.condition] = summary
    for path in sorted(root.glob("*.csv")):
        for summary in read_summary_csv(path):
            summaries.setdefault(summary.condition, summary)

    if not summaries:
        raise MissingInput(f"no records or summaries under {root}")

    grouped: dict[str, list[ConditionSummary]] = {}
    for summary in summaries.values():
        prefix, _ = condition_fields(summary.condition)
        grouped.setdefault(prefix, []).append(summary)
    for group in grouped.values():
        group.sort(key=lambda s: (s.n, s.condition))
    return grouped


def _cell(mean: float, std: float) -> str:
    return f"{mean:.4f} ± {std:.4f}"


def _size_fit(section: Sequence[ConditionSummary]) -> FitResult | None:
    points = [(float(s.n), s.mean) for s in section if s.n > 0]
    if len(points) < 4:
        return None
    try:
        return fit_law(points)
    except SkillabError:
        return None


def _h1_lines(section: Sequence[ConditionSummary]) -> list[str]:
    lines = [
        "| \\|S\\| | Accuracy | Std | Trials |",
        "|---:|---:|---:|---:|",
    ]
    for s in section:
        lines.append(f"| {s.n} | {s.mean:.4f} | {s.std:.4f} | {s.n_trials} |")
    fit = _size_fit(section)
    if fit is not None:
        status = "converged" if fit.converged else "not converged"
        lines.extend(
            [
                "",
                (
                    f"Fitted capacity law: alpha={fit.alpha:.4f}, "
                    f"kappa={fit.kappa:.2f}, gamma={fit.gamma:.3f}, "
                    f"R^2={fit.r_squared:.4f} ({status})."
                ),
            ]
        )
    return lines


def _matrix_lines(
    section: Sequence[ConditionSummary],
    row_field: str,
    col_field: str,
    row_title: str,
    col_label: str,
    numeric_rows: bool = True,
    col_order: Sequence[str] | None = None,
) -> list[str]:
    cells: dict[tuple[str, str], ConditionSummary] = {}
    rows: list[str] = []
    cols: list[str] = []
    for s in section:
        _, fields = condition_fields(s.condition)
        row = fields.get(row_field, "")
        col = fields.get(col_field, "")
        cells[(row, col)] = s
        if row not in rows:
            rows.append(row)
        if col not in cols:
            cols.append(col)
    if numeric_rows:
        rows.sort(key=lambda v: (int(v) if v.isdigit() else 0, v))
    else:
        rows.sort()
    if col_order is not None:
        ordered = [c for c in col_order if c in cols]
        cols = ordered + sorted(c for c in cols if c not in ordered)
    else:
        cols.sort()

    header = [row_title] + [f"{col_label}{c}" if col_label else c for c in cols]
    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "---:|" * len(header),
    ]
    for row in rows:
        parts = [row]
        for col in cols:
            s = cells.get((row, col))
            parts.append(_cell(s.mean, s.std) if s is not None else "n/a")
        lines.append("| " + " | ".join(parts) + " |")
    return lines


def _h4_lines(section: Sequence[ConditionSummary]) -> list[str]:
    cells: dict[tuple[int, str], ConditionSummary] = {}
    sizes: list[int] = []
    for s in section:
        _, fields = condition_fields(s.condition)
        method = fields.get("method", "flat")
        cells[(s.n, method)] = s
        if s.n not in sizes:
            sizes.append(s.n)
    sizes.sort()

    present = [
        (key, title) for key, title in _METHOD_COLUMNS if any(m == key for _, m in cells)
    ]
    extras = sorted(
        {m for _, m in cells} - {key for key, _ in _METHOD_COLUMNS}
    )
    present.extend((m, m) for m in extras)

    header = ["\\|S\\|", "Groups"] + [title for _, title in present]
    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "---:|" * len(header),
    ]
    for size in sizes:
        groups = ""
        for key, _ in present:
            s = cells.get((size, key))
            if s is not None:
                _, fields = condition_fields(s.condition)
                groups = fields.get("n_groups", "")
                break
        parts = [str(size), groups]
        for key, _ in present:
            s = cells.get((size, key))
            parts.append(_cell(s.mean, s.std) if s is not None else "n/a")
        lines.append("| " + " | ".join(parts) + " |")
    return lines


def _section_lines(prefix: str, section: Sequence[ConditionSummary]) -> list[str]:
    title = _SECTION_TITLES.get(prefix, f"Conditions under {prefix}")
    lines = [f"## {title} ({prefix})", ""]
    if prefix == "h1":
        lines.extend(_h1_lines(section))
    elif prefix == "h2":
        lines.extend(
            _matrix_lines(section, "n_base", "n_comp", "n_base", "n_comp=")
        )
    elif prefix == "h3":
        lines.extend(
            _matrix_lines(
                section,
                "size",
                "complexity",
                "\\|S\\|",
                "",
                col_order=("simple", "medium", "complex"),
            )
        )
    elif prefix == "h4":
        lines.extend(_h4_lines(section))
    else:
        lines.extend(
            [
                "| Condition | n | Accuracy | Std | Trials |",
                "|---|---:|---:|---:|---:|",
            ]
        )
        for s in section:
            lines.append(
                f"| {s.condition} | {s.n} | {s.mean:.4f} | {s.std:.4f} |"
                f" {s.n_trials} |"
            )
    lines.append("")
    return lines


def _section_order(prefixes) -> list[str]:
    known = [p for p in ("h1", "h2", "h3", "h4") if p in prefixes]
    other = sorted(p for p in prefixes if p not in ("h1", "h2", "h3", "h4"))
    return known + other


def build_report(grouped: dict[str, list[ConditionSummary]]) -> str:
    """Deterministic markdown report over all hypotheses present."""
    lines = ["# Skill selection experiment report", ""]
    total = sum(len(v) for v in grouped.values())
    lines.append(
        f"Conditions summarized: {total} across "
        f"{len(grouped)} experiment group(s). Cells show mean ± std of "
        "per-seed accuracies."
    )
    lines.append("")
    for prefix in _section_order(grouped):
        lines.extend(_section_lines(prefix, grouped[prefix]))
    return "\n".join(lines).rstrip("\n") + "\n"


def build_plot_data(grouped: dict[str, list[ConditionSummary]]) -> dict:
    """Machine-readable series backing every table and figure."""
    series: dict[str, dict] = {}
    for prefix in _section_order(grouped):
        section = grouped[prefix]
        entry: dict = {
            "conditions": [s.condition for s in section],
            "n": [s.n for s in section],
            "mean": [round(s.mean, 6) for s in section],
            "std": [round(s.std, 6) for s in section],
            "n_trials": [s.n_trials for s in section],
        }
        if prefix == "h1":
            fit = _size_fit(section)
            if fit is not None:
                entry["fit"] = fit.to_dict()
                entry["predicted"] = [
                    round(fit.predict(s.n), 6) for s in section if s.n > 0
                ]
        series[prefix] = entry
    return {"schema_version": SCHEMA_VERSION, "series": series}


def _figure_h1(plt, section, path: Path) -> None:
    sizes = [s.n for s in section]
    means = [s.mean for s in section]
    stds = [s.std for s in section]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.errorbar(sizes, means, yerr=stds, fmt="o-", capsize=3, label="observed")
    fit = _size_fit(section)
    if fit is not None and sizes:
        lo, hi = min(sizes), max(sizes)
        xs = [lo + (hi - lo) * i / 199 for i in range(200)]
        ax.plot(xs, [fit.predict(x) for x in xs], "--", label="fitted law")
    ax.set_xlabel("library size |S|")
    ax.set_ylabel("selection accuracy")
    ax.set_title("Accuracy versus library size")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def _figure_matrix(plt, section, row_field, col_field, xlabel, title, path):
    by_col: dict[str, list[tuple[int, float, float]]] = {}
    for s in section:
        _, fields = condition_fields(s.condition)
        col = fields.get(col_field, "")
        row = fields.get(row_field, "0")
        x = int(row) if row.isdigit() else 0
        by_col.setdefault(col, []).append((x, s.mean, s.std))
    fig, ax = plt.subplots(figsize=(6, 4))
    for col in sorted(by_col):
        pts = sorted(by_col[col])
        ax.errorbar(
            [p[0] for p in pts],
            [p[1] for p in pts],
            yerr=[p[2] for p in pts],
            fmt="o-",
            capsize=3,
            label=f"{col_field}={col}" if col else col_field,
        )
    ax.set_xlabel(xlabel)
    ax.set_ylabel("selection accuracy")
    ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def _figure_h4(plt, section, path: Path) -> None:
    by_method: dict[str, list[tuple[int, float, float]]] = {}
    for s in section:
        _, fields = condition_fields(s.condition)
        method = fields.get("method", "flat")
        by_method.setdefault(method, []).append((s.n, s.mean, s.std))
    titles = dict(_METHOD_COLUMNS)
    fig, ax = plt.subplots(figsize=(6, 4))
    for method in sorted(by_method):
        pts = sorted(by_method[method])
        ax.errorbar(
            [p[0] for p in pts],
            [p[1] for p in pts],
            yerr=[p[2] for p in pts],
            fmt="o-",
            capsize=3,
            label=titles.get(method, method),
        )
    ax.set_xlabel("library size |S|")
    ax.set_ylabel("selection accuracy")
    ax.set_title("Hierarchical versus flat selection")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def render_figures(grouped: dict[str, list[ConditionSummary]], out_dir) -> list[Path]:
    """Write one PNG per hypothesis present; returns the paths written."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out = Path(out_dir)
    written = []
    for prefix in _section_order(grouped):
        name = _FIGURE_NAMES.get(prefix)
        if name is None:
            continue
        path = out / name
        section = grouped[prefix]
        if prefix == "h1":
            _figure_h1(plt, section, path)
        elif prefix == "h2":
            _figure_matrix(
                plt,
                section,
                "n_base",
                "n_comp",
                "base skills n_base",
                "Competitor interference",
                path,
            )
        elif prefix == "h3":
            _figure_matrix(
                plt,
                section,
                "size",
                "complexity",
                "library size |S|",
                "Policy complexity",
                path,
            )
        elif prefix == "h4":
            _figure_h4(plt, section, path)
        written.append(path)
    return written


def write_report(input_dir, out_dir, figures: bool = True) -> dict[str, object]:
    """Build report.md, plot_data.json, and figures from a run directory.

    Returns the paths written, keyed by artifact kind.
    """
    grouped = collect_inputs(input_dir)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    report_path = out / REPORT_NAME
    report_path.write_text(build_report(grouped), encoding="utf-8")

    plot_path = out / PLOT_DATA_NAME
    plot_path.write_text(
        json.dumps(build_plot_data(grouped), indent=2, sort_keys=True) + "\n",
        encoding="utf-8",
    )

    figure_paths = render_figures(grouped, out) if figures else []
    return {"report": report_path, "plot_data": plot_path, "figures": figure_paths}

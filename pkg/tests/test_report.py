import json

import pytest

from skillab import (
    ConditionSummary,
    ExperimentConfig,
    RecordSink,
    accuracy,
    run_experiment,
    write_report,
    write_summary_csv,
)
from skillab.errors import MissingInput
from skillab.report import (
    PLOT_DATA_NAME,
    REPORT_NAME,
    build_plot_data,
    build_report,
    collect_inputs,
    condition_fields,
)

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


@pytest.fixture(scope="module")
def run_dir(tmp_path_factory):
    """A directory holding records and summaries from four tiny sweeps."""
    root = tmp_path_factory.mktemp("runs")
    configs = [
        ExperimentConfig(
            hypothesis="h1",
            backend={"kind": "simulated", "alpha": 0.9, "kappa": 30.0},
            seeds=(0, 1),
            tasks_per_condition=20,
            sizes=(5, 20, 60, 120),
        ),
        ExperimentConfig(
            hypothesis="h2",
            backend={"kind": "exact"},
            seeds=(0,),
            tasks_per_condition=2,
            n_bases=(3, 4),
            n_comps=(0, 1),
        ),
        ExperimentConfig(
            hypothesis="h3",
            backend={"kind": "exact"},
            seeds=(0,),
            tasks_per_condition=2,
            sizes=(5, 10),
            complexities=("simple", "medium"),
        ),
        ExperimentConfig(
            hypothesis="h4",
            backend={"kind": "exact"},
            seeds=(0,),
            tasks_per_condition=2,
            n_groups=(2, 3),
            methods=("flat", "naive-domain", "confusability"),
        ),
    ]
    for cfg in configs:
        with RecordSink(root / f"{cfg.hypothesis}_records.jsonl") as sink:
            records = run_experiment(cfg, sink=sink)
        write_summary_csv(accuracy(records), root / f"{cfg.hypothesis}_summary.csv")
    return root


class TestConditionFields:
    def test_split(self):
        prefix, fields = condition_fields("h2:n_base=10,n_comp=2")
        assert prefix == "h2"
        assert fields == {"n_base": "10", "n_comp": "2"}
        assert condition_fields("plain") == ("plain", {})


class TestCollectInputs:
    def test_grouped_and_sorted(self, run_dir):
        grouped = collect_inputs(run_dir)
        assert set(grouped) == {"h1", "h2", "h3", "h4"}
        h1 = grouped["h1"]
        assert [s.n for s in h1] == [5, 20, 60, 120]
        assert all(s.n_trials == 40 for s in h1)

    def test_records_beat_csv_rows(self, run_dir, tmp_path):
        target = tmp_path / "mixed"
        target.mkdir()
        (target / "h1_records.jsonl").write_text(
            (run_dir / "h1_records.jsonl").read_text(encoding="utf-8"),
            encoding="utf-8",
        )
        write_summary_csv(
            [
                ConditionSummary("h1:size=5", 5, 0, 0.0, 0.0),
                ConditionSummary("extra:kind=csv-only", 0, 0, 0.75, 0.0),
            ],
            target / "override_summary.csv",
        )
        grouped = collect_inputs(target)
        by_condition = {
            s.condition: s for group in grouped.values() for s in group
        }
        # The record-derived accuracy wins over the CSV's zero.
        assert by_condition["h1:size=5"].mean > 0.0
        assert by_condition["h1:size=5"].n_trials == 40
        # CSV-only conditions still show up, with no trial count.
        assert by_condition["extra:kind=csv-only"].n_trials == 0

    def test_missing_dir(self, tmp_path):
        with pytest.raises(MissingInput, match="not found"):
            collect_inputs(tmp_path / "absent")

    def test_empty_dir(self, tmp_path):
        empty = tmp_path / "empty"
        empty.mkdir()
        with pytest.raises(MissingInput, match="no records"):
            collect_inputs(empty)


class TestBuildReport:
    def test_sections_and_fit_line(self, run_dir):
        text = build_report(collect_inputs(run_dir))
        assert text.startswith("# Skill selection experiment report\n")
        assert "## Accuracy versus library size (h1)" in text
        assert "## Competitor interference (h2)" in text
        assert "## Policy complexity (h3)" in text
        assert "## Hierarchical versus flat selection (h4)" in text
        assert "Fitted capacity law: alpha=" in text
        assert "| \\|S\\| | Groups | Flat | Naive | Confusability-aware |" in text
        assert "| n_base | n_comp=0 | n_comp=1 |" in text
        assert "| \\|S\\| | simple | medium |" in text

    def test_missing_cells_render_na(self, tmp_path):
        write_summary_csv(
            [
                ConditionSummary("h4:n_groups=2,method=flat", 6, 0, 0.9, 0.0),
                ConditionSummary("h4:n_groups=3,method=flat", 9, 0, 0.8, 0.0),
                ConditionSummary(
                    "h4:n_groups=3,method=confusability", 9, 0, 0.95, 0.0
                ),
            ],
            tmp_path / "h4_summary.csv",
        )
        text = build_report(collect_inputs(tmp_path))
        assert "| 6 | 2 | 0.9000 ± 0.0000 | n/a |" in text

    def test_unknown_prefix_gets_generic_table(self, tmp_path):
        write_summary_csv(
            [ConditionSummary("misc:kind=free", 0, 0, 0.5, 0.1)],
            tmp_path / "misc_summary.csv",
        )
        text = build_report(collect_inputs(tmp_path))
        assert "## Conditions under misc (misc)" in text
        assert "| misc:kind=free | 0 | 0.5000 | 0.1000 | 0 |" in text


class TestPlotData:
    def test_schema_and_series(self, run_dir):
        data = build_plot_data(collect_inputs(run_dir))
        assert data["schema_version"] == 1
        assert set(data["series"]) == {"h1", "h2", "h3", "h4"}
        h1 = data["series"]["h1"]
        assert h1["n"] == [5, 20, 60, 120]
        assert len(h1["mean"]) == len(h1["std"]) == len(h1["n_trials"]) == 4
        assert "fit" in h1
        assert len(h1["predicted"]) == 4
        assert "fit" not in data["series"]["h4"]


class TestWriteReport:
    def test_artifacts_and_determinism(self, run_dir, tmp_path):
        out_a = tmp_path / "a"
        out_b = tmp_path / "b"
        written = write_report(run_dir, out_a)
        write_report(run_dir, out_b)
        assert written["report"] == out_a / REPORT_NAME
        assert written["plot_data"] == out_a / PLOT_DATA_NAME
        for name in (REPORT_NAME, PLOT_DATA_NAME):
            assert (out_a / name).read_bytes() == (out_b / name).read_bytes()
        data = json.loads((out_a / PLOT_DATA_NAME).read_text(encoding="utf-8"))
        assert data["schema_version"] == 1
        figures = written["figures"]
        assert [p.name for p in figures] == [
            "h1_capacity.png",
            "h2_interference.png",
            "h3_complexity.png",
            "h4_hierarchy.png",
        ]
        for path in figures:
            blob = path.read_bytes()
            assert blob.startswith(PNG_MAGIC)
            assert len(blob) > 1024

    def test_figures_can_be_skipped(self, run_dir, tmp_path):
        out = tmp_path / "nofig"
        written = write_report(run_dir, out, figures=False)
        assert written["figures"] == []
        assert list(out.glob("*.png")) == []
        assert (out / REPORT_NAME).exists()

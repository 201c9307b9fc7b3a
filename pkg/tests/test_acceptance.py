"""End-to-end acceptance suite: one test per shipped guarantee.

Each test prints a single "acceptance NN <name>: PASS" line on success, so
`pytest -v -s tests/test_acceptance.py` reads as a checklist. Monte Carlo
tests pin tolerances that were calibrated against independently measured
realizations; none of them are tuned to pass by construction.

A recurring trick here: the simulated backend draws its outcome from a hash
of the query text, so duplicate tasks always repeat the same outcome. Running
each unique (query, truth) pair once and weighting by its multiplicity is
therefore exactly equivalent to running the full task list, just cheaper.
"""

import json
import subprocess
import sys
import time
from collections import Counter
from dataclasses import dataclass, replace
from pathlib import Path

import pytest

from skillab import (
    SimParams,
    build_flat_prompt,
    build_stage1_prompt,
    build_stage2_prompt,
    check_compilability,
    compile_mas,
    cost_mas,
    cost_sas,
    efficiency_check,
    fit_law,
    flat_select,
    gen_competitors,
    gen_grouped,
    gen_library,
    gen_tasks,
    group_confusability,
    hier_select,
    library_to_dict,
    parse_selection,
    sample_tasks,
    sas_execute,
    tasks_to_dict,
)
from skillab.backends import CompletionResult, ExactOracleBackend, simulated_backend
from skillab.benchmarks import ARCHETYPES, BENCHMARKS
from skillab.catalog import ALL_TEMPLATES, DOMAINS
from skillab.cli import main
from skillab.fitting import eval_law
from skillab.harness import H1_SIZES
from skillab.prompts import SkillGroup
from skillab.synthlib import policy_text
from skillab.types import ExecutionTrace, TaskInstance, TraceStep

GOLDEN = Path(__file__).parent / "golden"


def _unique_tasks(tasks):
    """First task instance per distinct (query, truth) pair, in order."""
    unique = {}
    for task in tasks:
        unique.setdefault((task.query, task.truth), task)
    return list(unique.values())


def _flat_accuracy(library, tasks, params):
    """Unweighted flat-selection accuracy over unique (query, truth) pairs.

    Every unique query is one independent Bernoulli outcome; weighting
    duplicates adds variance without adding information, so the unweighted
    mean is the lower-variance estimator of the selection probability.
    """
    unique = _unique_tasks(tasks)
    backend = simulated_backend(params, library, unique)
    hits = sum(flat_select(t, library, backend).correct for t in unique)
    return hits / len(unique)


def _generator_grouping(library):
    """SkillGroups straight from the generator's group metadata."""
    ids_by_label: dict[str, list[str]] = {}
    for skill in library.skills:
        ids_by_label.setdefault(library.meta[skill.id].group_id, []).append(skill.id)
    return tuple(
        SkillGroup(
            label=label,
            description=library.groups[label],
            skill_ids=tuple(ids),
        )
        for label, ids in ids_by_label.items()
    )


@pytest.fixture(scope="module")
def capacity_curve():
    """Flat-selection accuracy at every sweep size, 10k trials per size.

    Computed once and shared: the fit test checks parameter recovery on it
    and the shape test checks monotonicity of its tail. Returns the points
    and the wall-clock seconds the sweep took.
    """
    params = SimParams(alpha=0.95, kappa=90.0, gamma=1.7, epsilon=0.0, seed=0)
    t0 = time.monotonic()
    points = []
    for size in H1_SIZES:
        library = gen_library(size, "mixed", "simple", seed=size)
        tasks = sample_tasks(library, 10_000, seed=size)
        counts = Counter((t.query, t.truth) for t in tasks)
        unique = _unique_tasks(tasks)
        backend = simulated_backend(params, library, unique)
        hits = sum(
            counts[(t.query, t.truth)]
            for t in unique
            if flat_select(t, library, backend).correct
        )
        points.append((size, hits / len(tasks)))
    return points, time.monotonic() - t0


# ---------------------------------------------------------------------------
# 1. Compilability matrix
# ---------------------------------------------------------------------------


def test_01_compilability_matrix():
    t0 = time.monotonic()
    expected = {
        "pipeline": (True, ()),
        "router-workers": (True, ()),
        "iterative-refinement": (True, ()),
        "debate": (False, ("adversarial",)),
        "parallel-sampling": (False, ("parallel_sampling",)),
        "private-information": (False, ("private_info",)),
    }
    assert set(expected) == set(ARCHETYPES)
    for name, (compilable, reasons) in expected.items():
        report = check_compilability(ARCHETYPES[name]())
        assert report.compilable is compilable, name
        assert report.failure_reasons == reasons, name
    assert time.monotonic() - t0 < 1.0
    print("acceptance 01 compilability matrix: PASS")


# ---------------------------------------------------------------------------
# 2. Compilation structure
# ---------------------------------------------------------------------------


@dataclass
class _CountingBackend:
    """Minimal backend that counts completions and echoes a fixed reply."""

    calls: int = 0

    def complete(self, prompt, max_tokens=0, **kwargs):
        self.calls += 1
        return CompletionResult("combined output", 5, 5, 0.0)


def test_02_compilation_structure():
    expected_sizes = {"math-pipeline": 3, "code-refinement": 3, "qa-router": 4}
    for name, builder in BENCHMARKS.items():
        library = compile_mas(builder())
        assert len(library.skills) == expected_sizes[name], name

        task = TaskInstance(
            id="t0",
            query="Work through one representative task.",
            truth=library.skills[0].id,
            domain="demo",
            seed=0,
        )
        backend = _CountingBackend()
        trace = sas_execute(library, task, backend, mode="fused")
        assert trace.rounds == 1, name
        assert backend.calls == 1, name
    print("acceptance 02 compilation structure: PASS")


# ---------------------------------------------------------------------------
# 3. Cost-model arithmetic
# ---------------------------------------------------------------------------


def _trace(*completion_tokens: int) -> ExecutionTrace:
    steps = tuple(
        TraceStep(actor=f"a{i}", output="out", prompt_tokens=0, completion_tokens=ct)
        for i, ct in enumerate(completion_tokens)
    )
    return ExecutionTrace(steps=steps)


def test_03_cost_model_arithmetic():
    # Hand-computed: c = sum(completion tokens) + rounds * per-round overhead.
    mas_cases = [
        (_trace(120, 80, 40), 0.0, 240.0),
        (_trace(120, 80, 40), 25.0, 315.0),
        (_trace(500), 0.0, 500.0),
        (_trace(7, 11), 2.5, 23.0),
        (_trace(232, 232, 232, 232, 232, 232), 1.5, 1401.0),
    ]
    for trace, c_sync, expected in mas_cases:
        report = cost_mas(trace, c_sync=c_sync)
        assert report.c_value == expected
        assert report.rounds == trace.rounds
        assert report.calls == trace.rounds
        assert report.total_message_tokens == trace.total_completion_tokens

    sas_cases = [
        (_trace(616), 0.0, 616.0),
        (_trace(200, 300), 12.0, 524.0),
        (_trace(50, 60, 70), 3.5, 190.5),
        (_trace(0, 0), 0.0, 0.0),
        (_trace(900, 100), 408.0, 1816.0),
    ]
    for trace, select_cost, expected in sas_cases:
        report = cost_sas(trace, select_cost_per_round=select_cost)
        assert report.c_value == expected
        assert report.rounds == trace.rounds

    token_pairs = [
        (_trace(700, 707), _trace(616)),          # 1407 vs 616
        (_trace(350, 350, 350, 350), _trace(749)),  # 1400 vs 749
        (_trace(1453, 1453, 1453), _trace(908, 908)),  # 4359 vs 1816
    ]
    for mas_trace, sas_trace in token_pairs:
        mas_report = cost_mas(mas_trace)
        sas_report = cost_sas(sas_trace)
        assert efficiency_check(sas_report, mas_report) is True
    print("acceptance 03 cost model arithmetic: PASS")


# ---------------------------------------------------------------------------
# 4. Generator contracts
# ---------------------------------------------------------------------------


def test_04_generator_contracts():
    t0 = time.monotonic()

    for n_base in (1, 5, 12, 40):
        for n_comp in (0, 1, 2):
            library = gen_competitors(n_base, n_comp, seed=3)
            assert len(library.skills) == n_base * (1 + n_comp)
    for n_groups in (2, 7, 20, 40):
        library = gen_grouped(n_groups, seed=3)
        assert len(library.skills) == 3 * n_groups

    # Same seed, same bytes; a different seed genuinely changes the draw.
    assert library_to_dict(gen_library(60, "mixed", "medium", seed=7)) == (
        library_to_dict(gen_library(60, "mixed", "medium", seed=7))
    )
    assert library_to_dict(gen_competitors(8, 2, seed=7)) == (
        library_to_dict(gen_competitors(8, 2, seed=7))
    )
    assert library_to_dict(gen_grouped(12, seed=7)) == (
        library_to_dict(gen_grouped(12, seed=7))
    )
    assert library_to_dict(gen_library(60, "mixed", "medium", seed=8)) != (
        library_to_dict(gen_library(60, "mixed", "medium", seed=7))
    )
    grouped = gen_grouped(12, seed=7)
    assert tasks_to_dict(gen_tasks(grouped, 3, seed=2)) == (
        tasks_to_dict(gen_tasks(grouped, 3, seed=2))
    )

    # Low similarity spreads across every domain from the very first picks.
    for size in (8, 24, 80):
        library = gen_library(size, "low", "simple", seed=11)
        assert {m.domain for m in library.meta.values()} == set(DOMAINS)

    # Canonical catalog entries surface verbatim in generated artifacts.
    full = gen_competitors(40, 2, seed=0)
    by_name = {s.name: s for s in full.skills}
    assert by_name["Calculate Sum"].descriptor == (
        "Calculate Sum: Add all numbers together and return the total."
    )
    assert by_name["Compute Total"].descriptor == (
        "Compute Total: Compute the total by adding all values together."
    )
    assert by_name["Sum Numbers"].descriptor == (
        "Sum Numbers: Sum up all the given numbers."
    )
    assert full.meta[by_name["Calculate Sum"].id].group_id == "Summation"
    assert full.groups["Summation"] == "Adding numbers together"

    canonical = [
        (t.query.canonical, t.query.pattern, t.query.canonical_params)
        for _, _, t in ALL_TEMPLATES
        if t.query.canonical
    ]
    assert "What is the sum of 23, 45, and 67?" in {c for c, _, _ in canonical}
    for canon, pattern, params in canonical:
        assert pattern.format(**params) == canon

    assert policy_text("summation", "simple") == (
        "Read every number stated in the task, then add the values into one "
        "exact total, and return the final total as one clear answer with no "
        "extra commentary beyond the result itself."
    )
    assert "Error Handling:" in policy_text("summation", "complex")

    assert time.monotonic() - t0 < 5.0
    print("acceptance 04 generator contracts: PASS")


# ---------------------------------------------------------------------------
# 5. Prompt golden files
# ---------------------------------------------------------------------------


def test_05_prompt_golden_files():
    library = gen_grouped(2, seed=0)
    task = gen_tasks(library, 1, seed=0)[0]
    grouping = group_confusability(library, threshold=0.25)
    truth_group = next(g for g in grouping if task.truth in g.skill_ids)

    flat = build_flat_prompt(task, library)
    stage1 = build_stage1_prompt(task, grouping)
    stage2 = build_stage2_prompt(task, library, truth_group)

    assert flat == (GOLDEN / "flat_prompt.txt").read_text(encoding="utf-8")
    assert stage1 == (GOLDEN / "stage1_prompt.txt").read_text(encoding="utf-8")
    assert stage2 == (GOLDEN / "stage2_prompt.txt").read_text(encoding="utf-8")

    assert "Respond with ONLY the skill ID" in flat
    assert "Respond with ONLY the skill ID" in stage2
    assert "Respond with ONLY the category name" in stage1
    print("acceptance 05 prompt golden files: PASS")


# ---------------------------------------------------------------------------
# 6. Scaling-law recovery
# ---------------------------------------------------------------------------


def test_06_scaling_law_recovery(capacity_curve):
    points, sweep_seconds = capacity_curve

    # Noiseless inverse: samples of the law itself give back its parameters.
    for true in ((0.95, 90.0, 1.7), (0.96, 91.8, 1.72)):
        ideal = [(n, eval_law(*true, n)) for n in H1_SIZES]
        fit = fit_law(ideal)
        assert abs(fit.alpha - true[0]) <= 1e-4
        assert abs(fit.kappa - true[1]) <= 1e-4
        assert abs(fit.gamma - true[2]) <= 1e-4

    # Monte Carlo recovery from the simulated backend at 10k trials/size.
    t0 = time.monotonic()
    fit = fit_law(points)
    assert fit.converged
    assert abs(fit.alpha - 0.95) <= 0.05
    assert abs(fit.kappa - 90.0) <= 0.10 * 90.0
    assert abs(fit.gamma - 1.7) <= 0.15 * 1.7
    assert fit.r_squared > 0.97
    assert sweep_seconds + (time.monotonic() - t0) < 120.0
    print("acceptance 06 scaling law recovery: PASS")


# ---------------------------------------------------------------------------
# 7. Capacity curve shape
# ---------------------------------------------------------------------------


def test_07_capacity_curve_shape(capacity_curve):
    points, _ = capacity_curve

    tail = [acc for size, acc in points if size >= 30]
    assert all(a >= b for a, b in zip(tail, tail[1:])), tail

    # At a library size of the backend's own capacity constant, accuracy
    # sits at half the asymptote. Averaged over three library draws.
    params = SimParams()
    accs = []
    for seed in (0, 1, 2):
        library = gen_library(92, "mixed", "simple", seed=seed)
        tasks = sample_tasks(library, 10_000, seed=seed)
        accs.append(_flat_accuracy(library, tasks, params))
    mean = sum(accs) / len(accs)
    assert abs(mean - 0.48) <= 0.03, accs
    print("acceptance 07 capacity curve shape: PASS")


# ---------------------------------------------------------------------------
# 8. Interference ordering
# ---------------------------------------------------------------------------


def test_08_interference_ordering():
    params = SimParams(alpha=0.96, kappa=91.8, gamma=1.72, epsilon=0.8, seed=0)

    # Adding competitors to a fixed base set never helps, at any seed. The
    # three compositions share identical query streams, and a query that
    # fails in a smaller, less crowded library also fails in a larger one.
    for n_base in (5, 10, 15, 20):
        for seed in (0, 1, 2):
            chain = []
            for n_comp in (0, 1, 2):
                library = gen_competitors(n_base, n_comp, seed=seed)
                tasks = sample_tasks(library, 3_000, seed=seed)
                chain.append(_flat_accuracy(library, tasks, params))
            assert chain[0] >= chain[1] >= chain[2], (n_base, seed, chain)

    # At equal library size, the composition with fewer competitors wins.
    # Both sides see the same query set (truths remapped by skill name), so
    # the comparison is paired rather than two independent estimates.
    pairs = (
        ((10, 0), (5, 1)),
        ((15, 0), (5, 2)),
        ((20, 0), (10, 1)),
        ((15, 1), (10, 2)),
    )
    for fewer, more in pairs:
        assert fewer[0] * (1 + fewer[1]) == more[0] * (1 + more[1])
        for seed in (0, 1, 2):
            lib_fewer = gen_competitors(*fewer, seed=seed)
            lib_more = gen_competitors(*more, seed=seed)
            tasks_more = _unique_tasks(sample_tasks(lib_more, 3_000, seed=seed))
            id_by_name = {s.name: s.id for s in lib_fewer.skills}
            tasks_fewer = [
                replace(t, truth=id_by_name[lib_more.by_id(t.truth).name])
                for t in tasks_more
            ]
            be_more = simulated_backend(params, lib_more, tasks_more)
            be_fewer = simulated_backend(params, lib_fewer, tasks_fewer)
            acc_more = sum(
                flat_select(t, lib_more, be_more).correct for t in tasks_more
            ) / len(tasks_more)
            acc_fewer = sum(
                flat_select(t, lib_fewer, be_fewer).correct for t in tasks_fewer
            ) / len(tasks_fewer)
            assert acc_fewer >= acc_more, (fewer, more, seed, acc_fewer, acc_more)

    # The exact oracle never misses on a competitor-free library.
    library = gen_competitors(20, 0, seed=0)
    tasks = sample_tasks(library, 500, seed=0)
    backend = ExactOracleBackend(library, tasks)
    assert all(flat_select(t, library, backend).correct for t in tasks)
    print("acceptance 08 interference ordering: PASS")


# ---------------------------------------------------------------------------
# 9. Hierarchical routing gain
# ---------------------------------------------------------------------------


def test_09_hierarchical_routing_gain():
    params = SimParams()
    for n_groups in (20, 30):
        library = gen_grouped(n_groups, seed=0)
        grouping = _generator_grouping(library)
        assert 3 * n_groups >= 60
        assert len(grouping) < params.kappa
        assert max(len(g.skill_ids) for g in grouping) < params.kappa

        tasks = _unique_tasks(sample_tasks(library, 10_000, seed=0))
        backend = simulated_backend(params, library, tasks, grouping=grouping)
        label_of = {sid: g.label for g in grouping for sid in g.skill_ids}
        group_of = {g.label: g for g in grouping}
        labels = [g.label for g in grouping]

        flat_hits = comp_hits = stage1_hits = stage2_hits = 0
        for task in tasks:
            if flat_select(task, library, backend).correct:
                flat_hits += 1
            if hier_select(task, library, grouping, backend).correct:
                comp_hits += 1
            raw1 = backend.complete(
                build_stage1_prompt(task, grouping), max_tokens=100
            ).raw
            if parse_selection(raw1, labels, "strict") == label_of[task.truth]:
                stage1_hits += 1
            own = group_of[label_of[task.truth]]
            raw2 = backend.complete(
                build_stage2_prompt(task, library, own), max_tokens=100
            ).raw
            if parse_selection(raw2, list(own.skill_ids), "strict") == task.truth:
                stage2_hits += 1

        n = len(tasks)
        flat_acc = flat_hits / n
        comp_acc = comp_hits / n
        p1 = stage1_hits / n
        p2 = stage2_hits / n

        assert comp_acc > flat_acc + 0.10, (n_groups, comp_acc, flat_acc)

        # Composite equals the product of the measured stage accuracies.
        product_ci = 4 * (p1 * (1 - p1) * p2 * (1 - p2) / n) ** 0.5
        assert abs(comp_acc - p1 * p2) <= product_ci, (n_groups, comp_acc, p1 * p2)

        # And it lands on the capacity law's prediction for a two-stage
        # cascade, within three standard errors of the composite estimate.
        predicted = eval_law(
            params.alpha, params.kappa, params.gamma, n_groups
        ) * eval_law(params.alpha, params.kappa, params.gamma, 3)
        sigma = (comp_acc * (1 - comp_acc) / n) ** 0.5
        assert abs(comp_acc - predicted) <= 3 * sigma, (n_groups, comp_acc, predicted)
    print("acceptance 09 hierarchical routing gain: PASS")


# ---------------------------------------------------------------------------
# 10. Resumable sweeps
# ---------------------------------------------------------------------------


def test_10_resumable_sweeps(tmp_path):
    config = {
        "hypothesis": "h1",
        "backend": {"kind": "simulated"},
        "seeds": [0, 1],
        "tasks_per_condition": 2500,
        "sizes": [50, 100, 150],
    }
    total_records = 2 * 2500 * 3
    cfg_path = tmp_path / "config.json"
    cfg_path.write_text(json.dumps(config), encoding="utf-8")

    dir_full = tmp_path / "full"
    assert main(["run", "--config", str(cfg_path), "--out", str(dir_full)]) == 0
    full_records = (dir_full / "h1_records.jsonl").read_bytes()
    full_summary = (dir_full / "h1_summary.csv").read_bytes()
    assert full_records.count(b"\n") == total_records

    # Hard-kill a fresh run mid-sweep, then rerun the same command.
    dir_kill = tmp_path / "killed"
    records_path = dir_kill / "h1_records.jsonl"
    child = (
        "import sys\n"
        "from skillab.cli import main\n"
        "sys.exit(main(['run', '--config', sys.argv[1], '--out', sys.argv[2]]))\n"
    )
    proc = subprocess.Popen(
        [sys.executable, "-c", child, str(cfg_path), str(dir_kill)],
        stdout=subprocess.DEVNULL,
        stderr=subprocess.DEVNULL,
    )
    try:
        deadline = time.monotonic() + 120.0
        while time.monotonic() < deadline:
            if records_path.exists() and records_path.read_bytes().count(b"\n") >= 1000:
                break
            if proc.poll() is not None:
                break
            time.sleep(0.005)
        assert proc.poll() is None, "sweep finished before it could be killed"
        proc.kill()
        proc.wait(timeout=30)
    finally:
        if proc.poll() is None:
            proc.kill()
            proc.wait(timeout=30)

    partial = records_path.read_bytes()
    assert 0 < partial.count(b"\n") < total_records
    assert main(["run", "--config", str(cfg_path), "--out", str(dir_kill)]) == 0
    assert (dir_kill / "h1_summary.csv").read_bytes() == full_summary
    assert (dir_kill / "h1_records.jsonl").read_bytes() == full_records

    # Same guarantee when the kill tears a record line in half.
    dir_torn = tmp_path / "torn"
    dir_torn.mkdir()
    lines = full_records.decode("utf-8").splitlines(keepends=True)
    torn = "".join(lines[:6000]) + lines[6000][: len(lines[6000]) // 2]
    (dir_torn / "h1_records.jsonl").write_text(torn, encoding="utf-8")
    assert main(["run", "--config", str(cfg_path), "--out", str(dir_torn)]) == 0
    assert (dir_torn / "h1_summary.csv").read_bytes() == full_summary
    assert (dir_torn / "h1_records.jsonl").read_bytes() == full_records
    print("acceptance 10 resumable sweeps: PASS")

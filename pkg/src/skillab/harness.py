"""Experiment harness.

Runs the four selection experiments as declarative sweeps: capacity versus
library size (h1), competitor interference (h2), policy complexity (h3), and
hierarchical routing against flat selection (h4). Each sweep condition gets
its own generated library and task sample per seed; trial records stream to
an appending JSONL sink so an interrupted run resumes by skipping the
(condition, seed, trial_index) keys already on disk.
"""

from __future__ import annotations

import csv
import io
import json
import sys
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from statistics import pstdev
from typing import Callable, Sequence

from .backends import (
    ExactOracleBackend,
    LlmBackend,
    LlmConfig,
    SelectorBackend,
    SimParams,
    SimulatedBackend,
)
from .catalog import COMPLEXITY_TIERS
from .errors import (
    AuthError,
    BackendFailure,
    DomainError,
    EmptyGroup,
    ParseError,
    RateLimited,
    SpecError,
    TransportError,
)
from .prompts import SkillGroup
from .selection import (
    flat_select,
    group_confusability,
    group_naive_domain,
    hier_select,
)
from .synthlib import gen_competitors, gen_grouped, gen_library, sample_tasks
from .types import SCHEMA_VERSION, SkillLibrary, TaskInstance

HYPOTHESES = ("h1", "h2", "h3", "h4")

H1_SIZES = (5, 10, 20, 25, 30, 40, 50, 75, 100, 150, 200)
H1_DESIGN_SIZES = (5, 10, 20, 35, 50, 75, 100, 150, 200)
H2_N_BASES = (5, 10, 15, 20)
H2_N_COMPS = (0, 1, 2)
H3_SIZES = (10, 20, 50, 100, 150)
H4_N_GROUPS = (4, 6, 8, 10, 20, 30, 40)
H4_METHODS = ("flat", "naive-domain", "confusability")

PRESETS = ("h1", "h1-design", "h2", "h3", "h4")


@dataclass(frozen=True)
class ExperimentConfig:
    """Declarative description of one experiment sweep.

    sizes applies to h1 and h3 and defaults per hypothesis when left None.
    backend is a plain dict: {"kind": "exact"}, {"kind": "simulated",
    "alpha": ..., ...}, or {"kind": "llm", "endpoint": ..., "model_id": ...,
    "credential_env": ...}.
    """

    hypothesis: str
    backend: dict = field(default_factory=lambda: {"kind": "simulated"})
    seeds: tuple[int, ...] = (0, 1, 2)
    tasks_per_condition: int = 100
    sizes: tuple[int, ...] | None = None
    similarity: str = "mixed"
    complexity: str = "simple"
    n_bases: tuple[int, ...] = H2_N_BASES
    n_comps: tuple[int, ...] = H2_N_COMPS
    complexities: tuple[str, ...] = COMPLEXITY_TIERS
    include_policies: bool = True
    n_groups: tuple[int, ...] = H4_N_GROUPS
    group_size: int = 3
    methods: tuple[str, ...] = H4_METHODS
    confusability_threshold: float = 0.25
    parse_mode: str = "strict"

    def __post_init__(self):
        hyp = str(self.hypothesis).lower()
        if hyp not in HYPOTHESES:
            raise SpecError(f"unknown hypothesis {self.hypothesis!r}")
        object.__setattr__(self, "hypothesis", hyp)
        if self.sizes is None:
            default = H1_SIZES if hyp == "h1" else H3_SIZES if hyp == "h3" else ()
            object.__setattr__(self, "sizes", tuple(default))
        for name in ("sizes", "seeds", "n_bases", "n_comps", "complexities",
                     "n_groups", "methods"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if not self.seeds:
            raise SpecError("seeds must be non-empty")
        if len(set(self.seeds)) != len(self.seeds):
            raise SpecError("seeds must be distinct")
        if self.tasks_per_condition < 1:
            raise SpecError("tasks_per_condition must be >= 1")
        if self.parse_mode not in ("strict", "lenient"):
            raise SpecError(f"unknown parse mode {self.parse_mode!r}")
        if "kind" not in self.backend:
            raise SpecError("backend spec needs a 'kind' field")
        sweep_fields = {
            "h1": ("sizes",),
            "h2": ("n_bases", "n_comps"),
            "h3": ("complexities", "sizes"),
            "h4": ("n_groups", "methods"),
        }[hyp]
        for name in sweep_fields:
            if not getattr(self, name):
                raise SpecError(f"{hyp} sweep list {name!r} must be non-empty")
        if hyp == "h4":
            for method in self.methods:
                if method not in H4_METHODS:
                    raise SpecError(f"unknown h4 method {method!r}")


def preset(name: str, **overrides) -> ExperimentConfig:
    """A ready-to-run config for one of the named experiment presets."""
    if name == "h1-design":
        overrides.setdefault("sizes", H1_DESIGN_SIZES)
        return ExperimentConfig(hypothesis="h1", **overrides)
    if name in HYPOTHESES:
        return ExperimentConfig(hypothesis=name, **overrides)
    raise DomainError(f"unknown preset {name!r}; choose from {PRESETS}")


def config_to_dict(cfg: ExperimentConfig) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "hypothesis": cfg.hypothesis,
        "backend": dict(cfg.backend),
        "seeds": list(cfg.seeds),
        "tasks_per_condition": cfg.tasks_per_condition,
        "sizes": list(cfg.sizes),
        "similarity": cfg.similarity,
        "complexity": cfg.complexity,
        "n_bases": list(cfg.n_bases),
        "n_comps": list(cfg.n_comps),
        "complexities": list(cfg.complexities),
        "include_policies": cfg.include_policies,
        "n_groups": list(cfg.n_groups),
        "group_size": cfg.group_size,
        "methods": list(cfg.methods),
        "confusability_threshold": cfg.confusability_threshold,
        "parse_mode": cfg.parse_mode,
    }


def config_from_dict(data: dict) -> ExperimentConfig:
    try:
        kwargs = {
            "hypothesis": data["hypothesis"],
            "backend": dict(data.get("backend", {"kind": "simulated"})),
        }
        for key in ("seeds", "sizes", "n_bases", "n_comps", "complexities",
                    "n_groups", "methods"):
            if key in data and data[key] is not None:
                kwargs[key] = tuple(data[key])
        for key in ("tasks_per_condition", "similarity", "complexity",
                    "include_policies", "group_size",
                    "confusability_threshold", "parse_mode"):
            if key in data:
                kwargs[key] = data[key]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed experiment config: {exc!r}") from exc
    return ExperimentConfig(**kwargs)


# ---------------------------------------------------------------------------
# Trial records and persistence
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TrialRecord:
    """One selection trial; (condition, seed, trial_index) identifies it."""

    condition: str
    task_id: str
    truth: str
    selected: str | None
    correct: bool
    tokens: int
    latency_ms: float
    seed: int
    trial_index: int

    @property
    def key(self) -> tuple[str, int, int]:
        return (self.condition, self.seed, self.trial_index)


def record_to_dict(record: TrialRecord) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "condition": record.condition,
        "task_id": record.task_id,
        "truth": record.truth,
        "selected": record.selected,
        "correct": record.correct,
        "tokens": record.tokens,
        "latency_ms": record.latency_ms,
        "seed": record.seed,
        "trial_index": record.trial_index,
    }


def record_from_dict(data: dict) -> TrialRecord:
    try:
        return TrialRecord(
            condition=data["condition"],
            task_id=data["task_id"],
            truth=data["truth"],
            selected=data.get("selected"),
            correct=bool(data["correct"]),
            tokens=int(data["tokens"]),
            latency_ms=float(data["latency_ms"]),
            seed=int(data["seed"]),
            trial_index=int(data["trial_index"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed trial record: {exc!r}") from exc


def load_records(path) -> list[TrialRecord]:
    """Read a JSONL records file; blank lines are ignored."""
    records = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                records.append(record_from_dict(json.loads(line)))
            except (json.JSONDecodeError, ParseError) as exc:
                raise ParseError(f"{path}: line {lineno}: {exc}") from exc
    return records


class RecordSink:
    """Appending JSONL sink; every write is flushed so kills lose little."""

    def __init__(self, path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._fh = None

    def existing(self) -> dict[tuple[str, int, int], TrialRecord]:
        """Records already on disk, ready to be skipped on resume.

        A process killed mid-write can leave a torn final line; that tail is
        truncated away so the rerun regenerates the lost trial. Corruption
        anywhere else stays a hard ParseError.
        """
        if not self.path.exists():
            return {}
        text = self.path.read_text(encoding="utf-8")
        lines = text.splitlines(keepends=True)
        records: dict[tuple[str, int, int], TrialRecord] = {}
        good_end = 0
        for index, line in enumerate(lines):
            stripped = line.strip()
            last = index == len(lines) - 1
            if not stripped:
                good_end += len(line)
                continue
            try:
                record = record_from_dict(json.loads(stripped))
            except (json.JSONDecodeError, ParseError) as exc:
                if last:
                    with open(self.path, "r+", encoding="utf-8") as fh:
                        fh.truncate(good_end)
                    break
                raise ParseError(f"{self.path}: line {index + 1}: {exc}") from exc
            if last and not line.endswith("\n"):
                with open(self.path, "a", encoding="utf-8") as fh:
                    fh.write("\n")
            records[record.key] = record
            good_end += len(line)
        return records

    def write(self, record: TrialRecord) -> None:
        line = json.dumps(record_to_dict(record), sort_keys=True)
        with self._lock:
            if self._fh is None:
                self.path.parent.mkdir(parents=True, exist_ok=True)
                self._fh = open(self.path, "a", encoding="utf-8")
            self._fh.write(line + "\n")
            self._fh.flush()

    def close(self) -> None:
        with self._lock:
            if self._fh is not None:
                self._fh.close()
                self._fh = None

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


# ---------------------------------------------------------------------------
# Backends from config
# ---------------------------------------------------------------------------


def make_backend(
    spec: dict,
    library: SkillLibrary,
    tasks: Sequence[TaskInstance],
    seed: int,
    grouping: tuple[SkillGroup, ...] | None = None,
) -> SelectorBackend:
    """Instantiate the backend a config's backend dict describes."""
    kind = spec.get("kind", "simulated")
    if kind == "exact":
        return ExactOracleBackend(library, list(tasks), grouping=grouping)
    if kind == "simulated":
        params = SimParams(
            alpha=float(spec.get("alpha", 0.96)),
            kappa=float(spec.get("kappa", 91.8)),
            gamma=float(spec.get("gamma", 1.72)),
            epsilon=float(spec.get("epsilon", 0.0)),
            seed=seed,
        )
        return SimulatedBackend(params, library, list(tasks), grouping=grouping)
    if kind == "llm":
        try:
            config = LlmConfig(
                endpoint=spec["endpoint"],
                model_id=spec["model_id"],
                credential_env=spec.get("credential_env", "SKILLAB_API_KEY"),
                timeout_s=float(spec.get("timeout_s", 30.0)),
                max_retries=int(spec.get("max_retries", 4)),
                backoff_s=float(spec.get("backoff_s", 0.5)),
                requests_per_minute=spec.get("requests_per_minute"),
                temperature=float(spec.get("temperature", 0.0)),
            )
        except KeyError as exc:
            raise ParseError(f"llm backend spec missing field {exc}") from exc
        return LlmBackend(config)
    raise DomainError(f"unknown backend kind {kind!r}")


def validate_backend_spec(spec: dict) -> None:
    """Fail fast on a bad backend dict, before any trial runs.

    For the llm kind this checks the credential environment variable is set,
    so a run never starts when every call would fail.
    """
    import os

    kind = spec.get("kind", "simulated")
    if kind == "simulated":
        SimParams(
            alpha=float(spec.get("alpha", 0.96)),
            kappa=float(spec.get("kappa", 91.8)),
            gamma=float(spec.get("gamma", 1.72)),
            epsilon=float(spec.get("epsilon", 0.0)),
        )
    elif kind == "llm":
        if "endpoint" not in spec or "model_id" not in spec:
            raise ParseError("llm backend spec needs endpoint and model_id")
        env = spec.get("credential_env", "SKILLAB_API_KEY")
        if not os.environ.get(env, ""):
            raise AuthError(
                f"environment variable {env} is not set; no request was sent"
            )
    elif kind != "exact":
        raise DomainError(f"unknown backend kind {kind!r}")


# ---------------------------------------------------------------------------
# Sweep execution
# ---------------------------------------------------------------------------


Builder = Callable[
    [int], tuple[SkillLibrary, list[TaskInstance], tuple[SkillGroup, ...] | None]
]


@dataclass(frozen=True)
class _Condition:
    name: str
    builder: Builder
    method: str = "flat"
    include_policies: bool = False


def _expect(cfg: ExperimentConfig, hypothesis: str) -> None:
    if cfg.hypothesis != hypothesis:
        raise SpecError(
            f"config is for {cfg.hypothesis!r}, this runner wants {hypothesis!r}"
        )


def _trial(
    cond: _Condition,
    library: SkillLibrary,
    grouping: tuple[SkillGroup, ...] | None,
    backend: SelectorBackend,
    mode: str,
    seed: int,
    index: int,
    task: TaskInstance,
) -> TrialRecord:
    if cond.method == "flat" or grouping is None:
        outcome = flat_select(
            task, library, backend, mode=mode,
            include_policies=cond.include_policies,
        )
    else:
        outcome = hier_select(task, library, grouping, backend, mode=mode)
    return TrialRecord(
        condition=cond.name,
        task_id=task.id,
        truth=task.truth,
        selected=outcome.selected,
        correct=outcome.correct,
        tokens=outcome.tokens,
        latency_ms=outcome.latency_ms,
        seed=seed,
        trial_index=index,
    )


def _run_condition(
    cfg: ExperimentConfig,
    cond: _Condition,
    existing: dict,
    sink: RecordSink | None,
    parallelism: int,
) -> list[TrialRecord]:
    records: list[TrialRecord] = []
    for seed in cfg.seeds:
        library, tasks, grouping = cond.builder(seed)
        todo = [
            (index, task)
            for index, task in enumerate(tasks)
            if (cond.name, seed, index) not in existing
        ]
        ran: dict[int, TrialRecord] = {}
        if todo:
            backend = make_backend(cfg.backend, library, tasks, seed, grouping)

            def run_one(pair):
                index, task = pair
                return _trial(
                    cond, library, grouping, backend, cfg.parse_mode,
                    seed, index, task,
                )

            if parallelism > 1:
                with ThreadPoolExecutor(max_workers=parallelism) as pool:
                    results = list(pool.map(run_one, todo))
            else:
                results = [run_one(pair) for pair in todo]
            for record in results:
                if sink is not None:
                    sink.write(record)
                ran[record.trial_index] = record
        for index in range(len(tasks)):
            key = (cond.name, seed, index)
            records.append(existing[key] if key in existing else ran[index])
    return records


def _run_sweep(
    cfg: ExperimentConfig,
    conditions: list[_Condition],
    sink: RecordSink | None,
    parallelism: int,
    progress: Callable[[str, int], None] | None = None,
) -> list[TrialRecord]:
    validate_backend_spec(cfg.backend)
    existing = sink.existing() if sink is not None else {}
    out: list[TrialRecord] = []
    for cond in conditions:
        try:
            records = _run_condition(cfg, cond, existing, sink, parallelism)
        except (BackendFailure, TransportError, RateLimited) as exc:
            print(
                f"warning: condition {cond.name} aborted: {exc}",
                file=sys.stderr,
            )
            records = [r for r in existing.values() if r.condition == cond.name]
            records.sort(key=lambda r: (r.seed, r.trial_index))
        if progress is not None:
            progress(cond.name, len(records))
        out.extend(records)
    return out


def run_h1(
    cfg: ExperimentConfig,
    sink: RecordSink | None = None,
    parallelism: int = 1,
    progress=None,
) -> list[TrialRecord]:
    """Flat selection accuracy as a function of library size."""
    _expect(cfg, "h1")
    conditions = []
    for size in cfg.sizes:
        def builder(seed: int, size: int = size):
            library = gen_library(size, cfg.similarity, cfg.complexity, seed=seed)
            tasks = sample_tasks(library, cfg.tasks_per_condition, seed=seed)
            return library, tasks, None

        conditions.append(_Condition(name=f"h1:size={size}", builder=builder))
    return _run_sweep(cfg, conditions, sink, parallelism, progress)


def run_h2(
    cfg: ExperimentConfig,
    sink: RecordSink | None = None,
    parallelism: int = 1,
    progress=None,
) -> list[TrialRecord]:
    """Competitor interference: n_base x n_comp grid, tasks target bases."""
    _expect(cfg, "h2")
    conditions = []
    for n_base in cfg.n_bases:
        for n_comp in cfg.n_comps:
            def builder(seed: int, n_base: int = n_base, n_comp: int = n_comp):
                library = gen_competitors(n_base, n_comp, seed=seed)
                tasks = sample_tasks(library, cfg.tasks_per_condition, seed=seed)
                return library, tasks, None

            conditions.append(
                _Condition(
                    name=f"h2:n_base={n_base},n_comp={n_comp}", builder=builder
                )
            )
    return _run_sweep(cfg, conditions, sink, parallelism, progress)


def run_h3(
    cfg: ExperimentConfig,
    sink: RecordSink | None = None,
    parallelism: int = 1,
    progress=None,
) -> list[TrialRecord]:
    """Policy complexity tiers at fixed sizes, full policies in the prompt."""
    _expect(cfg, "h3")
    conditions = []
    for tier in cfg.complexities:
        for size in cfg.sizes:
            def builder(seed: int, tier: str = tier, size: int = size):
                library = gen_library(size, cfg.similarity, tier, seed=seed)
                tasks = sample_tasks(library, cfg.tasks_per_condition, seed=seed)
                return library, tasks, None

            conditions.append(
                _Condition(
                    name=f"h3:complexity={tier},size={size}",
                    builder=builder,
                    include_policies=cfg.include_policies,
                )
            )
    return _run_sweep(cfg, conditions, sink, parallelism, progress)


def run_h4(
    cfg: ExperimentConfig,
    sink: RecordSink | None = None,
    parallelism: int = 1,
    progress=None,
) -> list[TrialRecord]:
    """Flat versus hierarchical selection on identical grouped libraries."""
    _expect(cfg, "h4")
    conditions = []
    for n_groups in cfg.n_groups:
        for method in cfg.methods:
            def builder(
                seed: int, n_groups: int = n_groups, method: str = method
            ):
                library = gen_grouped(n_groups, cfg.group_size, seed=seed)
                tasks = sample_tasks(library, cfg.tasks_per_condition, seed=seed)
                if method == "naive-domain":
                    grouping = group_naive_domain(library)
                elif method == "confusability":
                    grouping = group_confusability(
                        library, cfg.confusability_threshold
                    )
                else:
                    grouping = None
                return library, tasks, grouping

            size_part = (
                f",group_size={cfg.group_size}" if cfg.group_size != 3 else ""
            )
            conditions.append(
                _Condition(
                    name=f"h4:n_groups={n_groups}{size_part},method={method}",
                    builder=builder,
                    method=method,
                )
            )
    return _run_sweep(cfg, conditions, sink, parallelism, progress)


_RUNNERS = {"h1": run_h1, "h2": run_h2, "h3": run_h3, "h4": run_h4}


def run_experiment(
    cfg: ExperimentConfig,
    sink: RecordSink | None = None,
    parallelism: int = 1,
    progress=None,
) -> list[TrialRecord]:
    """Dispatch a config to its hypothesis runner."""
    return _RUNNERS[cfg.hypothesis](cfg, sink, parallelism, progress)


# ---------------------------------------------------------------------------
# Aggregation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConditionSummary:
    """Accuracy of one condition: mean over trials, std over per-seed means.

    n is the candidate count (library size) the condition ran at, recovered
    from the condition key; 0 when the key does not encode one.
    """

    condition: str
    n: int
    n_trials: int
    mean: float
    std: float


def condition_size(condition: str) -> int | None:
    """Library size |S| encoded in a condition key, when recoverable."""
    _, _, rest = condition.partition(":")
    fields = {}
    for part in rest.split(","):
        key, sep, value = part.partition("=")
        if sep:
            fields[key] = value
    try:
        if "size" in fields:
            return int(fields["size"])
        if "n_base" in fields:
            return int(fields["n_base"]) * (1 + int(fields.get("n_comp", 0)))
        if "n_groups" in fields:
            return int(fields["n_groups"]) * int(fields.get("group_size", 3))
    except ValueError:
        return None
    return None


def accuracy(
    records: Sequence[TrialRecord],
    group_by: Callable[[TrialRecord], str] | None = None,
) -> list[ConditionSummary]:
    """Per-condition accuracy; std is over per-seed means (population).

    Output order is (size, condition key), so it is stable no matter how
    the records were ordered on disk.
    """
    if not records:
        raise EmptyGroup("no records to aggregate")
    keyfn = group_by or (lambda r: r.condition)
    grouped: dict[str, list[TrialRecord]] = {}
    for record in records:
        grouped.setdefault(keyfn(record), []).append(record)

    summaries = []
    for condition, group in grouped.items():
        by_seed: dict[int, list[TrialRecord]] = {}
        for record in group:
            by_seed.setdefault(record.seed, []).append(record)
        seed_means = [
            sum(r.correct for r in by_seed[seed]) / len(by_seed[seed])
            for seed in sorted(by_seed)
        ]
        overall = sum(r.correct for r in group) / len(group)
        std = pstdev(seed_means) if len(seed_means) > 1 else 0.0
        summaries.append(
            ConditionSummary(
                condition=condition,
                n=condition_size(condition) or 0,
                n_trials=len(group),
                mean=overall,
                std=std,
            )
        )
    summaries.sort(key=lambda s: (s.n, s.condition))
    return summaries


def summary_csv_text(summaries: Sequence[ConditionSummary]) -> str:
    buf = io.StringIO()
    buf.write(f"# schema_version={SCHEMA_VERSION}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["condition", "n", "mean", "std"])
    for s in summaries:
        writer.writerow([s.condition, s.n, f"{s.mean:.6f}", f"{s.std:.6f}"])
    return buf.getvalue()


def write_summary_csv(summaries: Sequence[ConditionSummary], path) -> None:
    Path(path).write_text(summary_csv_text(summaries), encoding="utf-8")


def read_summary_csv(path) -> list[ConditionSummary]:
    """Read a summary CSV back; n_trials is not stored and reads as 0."""
    path = Path(path)
    if not path.exists():
        raise ParseError(f"{path}: file not found")
    rows = [
        line
        for line in path.read_text(encoding="utf-8").splitlines()
        if line.strip() and not line.startswith("#")
    ]
    if not rows:
        raise ParseError(f"{path}: no rows")
    reader = csv.reader(rows)
    header = next(reader)
    if header[:4] != ["condition", "n", "mean", "std"]:
        raise ParseError(f"{path}: unexpected header {header!r}")
    out = []
    for lineno, row in enumerate(reader, start=2):
        try:
            out.append(
                ConditionSummary(
                    condition=row[0],
                    n=int(row[1]),
                    n_trials=0,
                    mean=float(row[2]),
                    std=float(row[3]),
                )
            )
        except (IndexError, ValueError) as exc:
            raise ParseError(f"{path}: row {lineno}: {exc}") from exc
    return out

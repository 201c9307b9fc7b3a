"""Command-line entry point wiring every module together.

Subcommands: compile, check, genlib, gentasks, run, fit, report. Global
flags (--config, --seed, --parallelism, --out) may be given before or after
the subcommand name.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .backends import llm_backend
from .benchmarks import ARCHETYPES, BENCHMARKS
from .compiler import check_compilability, compile_mas
from .errors import ParseError, SkillabError, SpecError
from .fitting import fit_law
from .harness import (
    PRESETS,
    RecordSink,
    accuracy,
    config_from_dict,
    preset,
    read_summary_csv,
    run_experiment,
    summary_csv_text,
    validate_backend_spec,
    write_summary_csv,
)
from .catalog import COMPLEXITY_TIERS
from .report import write_report
from .synthlib import (
    gen_competitors,
    gen_grouped,
    gen_library,
    gen_tasks,
    sample_tasks,
)
from .types import (
    SCHEMA_VERSION,
    dump_json,
    library_from_dict,
    library_to_dict,
    load_json,
    mas_from_dict,
    tasks_to_dict,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_COMPILABLE = 2


def _add_common(parser: argparse.ArgumentParser, top: bool) -> None:
    """Register the global flags; subparsers use SUPPRESS so an unset flag
    never clobbers a value parsed before the subcommand name."""

    def kw(default):
        return {"default": default if top else argparse.SUPPRESS}

    parser.add_argument("--config", help="JSON config file", **kw(None))
    parser.add_argument("--seed", type=int, help="generator seed", **kw(0))
    parser.add_argument(
        "--parallelism", type=int, help="worker threads for sweeps", **kw(1)
    )
    parser.add_argument("--out", help="output file or directory", **kw(None))


def _out_path(args, default_name: str) -> Path:
    """Resolve --out, treating suffix-less paths as directories."""
    raw = getattr(args, "out", None)
    if raw is None:
        return Path(default_name)
    path = Path(raw)
    if path.is_dir() or path.suffix == "":
        path.mkdir(parents=True, exist_ok=True)
        return path / default_name
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


def _out_dir(args, default_name: str) -> Path:
    raw = getattr(args, "out", None)
    path = Path(raw) if raw is not None else Path(default_name)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _load_mas(args):
    if getattr(args, "builtin", None):
        registry = dict(BENCHMARKS)
        registry.update(ARCHETYPES)
        builder = registry.get(args.builtin)
        if builder is None:
            known = ", ".join(sorted(registry))
            raise SpecError(f"unknown builtin {args.builtin!r}; choose from {known}")
        return builder()
    return mas_from_dict(load_json(args.mas))


def _print_compilability(report) -> None:
    verdict = "yes" if report.compilable else "no"
    print(f"compilable: {verdict}")
    print(f"  serializable_communication: {_pf(report.c1_serializable)}")
    print(f"  shared_history: {_pf(report.c2_shared_history)}")
    print(f"  homogeneous_backbone: {_pf(report.c3_homogeneous)}")
    reasons = ", ".join(report.failure_reasons) or "none"
    print(f"  failure_reasons: {reasons}")


def _pf(ok: bool) -> str:
    return "pass" if ok else "fail"


def cmd_compile(args) -> int:
    mas = _load_mas(args)
    report = check_compilability(mas)
    _print_compilability(report)
    if not report.compilable:
        return EXIT_NOT_COMPILABLE

    backend = None
    if args.mode == "llm":
        config_path = getattr(args, "config", None)
        if config_path is None:
            raise SpecError("--mode llm needs --config with a backend spec")
        data = load_json(config_path)
        spec = data.get("backend", data)
        if spec.get("kind") != "llm":
            raise SpecError("--mode llm needs a backend spec of kind llm")
        validate_backend_spec(spec)
        backend = llm_backend(
            spec["endpoint"],
            spec["model_id"],
            credential_env=spec.get("credential_env", "SKILLAB_API_KEY"),
            requests_per_minute=spec.get("requests_per_minute"),
        )

    library = compile_mas(mas, mode=args.mode, backend=backend)
    if getattr(args, "builtin", None):
        default_name = f"{args.builtin}_library.json"
    elif getattr(args, "mas", None):
        default_name = f"{Path(args.mas).stem}_library.json"
    else:
        default_name = "library.json"
    out = _out_path(args, default_name)
    dump_json(library_to_dict(library), out)
    print(f"wrote {len(library.skills)} skills to {out}")
    return EXIT_OK


def cmd_check(args) -> int:
    report = check_compilability(_load_mas(args))
    _print_compilability(report)
    return EXIT_OK if report.compilable else EXIT_NOT_COMPILABLE


def cmd_genlib(args) -> int:
    seed = getattr(args, "seed", 0)
    if args.kind == "mixed":
        library = gen_library(args.size, args.similarity, args.complexity, seed=seed)
    elif args.kind == "competitors":
        library = gen_competitors(args.n_base, args.n_comp, seed=seed)
    else:
        library = gen_grouped(args.n_groups, group_size=args.group_size, seed=seed)
    out = _out_path(args, "library.json")
    dump_json(library_to_dict(library), out)
    print(f"wrote library ({len(library.skills)} skills) to {out}")
    return EXIT_OK


def cmd_gentasks(args) -> int:
    library = library_from_dict(load_json(args.library))
    seed = getattr(args, "seed", 0)
    if args.count is not None and args.per_skill is not None:
        raise SpecError("give --count or --per-skill, not both")
    if args.count is not None:
        tasks = sample_tasks(library, args.count, seed=seed)
    else:
        tasks = gen_tasks(library, args.per_skill or 1, seed=seed)
    out = _out_path(args, "tasks.json")
    dump_json(tasks_to_dict(tasks), out)
    print(f"wrote {len(tasks)} tasks to {out}")
    return EXIT_OK


def _experiment_config(args):
    data = {}
    config_path = getattr(args, "config", None)
    if config_path is not None:
        data = load_json(config_path)
        if not isinstance(data, dict):
            raise ParseError(f"{config_path}: expected a JSON object")
    data = dict(data)
    data.pop("schema_version", None)
    name = data.pop("preset", None)
    if getattr(args, "preset", None):
        name = args.preset
    if name is not None:
        try:
            return preset(name, **data)
        except TypeError as exc:
            raise ParseError(f"bad config override: {exc}") from exc
    if data:
        return config_from_dict(data)
    raise SpecError("run needs --config and/or --preset")


def cmd_run(args) -> int:
    cfg = _experiment_config(args)
    validate_backend_spec(cfg.backend)

    out = _out_dir(args, "runs")
    records_path = out / f"{cfg.hypothesis}_records.jsonl"
    summary_path = out / f"{cfg.hypothesis}_summary.csv"

    done = [0]

    def progress(condition: str, n_records: int) -> None:
        done[0] += 1
        print(f"[{done[0]}] {condition}: {n_records} records", file=sys.stderr)

    parallelism = getattr(args, "parallelism", 1)
    with RecordSink(records_path) as sink:
        records = run_experiment(
            cfg, sink=sink, parallelism=parallelism, progress=progress
        )
    summaries = accuracy(records)
    write_summary_csv(summaries, summary_path)
    print(summary_csv_text(summaries), end="")
    print(f"wrote {records_path}")
    print(f"wrote {summary_path}")
    return EXIT_OK


def cmd_fit(args) -> int:
    rows = read_summary_csv(args.summary)
    points = sorted((float(s.n), s.mean) for s in rows if s.n > 0)
    fit = fit_law(points)

    out = _out_path(args, "fit.json")
    if out.suffix == ".json":
        plot_path = out.with_name(out.stem + "_plot_data.json")
    else:
        plot_path = out.parent / "fit_plot_data.json"
    dump_json(fit.to_dict(), out)
    plot_data = {
        "schema_version": SCHEMA_VERSION,
        "points": [
            {"n": n, "observed": acc, "predicted": round(fit.predict(n), 6)}
            for n, acc in points
        ],
        "fit": fit.to_dict(),
    }
    plot_path.write_text(
        json.dumps(plot_data, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    print(
        f"alpha={fit.alpha:.4f} kappa={fit.kappa:.2f} gamma={fit.gamma:.3f} "
        f"r_squared={fit.r_squared:.4f}"
    )
    print(f"wrote {out}")
    print(f"wrote {plot_path}")
    return EXIT_OK


def cmd_report(args) -> int:
    out_dir = getattr(args, "out", None) or args.input
    written = write_report(args.input, out_dir, figures=not args.no_figures)
    print(f"wrote {written['report']}")
    print(f"wrote {written['plot_data']}")
    for path in written["figures"]:
        print(f"wrote {path}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skillab",
        description=(
            "Compile multi-agent specs into skill libraries and measure how "
            "skill selection scales with library size."
        ),
    )
    _add_common(parser, top=True)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, top=False)

    def mas_args(p):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--mas", help="MAS spec JSON file")
        group.add_argument(
            "--builtin",
            help="built-in spec name (benchmark or archetype)",
            metavar="NAME",
        )

    p = sub.add_parser(
        "compile", parents=[common], help="compile a MAS spec into a skill library"
    )
    mas_args(p)
    p.add_argument(
        "--mode",
        choices=("rule", "llm"),
        default="rule",
        help="capability decomposition mode",
    )
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser(
        "check", parents=[common], help="check compilability without compiling"
    )
    mas_args(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("genlib", parents=[common], help="generate a synthetic library")
    p.add_argument(
        "--kind",
        choices=("mixed", "competitors", "grouped"),
        default="mixed",
        help="generator family",
    )
    p.add_argument("--size", type=int, default=40, help="library size (kind=mixed)")
    p.add_argument(
        "--similarity",
        choices=("low", "mixed", "high"),
        default="mixed",
        help="similarity regime (kind=mixed)",
    )
    p.add_argument(
        "--complexity",
        choices=COMPLEXITY_TIERS,
        default="simple",
        help="policy complexity tier (kind=mixed)",
    )
    p.add_argument("--n-base", type=int, default=10, help="base skills (competitors)")
    p.add_argument(
        "--n-comp", type=int, default=1, help="competitors per base skill"
    )
    p.add_argument("--n-groups", type=int, default=10, help="groups (kind=grouped)")
    p.add_argument("--group-size", type=int, default=3, help="skills per group")
    p.set_defaults(func=cmd_genlib)

    p = sub.add_parser(
        "gentasks", parents=[common], help="generate tasks for a library"
    )
    p.add_argument("--library", required=True, help="library JSON file")
    p.add_argument("--per-skill", type=int, help="tasks per skill")
    p.add_argument("--count", type=int, help="total task count, sampled uniformly")
    p.set_defaults(func=cmd_gentasks)

    p = sub.add_parser("run", parents=[common], help="run an experiment sweep")
    p.add_argument(
        "--preset",
        choices=PRESETS,
        help="named sweep preset; --config values override its fields",
    )
    p.set_defaults(func=cmd_run)

    p = sub.add_parser(
        "fit", parents=[common], help="fit the capacity law to a summary CSV"
    )
    p.add_argument("summary", help="summary CSV with condition,n,mean,std rows")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser(
        "report", parents=[common], help="render report, plot data, and figures"
    )
    p.add_argument("input", help="directory of records JSONL / summary CSV files")
    p.add_argument(
        "--no-figures", action="store_true", help="skip PNG figure rendering"
    )
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SkillabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

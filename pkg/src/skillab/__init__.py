"""Compile multi-agent LLM systems into skill libraries and measure how
single-agent skill selection scales with library size."""

from .backends import (
    ExactOracleBackend,
    LlmBackend,
    LlmConfig,
    SimParams,
    SimulatedBackend,
    llm_backend,
    simulated_backend,
)
from .benchmarks import ARCHETYPES, BENCHMARKS
from .compiler import (
    CompilabilityReport,
    assign_backend,
    check_compilability,
    cognitive_load,
    compile_mas,
    decompose,
    internalize_topology,
)
from .cost import cost_mas, cost_sas, efficiency_check
from .errors import (
    AuthError,
    BackendFailure,
    DomainError,
    EmptyGroup,
    InsufficientPoints,
    MissingInput,
    NotCompilable,
    ParseError,
    RateLimited,
    SelectionParseFailure,
    SkillabError,
    SpecError,
    TransportError,
    ZeroVariance,
)
from .execution import mas_execute, sas_execute
from .fitting import (
    FitResult,
    eval_law,
    fit_law,
    fit_quality,
    interference_index,
)
from .harness import (
    ConditionSummary,
    ExperimentConfig,
    RecordSink,
    TrialRecord,
    accuracy,
    condition_size,
    load_records,
    make_backend,
    preset,
    read_summary_csv,
    run_experiment,
    write_summary_csv,
)
from .prompts import (
    SkillGroup,
    build_flat_prompt,
    build_fused_prompt,
    build_stage1_prompt,
    build_stage2_prompt,
    parse_selection,
)
from .report import build_plot_data, build_report, collect_inputs, write_report
from .selection import (
    SelectionOutcome,
    flat_select,
    group_confusability,
    group_naive_domain,
    hier_select,
    validate_grouping,
)
from .similarity import jaccard, mean_pairwise
from .synthlib import (
    gen_competitors,
    gen_grouped,
    gen_library,
    gen_tasks,
    sample_tasks,
)
from .types import (
    SCHEMA_VERSION,
    AgentSpec,
    CostReport,
    ExecutionTrace,
    MASSpec,
    Protocol,
    Skill,
    SkillBackend,
    SkillLibrary,
    SkillMeta,
    TaskInstance,
    TraceStep,
    library_from_dict,
    library_to_dict,
    mas_from_dict,
    mas_to_dict,
    task_from_dict,
    task_to_dict,
    tasks_from_dict,
    tasks_to_dict,
)

__all__ = [
    "ARCHETYPES",
    "AgentSpec",
    "AuthError",
    "BENCHMARKS",
    "BackendFailure",
    "CompilabilityReport",
    "ConditionSummary",
    "CostReport",
    "DomainError",
    "EmptyGroup",
    "ExactOracleBackend",
    "ExecutionTrace",
    "ExperimentConfig",
    "FitResult",
    "InsufficientPoints",
    "LlmBackend",
    "LlmConfig",
    "MASSpec",
    "MissingInput",
    "NotCompilable",
    "ParseError",
    "Protocol",
    "RateLimited",
    "RecordSink",
    "SCHEMA_VERSION",
    "SelectionOutcome",
    "SelectionParseFailure",
    "SimParams",
    "SimulatedBackend",
    "Skill",
    "SkillBackend",
    "SkillGroup",
    "SkillLibrary",
    "SkillMeta",
    "SkillabError",
    "SpecError",
    "TaskInstance",
    "TraceStep",
    "TransportError",
    "TrialRecord",
    "ZeroVariance",
    "accuracy",
    "assign_backend",
    "build_flat_prompt",
    "build_fused_prompt",
    "build_plot_data",
    "build_report",
    "build_stage1_prompt",
    "build_stage2_prompt",
    "check_compilability",
    "cognitive_load",
    "collect_inputs",
    "compile_mas",
    "condition_size",
    "cost_mas",
    "cost_sas",
    "decompose",
    "efficiency_check",
    "eval_law",
    "fit_law",
    "fit_quality",
    "flat_select",
    "gen_competitors",
    "gen_grouped",
    "gen_library",
    "gen_tasks",
    "group_confusability",
    "group_naive_domain",
    "hier_select",
    "interference_index",
    "internalize_topology",
    "jaccard",
    "library_from_dict",
    "library_to_dict",
    "llm_backend",
    "load_records",
    "make_backend",
    "mas_execute",
    "mas_from_dict",
    "mas_to_dict",
    "mean_pairwise",
    "parse_selection",
    "preset",
    "read_summary_csv",
    "run_experiment",
    "sample_tasks",
    "sas_execute",
    "simulated_backend",
    "task_from_dict",
    "task_to_dict",
    "tasks_from_dict",
    "tasks_to_dict",
    "validate_grouping",
    "write_report",
    "write_summary_csv",
]

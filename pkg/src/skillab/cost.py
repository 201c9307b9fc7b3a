"""Token cost accounting for both execution styles.

A multi-agent trace pays for every emitted message plus a per-round
synchronization overhead. A skill-library trace pays for every round's
selection overhead plus that round's execution output. Both reduce to the
same report shape so traces can be compared directly.
"""

from __future__ import annotations

from .types import CostReport, ExecutionTrace


def cost_mas(trace: ExecutionTrace, c_sync: float = 0.0) -> CostReport:
    """Message tokens summed over rounds plus rounds * c_sync."""
    if c_sync < 0:
        raise ValueError("c_sync must be non-negative")
    total = trace.total_completion_tokens
    rounds = trace.rounds
    return CostReport(
        total_message_tokens=total,
        rounds=rounds,
        c_sync=c_sync,
        calls=rounds,
        c_value=total + rounds * c_sync,
    )


def cost_sas(trace: ExecutionTrace, select_cost_per_round: float = 0.0) -> CostReport:
    """Per round: selection overhead plus the executed skill's output tokens."""
    if select_cost_per_round < 0:
        raise ValueError("select_cost_per_round must be non-negative")
    total = trace.total_completion_tokens
    rounds = trace.rounds
    return CostReport(
        total_message_tokens=total,
        rounds=rounds,
        c_sync=select_cost_per_round,
        calls=rounds,
        c_value=total + rounds * select_cost_per_round,
    )


def efficiency_check(sas_report: CostReport, mas_report: CostReport) -> bool:
    """True iff the skill-library run is strictly cheaper."""
    return sas_report.c_value < mas_report.c_value

"""Exception types shared across the package."""

from __future__ import annotations


class SkillabError(Exception):
    """Base class for all package-specific errors."""


class SpecError(SkillabError):
    """A multi-agent spec violates a structural invariant."""


class UnknownAgent(SpecError):
    """An edge, init rule, or route referenced an agent id that does not exist."""


class NonExecutable(SkillabError):
    """The route rule belongs to the non-compilable class and cannot be run."""


class NonTerminating(SkillabError):
    """Execution hit the round cap without seeing the termination marker."""


class NotCompilable(SkillabError):
    """Compilation was attempted on a spec that fails the compilability check.

    Carries the full report so callers can surface the failing conditions.
    """

    def __init__(self, report):
        self.report = report
        reasons = ", ".join(report.failure_reasons) or "conditions failed"
        super().__init__(f"spec is not compilable: {reasons}")


class DecompositionParseFailure(SkillabError):
    """An LLM decomposition reply could not be parsed into capabilities."""


class UnknownTool(SkillabError):
    """A capability was matched to a tool that the owning agent does not have."""


class OrphanSkill(SkillabError):
    """A skill's owner does not appear in the spec being internalized."""


class EmptyLibrary(SkillabError):
    """An operation that needs at least one skill got an empty library."""


class EmptyTask(SkillabError):
    """A task query was empty or whitespace."""


class EmptyGrouping(SkillabError):
    """A grouping with no groups was passed to hierarchical selection."""


class SelectionParseFailure(SkillabError):
    """A selector reply named no usable skill and execution cannot proceed.

    Selectors themselves report parse failures as incorrect outcomes; this is
    raised only where a concrete skill is required to continue (stepwise
    execution).
    """


class PoolExhausted(SkillabError):
    """A generator was asked for more material than the catalog holds."""


class DomainError(SkillabError):
    """A law parameter is outside its mathematical domain."""


class InsufficientPoints(SkillabError):
    """Too few points to fit the law."""


class ZeroVariance(SkillabError):
    """Observed values are constant; R-squared is undefined."""


class TooSmall(SkillabError):
    """The interference index needs at least two skills."""


class EmptyGroup(SkillabError):
    """An accuracy aggregation received no records."""


class BackendFailure(SkillabError):
    """A selection backend failed irrecoverably for a condition."""


class AuthError(SkillabError):
    """The credential env var for the LLM backend is missing or empty."""


class RateLimited(SkillabError):
    """The LLM endpoint kept rate-limiting after all retries."""


class TransportError(SkillabError):
    """The LLM endpoint was unreachable or returned a non-retryable error."""


class ParseError(SkillabError):
    """An input file could not be parsed; message carries position info."""


class MissingInput(SkillabError):
    """A CLI input path is absent or holds no usable data."""

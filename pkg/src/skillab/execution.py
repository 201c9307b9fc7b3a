"""Round-based execution of agent graphs and skill libraries.

Both executors drive a SelectorBackend and return an ExecutionTrace whose
step count equals the number of execution calls made. Marker-based early
termination uses the spec's term marker; a round cap is honored wherever one
is declared.
"""

from __future__ import annotations

from .backends import SelectorBackend
from .errors import (
    EmptyLibrary,
    NonExecutable,
    NonTerminating,
    SelectionParseFailure,
    SpecError,
)
from .prompts import build_fused_prompt
from .types import (
    DEFAULT_TERM_MARKER,
    ExecutionTrace,
    MASSpec,
    ROUTE_BOUNDED_LOOP,
    ROUTE_DEBATE,
    ROUTE_LINEAR,
    ROUTE_PARALLEL,
    ROUTE_ROUTER,
    SkillLibrary,
    TERM_MARKER,
    TaskInstance,
    TraceStep,
)

EXEC_MAX_TOKENS = 512


def _history_block(query: str, history: list[tuple[str, str]]) -> list[str]:
    lines = [f"Task: {query}", "", "Shared history:"]
    if history:
        lines.extend(f"[{actor}] {output}" for actor, output in history)
    else:
        lines.append("(none)")
    return lines


def _agent_prompt(agent, query: str, history: list[tuple[str, str]]) -> str:
    lines = [f"You are {agent.id}. {agent.role}"]
    if agent.policy:
        lines.append(agent.policy)
    lines.append("")
    lines.extend(_history_block(query, history))
    lines += ["", "Provide this turn's output."]
    return "\n".join(lines)


def _skill_prompt(skill, query: str, history: list[tuple[str, str]]) -> str:
    lines = [f"You are executing skill {skill.id}: {skill.descriptor}"]
    if skill.policy:
        lines.append(skill.policy)
    lines.append("")
    lines.extend(_history_block(query, history))
    lines += ["", "Produce this skill's output."]
    return "\n".join(lines)


def topological_order(mas: MASSpec) -> list[str]:
    """Kahn's algorithm with declaration-order tie-breaking."""
    order = [a.id for a in mas.agents]
    indegree = {aid: 0 for aid in order}
    for _, dst in mas.edges:
        indegree[dst] += 1
    ready = [aid for aid in order if indegree[aid] == 0]
    out: list[str] = []
    while ready:
        current = ready.pop(0)
        out.append(current)
        for nxt in mas.successors(current):
            indegree[nxt] -= 1
            if indegree[nxt] == 0:
                ready.append(nxt)
        ready.sort(key=order.index)
    if len(out) != len(order):
        raise SpecError("agent graph has a cycle; no topological order exists")
    return out


def mas_execute(mas: MASSpec, task: TaskInstance, backend: SelectorBackend) -> ExecutionTrace:
    """Run the agent graph serially under its declared protocol."""
    proto = mas.protocol
    if proto.route_rule in (ROUTE_PARALLEL, ROUTE_DEBATE):
        raise NonExecutable(
            f"route rule {proto.route_rule!r} is classified, never executed"
        )
    query = task.query.strip()
    marker = proto.term_marker or DEFAULT_TERM_MARKER
    history: list[tuple[str, str]] = []
    steps: list[TraceStep] = []
    saw_marker = False

    def run_turn(agent_id: str) -> str:
        agent = mas.agent(agent_id)
        prompt = _agent_prompt(agent, query, history)
        result = backend.complete(prompt, max_tokens=EXEC_MAX_TOKENS)
        steps.append(
            TraceStep(
                actor=agent.id,
                output=result.raw,
                prompt_tokens=result.prompt_tokens,
                completion_tokens=result.completion_tokens,
                latency_ms=result.latency_ms,
            )
        )
        history.append((agent.id, result.raw))
        return result.raw

    if proto.route_rule == ROUTE_ROUTER:
        plan = topological_order(mas)
        if proto.max_rounds is not None:
            plan = plan[: proto.max_rounds]
        for agent_id in plan:
            output = run_turn(agent_id)
            if output.startswith(marker):
                saw_marker = True
                break
    else:
        current = mas.init_agent.id
        rounds = 0
        while True:
            if proto.max_rounds is not None and rounds >= proto.max_rounds:
                break
            output = run_turn(current)
            rounds += 1
            if output.startswith(marker):
                saw_marker = True
                break
            nxt = mas.successors(current)
            if proto.route_rule == ROUTE_LINEAR and len(nxt) > 1:
                raise SpecError(
                    f"linear-order routing needs at most one edge out of {current!r}"
                )
            if not nxt:
                break
            current = nxt[0]

    if proto.term_rule == TERM_MARKER and not saw_marker:
        if proto.route_rule == ROUTE_BOUNDED_LOOP or (
            proto.max_rounds is not None and len(steps) >= proto.max_rounds
        ):
            raise NonTerminating(
                f"hit the {proto.max_rounds}-round cap without the "
                f"{marker!r} marker"
            )
    return ExecutionTrace(steps=tuple(steps))


def sas_execute(
    library: SkillLibrary,
    task: TaskInstance,
    backend: SelectorBackend,
    selector=None,
    mode: str = "stepwise",
    max_rounds: int | None = None,
    term_marker: str = DEFAULT_TERM_MARKER,
) -> ExecutionTrace:
    """Run a skill library as a single agent.

    stepwise: each round picks a skill through the selector (default: flat
    strict selection) and executes it with one backend call; stops on the
    term marker or after max_rounds rounds (default: one round per skill).
    fused: a single backend call over the fused prompt covering every skill.
    """
    if len(library) == 0:
        raise EmptyLibrary("cannot execute an empty library")
    if mode not in ("stepwise", "fused"):
        raise ValueError(f"unknown execution mode {mode!r}")
    query = task.query.strip()

    if mode == "fused":
        prompt = build_fused_prompt(library, task)
        result = backend.complete(prompt, max_tokens=2 * EXEC_MAX_TOKENS)
        step = TraceStep(
            actor="fused",
            output=result.raw,
            prompt_tokens=result.prompt_tokens,
            completion_tokens=result.completion_tokens,
            latency_ms=result.latency_ms,
        )
        return ExecutionTrace(steps=(step,))

    if selector is None:
        from .selection import flat_select

        selector = flat_select
    cap = max_rounds if max_rounds is not None else len(library)
    history: list[tuple[str, str]] = []
    steps: list[TraceStep] = []
    for _ in range(cap):
        outcome = selector(task, library, backend)
        if outcome.selected is None:
            raise SelectionParseFailure(
                f"selector produced no usable skill for task {task.id!r}"
            )
        skill = library.by_id(outcome.selected)
        prompt = _skill_prompt(skill, query, history)
        result = backend.complete(prompt, max_tokens=EXEC_MAX_TOKENS)
        steps.append(
            TraceStep(
                actor=skill.id,
                output=result.raw,
                prompt_tokens=result.prompt_tokens,
                completion_tokens=result.completion_tokens,
                latency_ms=result.latency_ms,
            )
        )
        history.append((skill.id, result.raw))
        if result.raw.startswith(term_marker):
            break
    return ExecutionTrace(steps=tuple(steps))

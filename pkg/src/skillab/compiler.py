"""Compile agent graphs into skill libraries.

Three passes: decompose each agent's role into named capabilities, assign
each capability an execution backend (internal reasoning or one of the
agent's tools), then internalize the communication topology by appending a
handoff constraint to a skill's policy for every downstream agent it feeds.

Compilation is gated on a structural check with three conditions:
serializable communication, shared history, and a homogeneous model
backbone. Specs that need true parallelism, private state, adversarial
objectives, mixed models, or an uncovered cycle are reported as not
compilable with machine-readable reasons.
"""

from __future__ import annotations

import dataclasses
import re
from dataclasses import dataclass

from . import similarity
from .errors import (
    DecompositionParseFailure,
    NotCompilable,
    OrphanSkill,
    UnknownTool,
)
from .execution import topological_order
from .prompts import build_fused_prompt  # re-exported: part of this surface
from .types import (
    AgentSpec,
    MASSpec,
    ROUTE_BOUNDED_LOOP,
    ROUTE_DEBATE,
    ROUTE_PARALLEL,
    SCHEMA_VERSION,
    Skill,
    SkillBackend,
    SkillLibrary,
    whitespace_tokens,
)

__all__ = [
    "Capability",
    "CompilabilityReport",
    "check_compilability",
    "decompose",
    "assign_backend",
    "internalize_topology",
    "compile_mas",
    "cognitive_load",
    "build_fused_prompt",
]

REASON_PARALLEL = "parallel_sampling"
REASON_PRIVATE = "private_info"
REASON_ADVERSARIAL = "adversarial"
REASON_HETEROGENEOUS = "heterogeneous"
REASON_UNBOUNDED_CYCLE = "unbounded_cycle"

HANDOFF_TEMPLATE = "Your output will be consumed by: {names}. Emit fields they expect."

_CAPABILITY_LINE = re.compile(r"^\s*CAPABILITY:\s*(.+)$")
_TOOL_SUFFIX = re.compile(r"\s*\[tool:\s*([^\]]+)\]\s*$")


@dataclass(frozen=True)
class Capability:
    """An atomic function extracted from an agent's role text."""

    name: str
    description: str
    owner: str
    matched_tool: str | None = None


@dataclass(frozen=True)
class CompilabilityReport:
    """Outcome of the structural compilability check."""

    c1_serializable: bool
    c2_shared_history: bool
    c3_homogeneous: bool
    failure_reasons: tuple[str, ...]

    @property
    def compilable(self) -> bool:
        return (
            self.c1_serializable
            and self.c2_shared_history
            and self.c3_homogeneous
            and not self.failure_reasons
        )

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "compilable": self.compilable,
            "conditions": {
                "serializable_communication": self.c1_serializable,
                "shared_history": self.c2_shared_history,
                "homogeneous_backbone": self.c3_homogeneous,
            },
            "failure_reasons": list(self.failure_reasons),
        }


def _has_cycle(mas: MASSpec) -> bool:
    color: dict[str, int] = {a.id: 0 for a in mas.agents}

    def visit(node: str) -> bool:
        color[node] = 1
        for nxt in mas.successors(node):
            if color[nxt] == 1:
                return True
            if color[nxt] == 0 and visit(nxt):
                return True
        color[node] = 2
        return False

    return any(color[a.id] == 0 and visit(a.id) for a in mas.agents)


def check_compilability(mas: MASSpec) -> CompilabilityReport:
    """Decide whether the spec can be folded into a single-agent library."""
    route = mas.protocol.route_rule
    cyclic = _has_cycle(mas)

    c1 = (not cyclic) or route == ROUTE_BOUNDED_LOOP
    c2 = not any(a.private_state for a in mas.agents)
    c3 = len({a.model_id for a in mas.agents}) == 1

    reasons: list[str] = []
    if route == ROUTE_PARALLEL:
        reasons.append(REASON_PARALLEL)
    if route == ROUTE_DEBATE or any(a.adversarial for a in mas.agents):
        reasons.append(REASON_ADVERSARIAL)
    if not c2:
        reasons.append(REASON_PRIVATE)
    if not c3:
        reasons.append(REASON_HETEROGENEOUS)
    if cyclic and route not in (ROUTE_BOUNDED_LOOP, ROUTE_DEBATE):
        reasons.append(REASON_UNBOUNDED_CYCLE)

    return CompilabilityReport(
        c1_serializable=c1,
        c2_shared_history=c2,
        c3_homogeneous=c3,
        failure_reasons=tuple(reasons),
    )


def _slug(name: str) -> str:
    out = re.sub(r"[^a-z0-9]+", "_", name.lower()).strip("_")
    return out or "skill"


def _match_tool(text: str, tools: tuple[str, ...]) -> str | None:
    """Best token-overlap match between a capability and the agent's tools."""
    cap_tokens = similarity.tokens(text)
    best: str | None = None
    best_score = 0
    for tool in tools:
        words = [w for w in re.split(r"[_\-\s]+", tool.lower()) if w]
        score = sum(1 for w in words if w in cap_tokens)
        if score > best_score:
            best, best_score = tool, score
    return best


def _parse_capability(body: str, agent: AgentSpec) -> Capability:
    explicit_tool = None
    match = _TOOL_SUFFIX.search(body)
    if match:
        explicit_tool = match.group(1).strip()
        body = body[: match.start()].rstrip()
    name, sep, description = body.partition(": ")
    if not sep:
        name, description = body, body
    name = name.strip()
    description = description.strip()
    tool = explicit_tool or _match_tool(description, agent.tools)
    return Capability(
        name=name,
        description=description,
        owner=agent.id,
        matched_tool=tool,
    )


LLM_DECOMPOSE_PROMPT = (
    "You are analyzing an agent's role description to extract its atomic "
    "capabilities.\n\nRole: {role}\n\nList every capability, one per line, "
    'each formatted as "- name: description". Output only the list.'
)


def decompose(agent: AgentSpec, mode: str = "rule", backend=None) -> list[Capability]:
    """Extract the agent's capabilities from its role text.

    rule: take explicit "CAPABILITY: name: description" annotation lines
    (with an optional "[tool: x]" suffix); without annotations the whole role
    is one capability named after the agent.
    llm: ask the backend for a bulleted list and parse it.
    """
    if mode == "rule":
        caps: list[Capability] = []
        for line in agent.role.splitlines():
            match = _CAPABILITY_LINE.match(line)
            if match:
                caps.append(_parse_capability(match.group(1).strip(), agent))
        if caps:
            return caps
        description = " ".join(agent.role.split())
        tool = _match_tool(description, agent.tools)
        return [
            Capability(
                name=agent.id,
                description=description,
                owner=agent.id,
                matched_tool=tool,
            )
        ]
    if mode == "llm":
        if backend is None:
            raise ValueError("llm decomposition requires a backend")
        prompt = LLM_DECOMPOSE_PROMPT.format(role=agent.role)
        raw = backend.complete(prompt, max_tokens=256).raw
        caps = []
        for line in raw.splitlines():
            stripped = line.strip()
            if stripped.startswith(("- ", "* ")):
                caps.append(_parse_capability(stripped[2:].strip(), agent))
        if not caps:
            raise DecompositionParseFailure(
                f"no bulleted capabilities in reply for agent {agent.id!r}"
            )
        return caps
    raise ValueError(f"unknown decomposition mode {mode!r}")


def assign_backend(cap: Capability, tools: tuple[str, ...]) -> Skill:
    """Turn a capability into a skill with an execution backend.

    A capability matched to one of the owner's declared tools becomes an
    external skill; everything else runs on internal reasoning.
    """
    if cap.matched_tool is not None:
        if cap.matched_tool not in tools:
            raise UnknownTool(
                f"capability {cap.name!r} matched tool {cap.matched_tool!r} "
                "which the agent does not declare"
            )
        backend = SkillBackend.external(cap.matched_tool)
        policy = (
            f"Acting in the {cap.owner} role. Call the {cap.matched_tool} tool "
            f"to accomplish: {cap.description}. Build the tool input from the "
            "shared task history and report the tool's result."
        )
    else:
        backend = SkillBackend.internal()
        policy = (
            f"Acting in the {cap.owner} role. Carry out this capability with "
            f"internal reasoning: {cap.description}. Use the shared task "
            "history as input and state your result plainly."
        )
    return Skill(
        id=_slug(cap.name),
        descriptor=f"{cap.name}: {cap.description}",
        policy=policy,
        backend=backend,
        owner=cap.owner,
    )


def internalize_topology(skills: list[Skill], mas: MASSpec) -> list[Skill]:
    """Fold the edge structure into skill policies.

    For every downstream agent of a skill's owner, append one handoff
    constraint naming the skills that agent contributed. Descriptors and
    backends are never touched.
    """
    known = {a.id for a in mas.agents}
    by_owner: dict[str, list[Skill]] = {}
    for skill in skills:
        if skill.owner is None or skill.owner not in known:
            raise OrphanSkill(
                f"skill {skill.id!r} has owner {skill.owner!r} outside the spec"
            )
        by_owner.setdefault(skill.owner, []).append(skill)

    out: list[Skill] = []
    for skill in skills:
        constraints: list[str] = []
        for downstream in mas.successors(skill.owner):
            downstream_skills = by_owner.get(downstream, [])
            if not downstream_skills:
                continue
            names = ", ".join(s.name for s in downstream_skills)
            constraints.append(HANDOFF_TEMPLATE.format(names=names))
        if constraints:
            policy = "\n".join([skill.policy, *constraints]) if skill.policy else "\n".join(constraints)
            out.append(
                dataclasses.replace(
                    skill,
                    policy=policy,
                    handoff=tuple(constraints),
                )
            )
        else:
            out.append(skill)
    return out


def _agent_order(mas: MASSpec) -> list[str]:
    if _has_cycle(mas):
        return [a.id for a in mas.agents]
    return topological_order(mas)


def compile_mas(mas: MASSpec, mode: str = "rule", backend=None) -> SkillLibrary:
    """Full pipeline: check, decompose, assign backends, internalize.

    Skills appear in agent execution order (topological when acyclic,
    declaration order otherwise) with capabilities in annotation order.
    Rule mode is fully deterministic.
    """
    report = check_compilability(mas)
    if not report.compilable:
        raise NotCompilable(report)

    skills: list[Skill] = []
    seen_ids: set[str] = set()
    for agent_id in _agent_order(mas):
        agent = mas.agent(agent_id)
        for cap in decompose(agent, mode=mode, backend=backend):
            skill = assign_backend(cap, agent.tools)
            base_id = skill.id
            k = 2
            while skill.id in seen_ids:
                skill = dataclasses.replace(skill, id=f"{base_id}_{k}")
                k += 1
            seen_ids.add(skill.id)
            skills.append(skill)

    skills = internalize_topology(skills, mas)
    return SkillLibrary(skills=tuple(skills))


def cognitive_load(library: SkillLibrary, w1: float = 1.0, w2: float = 0.0) -> float:
    """Weighted burden of a library on its selector.

    The first term counts whitespace tokens across everything presented at
    selection time (descriptors and policies); the second weighs mean
    pairwise descriptor similarity. Additive over disjoint libraries when
    w2 = 0.
    """
    presented = sum(
        whitespace_tokens(s.descriptor) + whitespace_tokens(s.policy)
        for s in library
    )
    interference = similarity.mean_pairwise([s.descriptor for s in library])
    return w1 * presented + w2 * interference

"""Domain types and their JSON representations.

Two worlds meet here: declarative multi-agent specs (agents, edges, a routing
protocol) and the single-agent skill libraries they compile into. Both sides
serialize to stable JSON schemas carrying a schema_version field, and traces
of either execution style serialize to JSONL, one step per line.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import ParseError, SpecError, UnknownAgent

SCHEMA_VERSION = 1

# Route rules an agent graph can declare.
ROUTE_LINEAR = "linear-order"
ROUTE_ROUTER = "router-dispatch"
ROUTE_BOUNDED_LOOP = "bounded-loop"
ROUTE_PARALLEL = "parallel-fanout"
ROUTE_DEBATE = "debate"
ROUTE_RULES = (
    ROUTE_LINEAR,
    ROUTE_ROUTER,
    ROUTE_BOUNDED_LOOP,
    ROUTE_PARALLEL,
    ROUTE_DEBATE,
)

# Termination rules. "marker" stops when an output starts with the marker and
# treats hitting the round cap as a failure; "max-rounds" treats the cap as
# normal completion. A round cap is always required for cyclic routes.
TERM_MAX_ROUNDS = "max-rounds"
TERM_MARKER = "marker"
TERM_RULES = (TERM_MAX_ROUNDS, TERM_MARKER)

DEFAULT_TERM_MARKER = "FINAL:"

BACKEND_INTERNAL = "internal"
BACKEND_EXTERNAL = "external"


def whitespace_tokens(text: str) -> int:
    """Token count used for every cost and length measurement."""
    return len(text.split())


@dataclass(frozen=True)
class AgentSpec:
    """One agent in a multi-agent spec."""

    id: str
    role: str
    policy: str = ""
    tools: tuple[str, ...] = ()
    private_state: bool = False
    adversarial: bool = False
    model_id: str = "default"

    def __post_init__(self):
        if not self.id or not self.id.strip():
            raise SpecError("agent id must be non-empty")
        if not self.role or not self.role.strip():
            raise SpecError(f"agent {self.id!r} has an empty role")


@dataclass(frozen=True)
class Protocol:
    """Init, route, and termination rules for a multi-agent spec."""

    init_rule: str = "first"
    route_rule: str = ROUTE_LINEAR
    max_rounds: int | None = None
    term_rule: str = TERM_MAX_ROUNDS
    term_marker: str = DEFAULT_TERM_MARKER

    def __post_init__(self):
        if self.route_rule not in ROUTE_RULES:
            raise SpecError(f"unknown route rule {self.route_rule!r}")
        if self.term_rule not in TERM_RULES:
            raise SpecError(f"unknown term rule {self.term_rule!r}")
        if self.max_rounds is not None and self.max_rounds < 1:
            raise SpecError("max_rounds must be >= 1 when set")
        if self.route_rule == ROUTE_BOUNDED_LOOP and self.max_rounds is None:
            raise SpecError("bounded-loop routing requires max_rounds")
        if self.term_rule == TERM_MARKER and self.max_rounds is None:
            raise SpecError("marker termination requires a max_rounds cap")


@dataclass(frozen=True)
class MASSpec:
    """A declarative multi-agent system: agents, directed edges, protocol."""

    agents: tuple[AgentSpec, ...]
    edges: tuple[tuple[str, str], ...] = ()
    protocol: Protocol = field(default_factory=Protocol)

    def __post_init__(self):
        if not self.agents:
            raise SpecError("spec needs at least one agent")
        ids = [a.id for a in self.agents]
        if len(set(ids)) != len(ids):
            raise SpecError("agent ids must be unique")
        known = set(ids)
        for src, dst in self.edges:
            if src not in known:
                raise UnknownAgent(f"edge source {src!r} is not an agent")
            if dst not in known:
                raise UnknownAgent(f"edge target {dst!r} is not an agent")
        init = self.protocol.init_rule
        if init != "first" and init not in known:
            raise UnknownAgent(f"init rule names unknown agent {init!r}")

    def agent(self, agent_id: str) -> AgentSpec:
        for a in self.agents:
            if a.id == agent_id:
                return a
        raise UnknownAgent(f"no agent {agent_id!r}")

    def successors(self, agent_id: str) -> tuple[str, ...]:
        return tuple(dst for src, dst in self.edges if src == agent_id)

    @property
    def init_agent(self) -> AgentSpec:
        if self.protocol.init_rule == "first":
            return self.agents[0]
        return self.agent(self.protocol.init_rule)


@dataclass(frozen=True)
class SkillBackend:
    """Execution backing for a skill: internal reasoning or a named tool."""

    kind: str
    tool: str | None = None

    def __post_init__(self):
        if self.kind not in (BACKEND_INTERNAL, BACKEND_EXTERNAL):
            raise SpecError(f"unknown backend kind {self.kind!r}")
        if self.kind == BACKEND_EXTERNAL and not self.tool:
            raise SpecError("external backend requires a tool name")
        if self.kind == BACKEND_INTERNAL and self.tool is not None:
            raise SpecError("internal backend must not name a tool")

    @classmethod
    def internal(cls) -> "SkillBackend":
        return cls(BACKEND_INTERNAL)

    @classmethod
    def external(cls, tool: str) -> "SkillBackend":
        return cls(BACKEND_EXTERNAL, tool)


@dataclass(frozen=True)
class Skill:
    """One entry in a skill library.

    descriptor is the short "Name: what it does" string shown at selection
    time; policy is the full how-to prompt; handoff holds any downstream
    output constraints injected when an agent topology was internalized.
    """

    id: str
    descriptor: str
    policy: str = ""
    backend: SkillBackend = field(default_factory=SkillBackend.internal)
    owner: str | None = None
    handoff: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.id or not self.id.strip():
            raise SpecError("skill id must be non-empty")
        if not self.descriptor or not self.descriptor.strip():
            raise SpecError(f"skill {self.id!r} has an empty descriptor")

    @property
    def name(self) -> str:
        """The part of the descriptor before the first ': ' separator."""
        head, sep, _ = self.descriptor.partition(": ")
        return head if sep else self.descriptor


@dataclass(frozen=True)
class SkillMeta:
    """Generator-side metadata attached to a skill inside a library."""

    domain: str = ""
    subtype: str = ""
    group_id: str | None = None
    complexity: str = ""
    is_base: bool = True


@dataclass(frozen=True)
class SkillLibrary:
    """An ordered set of skills plus optional per-skill metadata.

    groups maps a group label to its human-readable description; generators
    fill it so hierarchical selection can show category descriptions.
    """

    skills: tuple[Skill, ...]
    meta: dict[str, SkillMeta] = field(default_factory=dict)
    groups: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        ids = [s.id for s in self.skills]
        if len(set(ids)) != len(ids):
            raise SpecError("skill ids must be unique within a library")
        descriptors = [s.descriptor for s in self.skills]
        if len(set(descriptors)) != len(descriptors):
            raise SpecError("skill descriptors must be unique within a library")
        for skill_id in self.meta:
            if skill_id not in set(ids):
                raise SpecError(f"metadata for unknown skill {skill_id!r}")
        self._check_groups()

    def _check_groups(self):
        by_group: dict[str, list[SkillMeta]] = {}
        for m in self.meta.values():
            if m.group_id is not None:
                by_group.setdefault(m.group_id, []).append(m)
        for gid, members in by_group.items():
            domains = {m.domain for m in members}
            if len(domains) > 1:
                raise SpecError(f"group {gid!r} spans domains {sorted(domains)}")
            bases = sum(1 for m in members if m.is_base)
            if bases != 1:
                raise SpecError(f"group {gid!r} has {bases} base skills, wants 1")

    def __len__(self) -> int:
        return len(self.skills)

    def __iter__(self):
        return iter(self.skills)

    def ids(self) -> tuple[str, ...]:
        return tuple(s.id for s in self.skills)

    def by_id(self, skill_id: str) -> Skill:
        for s in self.skills:
            if s.id == skill_id:
                return s
        raise KeyError(skill_id)

    def meta_for(self, skill_id: str) -> SkillMeta:
        return self.meta.get(skill_id, SkillMeta())


@dataclass(frozen=True)
class TaskInstance:
    """A single query with the skill that is its ground truth."""

    id: str
    query: str
    truth: str
    domain: str = ""
    seed: int = 0

    def __post_init__(self):
        if not self.query or not self.query.strip():
            raise SpecError(f"task {self.id!r} has an empty query")


@dataclass(frozen=True)
class TraceStep:
    """One executed turn: which actor or skill ran and what it produced."""

    actor: str
    output: str
    prompt_tokens: int
    completion_tokens: int
    latency_ms: float = 0.0

    def __post_init__(self):
        if self.prompt_tokens < 0 or self.completion_tokens < 0:
            raise SpecError("token counts must be non-negative")


@dataclass(frozen=True)
class ExecutionTrace:
    """Ordered steps of one execution; rounds equals the step count."""

    steps: tuple[TraceStep, ...]

    @property
    def rounds(self) -> int:
        return len(self.steps)

    @property
    def total_completion_tokens(self) -> int:
        return sum(s.completion_tokens for s in self.steps)

    @property
    def final_output(self) -> str:
        return self.steps[-1].output if self.steps else ""


@dataclass(frozen=True)
class CostReport:
    """Token cost accounting for one trace.

    c_sync is the per-round overhead term: synchronization cost for
    multi-agent traces, selection cost for skill-library traces.
    """

    total_message_tokens: int
    rounds: int
    c_sync: float
    calls: int
    c_value: float


# ---------------------------------------------------------------------------
# JSON schemas
# ---------------------------------------------------------------------------


def mas_to_dict(mas: MASSpec) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "agents": [
            {
                "id": a.id,
                "role": a.role,
                "policy": a.policy,
                "tools": list(a.tools),
                "private_state": a.private_state,
                "adversarial": a.adversarial,
                "model_id": a.model_id,
            }
            for a in mas.agents
        ],
        "edges": [list(e) for e in mas.edges],
        "protocol": {
            "init_rule": mas.protocol.init_rule,
            "route_rule": mas.protocol.route_rule,
            "max_rounds": mas.protocol.max_rounds,
            "term_rule": mas.protocol.term_rule,
            "term_marker": mas.protocol.term_marker,
        },
    }


def mas_from_dict(data: dict) -> MASSpec:
    try:
        agents = tuple(
            AgentSpec(
                id=a["id"],
                role=a["role"],
                policy=a.get("policy", ""),
                tools=tuple(a.get("tools", ())),
                private_state=bool(a.get("private_state", False)),
                adversarial=bool(a.get("adversarial", False)),
                model_id=a.get("model_id", "default"),
            )
            for a in data["agents"]
        )
        proto = data.get("protocol", {})
        protocol = Protocol(
            init_rule=proto.get("init_rule", "first"),
            route_rule=proto.get("route_rule", ROUTE_LINEAR),
            max_rounds=proto.get("max_rounds"),
            term_rule=proto.get("term_rule", TERM_MAX_ROUNDS),
            term_marker=proto.get("term_marker", DEFAULT_TERM_MARKER),
        )
        edges = tuple((e[0], e[1]) for e in data.get("edges", ()))
    except (KeyError, IndexError, TypeError) as exc:
        raise ParseError(f"malformed multi-agent spec: {exc!r}") from exc
    return MASSpec(agents=agents, edges=edges, protocol=protocol)


def library_to_dict(library: SkillLibrary) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "skills": [
            {
                "id": s.id,
                "descriptor": s.descriptor,
                "policy": s.policy,
                "backend": (
                    {"kind": s.backend.kind}
                    if s.backend.kind == BACKEND_INTERNAL
                    else {"kind": s.backend.kind, "tool": s.backend.tool}
                ),
                "owner": s.owner,
                "handoff": list(s.handoff),
            }
            for s in library.skills
        ],
        "metadata": {
            skill_id: {
                "domain": m.domain,
                "subtype": m.subtype,
                "group_id": m.group_id,
                "complexity": m.complexity,
                "is_base": m.is_base,
            }
            for skill_id, m in library.meta.items()
        },
        "groups": dict(library.groups),
    }


def library_from_dict(data: dict) -> SkillLibrary:
    try:
        skills = []
        for s in data["skills"]:
            b = s.get("backend", {"kind": BACKEND_INTERNAL})
            backend = (
                SkillBackend.external(b["tool"])
                if b.get("kind") == BACKEND_EXTERNAL
                else SkillBackend.internal()
            )
            skills.append(
                Skill(
                    id=s["id"],
                    descriptor=s["descriptor"],
                    policy=s.get("policy", ""),
                    backend=backend,
                    owner=s.get("owner"),
                    handoff=tuple(s.get("handoff", ())),
                )
            )
        meta = {
            skill_id: SkillMeta(
                domain=m.get("domain", ""),
                subtype=m.get("subtype", ""),
                group_id=m.get("group_id"),
                complexity=m.get("complexity", ""),
                is_base=bool(m.get("is_base", True)),
            )
            for skill_id, m in data.get("metadata", {}).items()
        }
        groups = dict(data.get("groups", {}))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed skill library: {exc!r}") from exc
    return SkillLibrary(skills=tuple(skills), meta=meta, groups=groups)


def task_to_dict(task: TaskInstance) -> dict:
    return {
        "id": task.id,
        "query": task.query,
        "truth": task.truth,
        "domain": task.domain,
        "seed": task.seed,
    }


def task_from_dict(data: dict) -> TaskInstance:
    try:
        return TaskInstance(
            id=data["id"],
            query=data["query"],
            truth=data["truth"],
            domain=data.get("domain", ""),
            seed=int(data.get("seed", 0)),
        )
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed task: {exc!r}") from exc


def tasks_to_dict(tasks: list[TaskInstance]) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "tasks": [task_to_dict(t) for t in tasks],
    }


def tasks_from_dict(data: dict) -> list[TaskInstance]:
    try:
        raw = data["tasks"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed task file: {exc!r}") from exc
    return [task_from_dict(t) for t in raw]


def trace_to_jsonl(trace: ExecutionTrace) -> str:
    """One JSON object per step, trailing newline included when non-empty."""
    lines = []
    for step in trace.steps:
        lines.append(
            json.dumps(
                {
                    "schema_version": SCHEMA_VERSION,
                    "actor": step.actor,
                    "output": step.output,
                    "prompt_tokens": step.prompt_tokens,
                    "completion_tokens": step.completion_tokens,
                    "latency_ms": step.latency_ms,
                },
                sort_keys=True,
            )
        )
    return "".join(line + "\n" for line in lines)


def trace_from_jsonl(text: str) -> ExecutionTrace:
    steps = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
            steps.append(
                TraceStep(
                    actor=obj["actor"],
                    output=obj["output"],
                    prompt_tokens=int(obj["prompt_tokens"]),
                    completion_tokens=int(obj["completion_tokens"]),
                    latency_ms=float(obj.get("latency_ms", 0.0)),
                )
            )
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad trace line {lineno}: {exc!r}") from exc
    return ExecutionTrace(steps=tuple(steps))


def dump_json(data: dict, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2)
        fh.write("\n")


def load_json(path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno} col {exc.colno}: {exc.msg}") from exc
    except FileNotFoundError as exc:
        raise ParseError(f"{path}: file not found") from exc

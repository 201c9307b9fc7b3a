"""Skill selection strategies.

Two ways to pick a skill for a task: a flat single-stage prompt over the
whole library, or a hierarchical two-stage walk that first picks a category
and then a skill inside it. The grouping builders for the second style live
here as well: one groups by generator domain, the other clusters descriptors
by similarity so that confusable skills land in the same category and stop
competing across categories.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import similarity
from .backends import SelectorBackend
from .catalog import DOMAIN_DESCRIPTIONS
from .errors import DomainError, EmptyGrouping, OrphanSkill, SpecError
from .prompts import (
    SkillGroup,
    build_flat_prompt,
    build_stage1_prompt,
    build_stage2_prompt,
    parse_selection,
)
from .types import SkillLibrary, TaskInstance


@dataclass(frozen=True)
class StageRecord:
    """One selection call: which stage ran, over how many candidates."""

    stage: str
    candidates: int
    raw: str


@dataclass(frozen=True)
class SelectionOutcome:
    """Result of selecting a skill for one task.

    selected is None when the reply did not parse to a candidate. tokens and
    latency_ms are summed over every call the strategy made.
    """

    selected: str | None
    correct: bool
    stage_trace: tuple[StageRecord, ...]
    tokens: int
    latency_ms: float

    @property
    def calls(self) -> int:
        return len(self.stage_trace)


FLAT_MAX_TOKENS = 50
STAGE_MAX_TOKENS = 100


def flat_select(
    task: TaskInstance,
    library: SkillLibrary,
    backend: SelectorBackend,
    mode: str = "strict",
    include_policies: bool = False,
) -> SelectionOutcome:
    """Single-stage selection over the entire library."""
    ids = library.ids()
    if task.truth not in set(ids):
        raise OrphanSkill(f"task {task.id!r} wants {task.truth!r}, not in library")
    prompt = build_flat_prompt(task, library, include_policies=include_policies)
    result = backend.complete(prompt, max_tokens=FLAT_MAX_TOKENS)
    selected = parse_selection(result.raw, list(ids), mode)
    return SelectionOutcome(
        selected=selected,
        correct=selected == task.truth,
        stage_trace=(StageRecord("flat", len(ids), result.raw),),
        tokens=result.prompt_tokens + result.completion_tokens,
        latency_ms=result.latency_ms,
    )


def validate_grouping(
    library: SkillLibrary, grouping: tuple[SkillGroup, ...]
) -> None:
    """Check that a grouping partitions the library; raises otherwise."""
    if not grouping:
        raise EmptyGrouping("grouping has no groups")
    labels = [g.label for g in grouping]
    if len(set(labels)) != len(labels):
        raise SpecError("group labels must be unique within a grouping")
    known = set(library.ids())
    seen: set[str] = set()
    for group in grouping:
        for sid in group.skill_ids:
            if sid not in known:
                raise SpecError(f"group {group.label!r} names unknown skill {sid!r}")
            if sid in seen:
                raise SpecError(f"skill {sid!r} appears in more than one group")
            seen.add(sid)
    missing = known - seen
    if missing:
        raise SpecError(
            f"grouping misses {len(missing)} skills (e.g. {sorted(missing)[0]!r})"
        )


def hier_select(
    task: TaskInstance,
    library: SkillLibrary,
    grouping: tuple[SkillGroup, ...],
    backend: SelectorBackend,
    mode: str = "strict",
) -> SelectionOutcome:
    """Two-stage selection: pick a category, then a skill inside it.

    A first-stage reply that parses to no category ends the trial after one
    call with selected=None. A wrong but valid category still runs the
    second stage; the outcome then counts two calls and cannot be correct
    because the truth is not among the candidates shown.
    """
    grouping = tuple(grouping)
    validate_grouping(library, grouping)
    if task.truth not in set(library.ids()):
        raise OrphanSkill(f"task {task.id!r} wants {task.truth!r}, not in library")

    first = backend.complete(
        build_stage1_prompt(task, grouping), max_tokens=STAGE_MAX_TOKENS
    )
    labels = [g.label for g in grouping]
    chosen = parse_selection(first.raw, labels, mode)
    trace = [StageRecord("category", len(labels), first.raw)]
    tokens = first.prompt_tokens + first.completion_tokens
    latency = first.latency_ms
    if chosen is None:
        return SelectionOutcome(None, False, tuple(trace), tokens, latency)

    group = next(g for g in grouping if g.label == chosen)
    second = backend.complete(
        build_stage2_prompt(task, library, group), max_tokens=STAGE_MAX_TOKENS
    )
    selected = parse_selection(second.raw, list(group.skill_ids), mode)
    trace.append(StageRecord("skill", len(group.skill_ids), second.raw))
    tokens += second.prompt_tokens + second.completion_tokens
    latency += second.latency_ms
    return SelectionOutcome(
        selected=selected,
        correct=selected == task.truth,
        stage_trace=tuple(trace),
        tokens=tokens,
        latency_ms=latency,
    )


# ---------------------------------------------------------------------------
# Grouping builders
# ---------------------------------------------------------------------------


def group_naive_domain(library: SkillLibrary) -> tuple[SkillGroup, ...]:
    """One group per generator domain, in order of first appearance.

    Skills without domain metadata are omitted, so the result partitions the
    library only when every skill carries a domain.
    """
    order: list[str] = []
    members: dict[str, list[str]] = {}
    for skill in library:
        domain = library.meta_for(skill.id).domain
        if not domain:
            continue
        if domain not in members:
            members[domain] = []
            order.append(domain)
        members[domain].append(skill.id)
    return tuple(
        SkillGroup(
            label=domain,
            description=DOMAIN_DESCRIPTIONS.get(
                domain, f"Skills in the {domain} domain"
            ),
            skill_ids=tuple(members[domain]),
        )
        for domain in order
    )


def _cluster_label(library: SkillLibrary, member_ids: list[str]) -> str:
    metas = [library.meta_for(sid) for sid in member_ids]
    group_ids = {m.group_id for m in metas}
    if len(group_ids) == 1 and None not in group_ids:
        return next(iter(group_ids))
    domains = {m.domain for m in metas}
    if len(domains) == 1 and "" not in domains:
        return next(iter(domains))
    return library.by_id(member_ids[0]).name


def group_confusability(
    library: SkillLibrary, threshold: float = 0.6
) -> tuple[SkillGroup, ...]:
    """Cluster skills whose descriptors overlap at or above the threshold.

    Single-link: two skills share a cluster whenever a chain of pairwise
    similarities >= threshold connects them. Iteration runs in skill-id
    order; clusters are ordered by their first member and keep members in
    id order. A cluster is labeled by its members' shared group id, else
    their shared domain, else the first member's name; collisions get a
    numeric suffix so labels stay unique.
    """
    if not 0.0 <= threshold <= 1.0:
        raise DomainError(f"threshold must be in [0, 1], got {threshold}")

    skills = sorted(library, key=lambda s: s.id)
    token_sets = [similarity.tokens(s.descriptor) for s in skills]
    parent = list(range(len(skills)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(skills)):
        for j in range(i + 1, len(skills)):
            union_size = len(token_sets[i] | token_sets[j])
            inter_size = len(token_sets[i] & token_sets[j])
            sim = 1.0 if union_size == 0 else inter_size / union_size
            if sim >= threshold:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)

    clusters: dict[int, list[int]] = {}
    for i in range(len(skills)):
        clusters.setdefault(find(i), []).append(i)

    groups = []
    used_labels: set[str] = set()
    for root in sorted(clusters):
        member_ids = [skills[i].id for i in clusters[root]]
        base_label = _cluster_label(library, member_ids)
        label = base_label
        suffix = 2
        while label in used_labels:
            label = f"{base_label} ({suffix})"
            suffix += 1
        used_labels.add(label)
        description = library.groups.get(base_label) or DOMAIN_DESCRIPTIONS.get(
            base_label, f"Skills related to {base_label}"
        )
        groups.append(
            SkillGroup(
                label=label, description=description, skill_ids=tuple(member_ids)
            )
        )
    return tuple(groups)

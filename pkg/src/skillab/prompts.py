"""Selection prompt construction and reply parsing.

The prompt layouts are byte-stable: given the same library and task, the
builders return identical strings. Offline backends rely on this and parse
the prompts back; the formats below are therefore the single source of truth
for both directions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyGrouping, EmptyLibrary, EmptyTask
from .types import SkillLibrary, TaskInstance

FLAT_HEADER = "Select the most appropriate skill for the given task."
FLAT_LIST_HEADER = "Available Skills:"
FLAT_FOOTER = (
    "Respond with ONLY the skill ID (e.g., skill_001). "
    "Do not include any explanation."
)

STAGE1_HEADER = "Select the most appropriate skill category for this task."
STAGE1_LIST_HEADER = "Available Categories:"
STAGE1_FOOTER = "Respond with ONLY the category name."

STAGE2_HEADER = "Select the most appropriate skill for this task."
STAGE2_FOOTER = "Respond with ONLY the skill ID."

# Separator between a descriptor and its appended policy when prompts carry
# full policies. Policies are flattened to one line so the one-item-per-line
# list shape survives.
POLICY_SEP = " | policy: "


@dataclass(frozen=True)
class SkillGroup:
    """A labeled subset of a library used for two-stage selection."""

    label: str
    description: str
    skill_ids: tuple[str, ...]

    def __post_init__(self):
        if not self.label or ": " in self.label:
            raise ValueError(f"bad group label {self.label!r}")
        if not self.skill_ids:
            raise ValueError(f"group {self.label!r} is empty")


def _check_task(task: TaskInstance) -> str:
    query = task.query.strip()
    if not query:
        raise EmptyTask(f"task {task.id!r} has an empty query")
    return query


def _flatten(text: str) -> str:
    return " ".join(text.split())


def build_flat_prompt(
    task: TaskInstance,
    library: SkillLibrary,
    include_policies: bool = False,
) -> str:
    """Single-stage prompt listing every skill in library order."""
    if len(library) == 0:
        raise EmptyLibrary("cannot build a selection prompt over zero skills")
    query = _check_task(task)
    lines = [FLAT_HEADER, "", f"Task: {query}", "", FLAT_LIST_HEADER]
    for skill in library:
        entry = f"- {skill.id}: {skill.descriptor}"
        if include_policies:
            entry += POLICY_SEP + _flatten(skill.policy)
        lines.append(entry)
    lines += ["", FLAT_FOOTER]
    return "\n".join(lines)


def build_stage1_prompt(task: TaskInstance, grouping: tuple[SkillGroup, ...]) -> str:
    """First-stage prompt listing category names with descriptions."""
    if not grouping:
        raise EmptyGrouping("cannot build a category prompt over zero groups")
    query = _check_task(task)
    lines = [STAGE1_HEADER, "", f"Task: {query}", "", STAGE1_LIST_HEADER]
    for group in grouping:
        lines.append(f"- {group.label}: {group.description}")
    lines += ["", STAGE1_FOOTER]
    return "\n".join(lines)


def build_stage2_prompt(
    task: TaskInstance,
    library: SkillLibrary,
    group: SkillGroup,
) -> str:
    """Second-stage prompt listing only the chosen category's skills."""
    query = _check_task(task)
    lines = [
        STAGE2_HEADER,
        "",
        f"Task: {query}",
        "",
        f'Available Skills in "{group.label}" category:',
    ]
    for skill_id in group.skill_ids:
        skill = library.by_id(skill_id)
        lines.append(f"- {skill.id}: {skill.descriptor}")
    lines += ["", STAGE2_FOOTER]
    return "\n".join(lines)


def build_stage_prompts(
    task: TaskInstance,
    library: SkillLibrary,
    grouping: tuple[SkillGroup, ...],
):
    """Stage-1 prompt plus a builder for the stage-2 prompt of a category."""
    stage1 = build_stage1_prompt(task, grouping)
    by_label = {g.label: g for g in grouping}

    def stage2_for(label: str) -> str:
        return build_stage2_prompt(task, library, by_label[label])

    return stage1, stage2_for


FUSED_HEADER = (
    "You are a single agent equipped with the skills below. "
    "Complete the task by working through every skill section in order."
)
FUSED_FOOTER = (
    "Emit one section per skill, in the order listed above, each starting "
    "with its bracketed header on its own line. After the last section, "
    "give the final result on a line starting with \"FINAL:\"."
)


def section_marker(skill_id: str) -> str:
    """Uppercase bracketed section header for one skill."""
    return f"[{skill_id.upper()}]"


def build_fused_prompt(library: SkillLibrary, task: TaskInstance) -> str:
    """One prompt that folds an entire library into a single call.

    Lists each skill as an uppercase bracketed section followed by its full
    policy (handoff constraints included), in library order. Byte-stable for
    identical inputs.
    """
    if len(library) == 0:
        raise EmptyLibrary("cannot build a fused prompt over zero skills")
    query = _check_task(task)
    lines = [FUSED_HEADER, "", f"Task: {query}", "", "Skills:"]
    for skill in library:
        lines += ["", section_marker(skill.id), f"{skill.descriptor}"]
        if skill.policy:
            lines.append(skill.policy)
    lines += ["", FUSED_FOOTER]
    return "\n".join(lines)


def parse_selection(raw: str, candidates: list[str], mode: str = "strict") -> str | None:
    """Map a raw reply onto one candidate, or None when no unique match.

    strict: the trimmed reply must equal a candidate exactly.
    lenient: exact match first, then a unique candidate appearing as a
    substring; zero or multiple substring hits fail.
    """
    if mode not in ("strict", "lenient"):
        raise ValueError(f"unknown parse mode {mode!r}")
    trimmed = raw.strip()
    if trimmed in candidates:
        return trimmed
    if mode == "strict":
        return None
    hits = [c for c in candidates if c in raw]
    if len(hits) == 1:
        return hits[0]
    return None


# ---------------------------------------------------------------------------
# Prompt re-parsing for offline backends
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParsedPrompt:
    """Structured view of a selection prompt.

    kind is "skill" for flat and second-stage prompts (the reply is a skill
    id) and "category" for first-stage prompts. candidates holds (key, text)
    pairs in display order where text excludes any appended policy.
    """

    kind: str
    query: str
    candidates: tuple[tuple[str, str], ...]
    category: str | None = None


def parse_prompt(prompt: str) -> ParsedPrompt:
    """Invert a prompt built by this module; raises ValueError otherwise."""
    query = None
    kind = None
    category = None
    candidates: list[tuple[str, str]] = []
    in_list = False
    for line in prompt.splitlines():
        if line.startswith("Task: "):
            query = line[len("Task: "):]
        elif line == FLAT_LIST_HEADER:
            kind, in_list = "skill", True
        elif line == STAGE1_LIST_HEADER:
            kind, in_list = "category", True
        elif line.startswith('Available Skills in "') and line.endswith('" category:'):
            kind, in_list = "skill", True
            category = line[len('Available Skills in "'):-len('" category:')]
        elif in_list and line.startswith("- "):
            item = line[2:]
            key, sep, text = item.partition(": ")
            if not sep:
                raise ValueError(f"unparseable candidate line: {line!r}")
            text, _, _ = text.partition(POLICY_SEP)
            candidates.append((key, text))
        elif in_list and not line.strip():
            in_list = False
    if query is None or kind is None or not candidates:
        raise ValueError("prompt does not follow a known selection layout")
    return ParsedPrompt(
        kind=kind,
        query=query,
        candidates=tuple(candidates),
        category=category,
    )

"""Synthetic skill library and task generators.

All generators are deterministic given their seed. Randomness is derived
from string-keyed random.Random instances so the same (seed, purpose, key)
triple always yields the same stream regardless of call order. Task streams
are keyed per category and source template, which means two libraries that
share a skill also share that skill's task queries for a given seed. Paired
experimental conditions therefore see common tasks wherever their libraries
overlap.
"""

from __future__ import annotations

import math
import random

from . import catalog
from .errors import DomainError, PoolExhausted
from .types import Skill, SkillBackend, SkillLibrary, SkillMeta, TaskInstance

SIMILARITY_MODES = ("low", "mixed", "high")

MAX_TEMPLATES = len(catalog.ALL_TEMPLATES)
MAX_CATEGORIES = len(catalog.CATEGORIES)
MAX_GROUP_SIZE = 3  # one base plus two competitors per category


def _rng(*parts) -> random.Random:
    """A Random seeded from the string form of the given parts.

    String seeding hashes via sha512 internally, so streams are stable
    across processes and interpreter runs.
    """

    return random.Random("|".join(str(p) for p in parts))


def _fill(spec: catalog.QuerySpec, rng: random.Random) -> str:
    values: dict[str, object] = {}
    for slot in spec.slots:
        name, kind = slot[0], slot[1]
        if kind == "int":
            values[name] = rng.randint(slot[2], slot[3])
        elif kind == "dec":
            values[name] = f"{rng.randint(slot[2] * 10, slot[3] * 10) / 10:.1f}"
        elif kind == "dec2":
            values[name] = f"{rng.randint(slot[2] * 100, slot[3] * 100) / 100:.2f}"
        elif kind == "choice":
            values[name] = rng.choice(catalog.POOLS[slot[2]])
        else:
            raise ValueError(f"unknown slot kind: {kind!r}")
    return spec.pattern.format(**values)


# ---------------------------------------------------------------------------
# Policy text
# ---------------------------------------------------------------------------


def policy_text(category, complexity: str = "simple") -> str:
    """Render the policy for a category at the given complexity tier.

    Tiers scale the instruction length roughly as 30, 100, and 300
    whitespace tokens. The text is a pure function of its arguments.
    """

    if isinstance(category, str):
        try:
            cat = catalog.CATEGORY_BY_NAME[category]
        except KeyError:
            raise DomainError(f"unknown category: {category!r}") from None
    else:
        cat = category
    kit = cat.policy
    if complexity == "simple":
        return (
            f"Read {kit.inputs}, then {kit.action}, and return {kit.output} "
            "as one clear answer with no extra commentary beyond the result itself."
        )
    if complexity == "medium":
        return (
            f"You are a {kit.role} assistant handling exactly one task at a time.\n"
            f"1. Parse {kit.inputs} from the task statement.\n"
            f"2. Validate the input: {kit.checks}.\n"
            f"3. Then {kit.action}.\n"
            f"4. Prepare {kit.output} in a clean and direct form.\n"
            f"5. Return only {kit.output} with no commentary and no restatement "
            "of the task.\n"
            f"If {kit.failure}, say so explicitly instead of guessing an answer."
        )
    if complexity == "complex":
        return (
            f"You are a {kit.role} specialist executing exactly one skill for "
            "the current task. Follow every section of this protocol in order "
            "and do not skip steps even when the task looks trivial.\n"
            "\n"
            "Input Processing:\n"
            f"- Read the entire task statement once before acting and identify "
            f"{kit.inputs}.\n"
            "- Normalize whatever you extracted: trim stray whitespace, resolve "
            "obvious formatting artifacts, and keep items in their original "
            "order unless the task says otherwise.\n"
            "- If the task mixes relevant and irrelevant material, set the "
            "irrelevant parts aside explicitly rather than letting them color "
            "the result.\n"
            "\n"
            "Execution:\n"
            f"- Core step: {kit.action}.\n"
            "- Work in small explicit steps and keep intermediate results "
            "visible to yourself instead of jumping to the end.\n"
            f"- Quality gate: {kit.checks}.\n"
            "- When two readings of the task are possible, choose the one that "
            "keeps the requested operation simple and note the assumption you "
            "made.\n"
            "\n"
            "Output Requirements:\n"
            f"- Return {kit.output} as the final line of the reply.\n"
            "- Keep the answer self-contained so a reader understands it "
            "without re-reading the task.\n"
            "- Do not include apologies, meta commentary, or any restatement "
            "of these instructions.\n"
            "- Match any format the task explicitly requests before falling "
            "back to the defaults above.\n"
            "\n"
            "Error Handling:\n"
            f"- If {kit.failure}, stop and report the problem in one short "
            "sentence instead of fabricating an answer.\n"
            "- If the task contains contradictory requirements, point out the "
            "contradiction and answer only the well-defined part.\n"
            "- Never invent data that was not present in the task statement.\n"
            "\n"
            "Quality Standards:\n"
            f"- Double-check {kit.output} against the task before finishing.\n"
            "- Prefer exact values over approximations unless the task asks "
            "for an estimate.\n"
            "- Keep the reply free of filler words and hedging."
        )
    raise DomainError(f"unknown complexity tier: {complexity!r}")


# ---------------------------------------------------------------------------
# Library generators
# ---------------------------------------------------------------------------


def _skill_from_template(index: int, cat: catalog.Category,
                         tpl: catalog.Template, complexity: str) -> tuple[Skill, SkillMeta]:
    skill = Skill(
        id=f"skill_{index:03d}",
        descriptor=tpl.descriptor,
        policy=policy_text(cat, complexity),
        backend=SkillBackend.internal(),
    )
    meta = SkillMeta(
        domain=cat.domain,
        subtype=cat.name,
        group_id=None,
        complexity=complexity,
        is_base=True,
    )
    return skill, meta


def gen_library(size: int, similarity: str = "mixed",
                complexity: str = "simple", seed: int = 0) -> SkillLibrary:
    """Sample a library of distinct template skills.

    similarity picks the template pool: "low" round-robins across all eight
    domains for maximal spread, "high" draws only from the three most
    mutually confusable domains, and "mixed" samples uniformly from the
    whole catalog.
    """

    if size < 1:
        raise DomainError(f"library size must be positive, got {size}")
    if similarity not in SIMILARITY_MODES:
        raise DomainError(f"unknown similarity mode: {similarity!r}")
    if complexity not in catalog.COMPLEXITY_TIERS:
        raise DomainError(f"unknown complexity tier: {complexity!r}")

    rng = _rng(seed, "library", similarity)
    if similarity == "low":
        per_domain = {
            d: rng.sample(
                [(c, t) for dd, c, t in catalog.ALL_TEMPLATES if dd == d],
                k=len(catalog.TEMPLATES_BY_DOMAIN[d]),
            )
            for d in catalog.DOMAINS
        }
        limit = MAX_TEMPLATES
        if size > limit:
            raise PoolExhausted(f"requested {size} skills but only {limit} templates exist")
        picks = [
            per_domain[catalog.DOMAINS[i % len(catalog.DOMAINS)]][i // len(catalog.DOMAINS)]
            for i in range(size)
        ]
    elif similarity == "high":
        pool = [
            (c, t) for d, c, t in catalog.ALL_TEMPLATES
            if d in catalog.HIGH_SIMILARITY_DOMAINS
        ]
        if size > len(pool):
            raise PoolExhausted(
                f"requested {size} skills but the high-similarity pool holds {len(pool)}"
            )
        picks = rng.sample(pool, size)
    else:
        pool = [(c, t) for _, c, t in catalog.ALL_TEMPLATES]
        if size > len(pool):
            raise PoolExhausted(f"requested {size} skills but only {len(pool)} templates exist")
        picks = rng.sample(pool, size)

    skills, meta = [], {}
    for i, (cat, tpl) in enumerate(picks, start=1):
        skill, m = _skill_from_template(i, cat, tpl, complexity)
        skills.append(skill)
        meta[skill.id] = m
    return SkillLibrary(skills=tuple(skills), meta=meta, groups={})


def _category_sample(n: int, seed: int) -> list[catalog.Category]:
    order = _rng(seed, "competitors").sample(list(catalog.CATEGORIES), MAX_CATEGORIES)
    return order[:n]


def _build_grouped(n_categories: int, members_per: int, seed: int,
                   grouped: bool) -> SkillLibrary:
    if n_categories < 1:
        raise DomainError(f"need at least one category, got {n_categories}")
    if n_categories > MAX_CATEGORIES:
        raise PoolExhausted(
            f"requested {n_categories} categories but only {MAX_CATEGORIES} exist"
        )
    if members_per < 1:
        raise DomainError(f"group size must be positive, got {members_per}")
    if members_per > MAX_GROUP_SIZE:
        raise PoolExhausted(
            f"requested {members_per} members per group but only "
            f"{MAX_GROUP_SIZE} are defined per category"
        )

    skills, meta, groups = [], {}, {}
    index = 0
    for cat in _category_sample(n_categories, seed):
        members = (cat.base,) + cat.competitors[: members_per - 1]
        if grouped:
            groups[cat.group_label] = cat.group_description
        for j, (name, capability) in enumerate(members):
            index += 1
            skill = Skill(
                id=f"skill_{index:03d}",
                descriptor=f"{name}: {capability}",
                policy=policy_text(cat, "simple"),
                backend=SkillBackend.internal(),
            )
            skills.append(skill)
            meta[skill.id] = SkillMeta(
                domain=cat.domain,
                subtype=cat.name,
                group_id=cat.group_label if grouped else None,
                complexity="simple",
                is_base=(j == 0),
            )
    return SkillLibrary(skills=tuple(skills), meta=meta, groups=groups)


def gen_competitors(n_base: int, n_comp: int, seed: int = 0) -> SkillLibrary:
    """A library of n_base base skills plus n_comp look-alikes per base.

    The sampled categories depend only on the seed and n_base prefix order,
    so raising n_comp grows each family without changing which bases are
    present. With n_comp of zero the library is flat and ungrouped.
    """

    if n_comp < 0 or n_comp > MAX_GROUP_SIZE - 1:
        raise DomainError(
            f"competitors per base must be between 0 and {MAX_GROUP_SIZE - 1}, got {n_comp}"
        )
    return _build_grouped(n_base, n_comp + 1, seed, grouped=n_comp > 0)


def gen_grouped(n_groups: int, group_size: int = 3, seed: int = 0) -> SkillLibrary:
    """A grouped library for hierarchical selection experiments."""

    return _build_grouped(n_groups, group_size, seed, grouped=True)


# ---------------------------------------------------------------------------
# Task generation
# ---------------------------------------------------------------------------


def _eligible_skills(library: SkillLibrary) -> list[Skill]:
    if any(library.meta[s.id].group_id for s in library.skills):
        return [s for s in library.skills if library.meta[s.id].is_base]
    return list(library.skills)


def _query_source(library: SkillLibrary, skill: Skill):
    entry = catalog.TEMPLATE_BY_DESCRIPTOR.get(skill.descriptor)
    if entry is not None:
        cat, tpl = entry
        return cat, tpl.query, tpl.name
    meta = library.meta.get(skill.id)
    if meta is not None and meta.subtype in catalog.CATEGORY_BY_NAME:
        cat = catalog.CATEGORY_BY_NAME[meta.subtype]
        return cat, cat.templates[0].query, f"{cat.name}-base"
    raise DomainError(
        f"skill {skill.id} has no catalog task source; "
        "task generation needs a generated library"
    )


def gen_tasks(library: SkillLibrary, per_skill: int, seed: int = 0) -> list[TaskInstance]:
    """Deterministic task instances targeting each eligible skill.

    In grouped libraries only base skills receive tasks; competitors exist
    solely to be confused with them. Task streams are keyed by category and
    template, not by library composition, so overlapping libraries share
    task queries under the same seed.
    """

    if per_skill < 1:
        raise DomainError(f"tasks per skill must be positive, got {per_skill}")
    tasks = []
    for skill in _eligible_skills(library):
        cat, qspec, qkey = _query_source(library, skill)
        rng = _rng(seed, "task", cat.domain, cat.name, qkey)
        for j in range(per_skill):
            tasks.append(
                TaskInstance(
                    id=f"{skill.id}-t{j:03d}",
                    query=_fill(qspec, rng),
                    truth=skill.id,
                    domain=cat.domain,
                    seed=seed,
                )
            )
    return tasks


def sample_tasks(library: SkillLibrary, count: int, seed: int = 0) -> list[TaskInstance]:
    """Exactly count tasks spread evenly over the eligible skills.

    The sample is drawn from the per-skill task streams and kept in stream
    order, so two libraries with the same eligible skills receive the same
    task sample for a given seed and count.
    """

    if count < 1:
        raise DomainError(f"task count must be positive, got {count}")
    eligible = _eligible_skills(library)
    per_skill = math.ceil(count / len(eligible))
    full = gen_tasks(library, per_skill, seed)
    if count == len(full):
        return full
    order = sorted(_rng(seed, "sample", count).sample(range(len(full)), count))
    return [full[i] for i in order]

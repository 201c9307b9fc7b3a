from dataclasses import dataclass, field

import pytest

from skillab import (
    SimParams,
    Skill,
    SkillGroup,
    SkillLibrary,
    SkillMeta,
    TaskInstance,
    flat_select,
    gen_competitors,
    gen_library,
    gen_tasks,
    group_confusability,
    group_naive_domain,
    hier_select,
    validate_grouping,
)
from skillab.backends import CompletionResult, ExactOracleBackend, simulated_backend
from skillab.catalog import DOMAIN_DESCRIPTIONS
from skillab.errors import DomainError, EmptyGrouping, OrphanSkill, SpecError


@dataclass
class ScriptedBackend:
    """Replays canned replies and records every call it receives."""

    replies: list[str]
    seen: list[tuple[str, int]] = field(default_factory=list)

    def complete(self, prompt: str, max_tokens: int = 50) -> CompletionResult:
        reply = self.replies[len(self.seen)]
        self.seen.append((prompt, max_tokens))
        return CompletionResult(
            raw=reply, prompt_tokens=7, completion_tokens=3, latency_ms=1.5
        )


class TestFlatSelect:
    def test_outcome_fields(self, small_library, small_tasks):
        task = small_tasks[0]
        backend = ScriptedBackend([task.truth])
        outcome = flat_select(task, small_library, backend)
        assert outcome.correct and outcome.selected == task.truth
        assert outcome.calls == 1
        assert outcome.stage_trace[0].stage == "flat"
        assert outcome.stage_trace[0].candidates == len(small_library)
        assert outcome.tokens == 10
        assert outcome.latency_ms == pytest.approx(1.5)
        assert backend.seen[0][1] == 50

    def test_garbage_reply_counts_as_incorrect(self, small_library, small_tasks):
        backend = ScriptedBackend(["no idea, sorry"])
        outcome = flat_select(small_tasks[0], small_library, backend)
        assert outcome.selected is None and not outcome.correct
        assert outcome.calls == 1

    def test_orphan_truth_rejected(self, small_library):
        task = TaskInstance(id="t", query="do something", truth="skill_999")
        with pytest.raises(OrphanSkill):
            flat_select(task, small_library, ScriptedBackend(["skill_001"]))

    def test_include_policies_reaches_prompt(self, small_library, small_tasks):
        backend = ScriptedBackend([small_tasks[0].truth])
        flat_select(small_tasks[0], small_library, backend, include_policies=True)
        prompt = backend.seen[0][0]
        policy = small_library.skills[0].policy
        assert policy.split("\n")[0] in prompt


class TestHierSelect:
    def _grouping(self, library):
        return group_confusability(library, threshold=0.25)

    def test_oracle_is_perfect(self, grouped_library):
        grouping = self._grouping(grouped_library)
        tasks = gen_tasks(grouped_library, 2, seed=3)
        backend = ExactOracleBackend(grouped_library, tasks, grouping=grouping)
        for task in tasks:
            outcome = hier_select(task, grouped_library, grouping, backend)
            assert outcome.correct
            assert outcome.calls == 2
            assert outcome.stage_trace[0].stage == "category"
            assert outcome.stage_trace[0].candidates == len(grouping)
            chosen = next(
                g for g in grouping if g.label == outcome.stage_trace[0].raw
            )
            assert outcome.stage_trace[1].candidates == len(chosen.skill_ids)

    def test_stage1_garbage_short_circuits(self, grouped_library):
        grouping = self._grouping(grouped_library)
        tasks = gen_tasks(grouped_library, 1, seed=3)
        backend = ScriptedBackend(["not a category"])
        outcome = hier_select(tasks[0], grouped_library, grouping, backend)
        assert outcome.selected is None and not outcome.correct
        assert outcome.calls == 1
        assert len(backend.seen) == 1

    def test_wrong_category_still_runs_stage2(self, grouped_library):
        grouping = self._grouping(grouped_library)
        task = gen_tasks(grouped_library, 1, seed=3)[0]
        truth_label = next(
            g.label for g in grouping if task.truth in g.skill_ids
        )
        wrong = next(g for g in grouping if g.label != truth_label)
        backend = ScriptedBackend([wrong.label, task.truth])
        outcome = hier_select(task, grouped_library, grouping, backend)
        assert outcome.calls == 2
        assert not outcome.correct
        # The truth is not among the wrong group's candidates, so even a
        # verbatim-truth reply cannot parse to a selection.
        assert outcome.selected is None
        assert all(tokens == 100 for _, tokens in backend.seen)

    def test_correct_is_exactly_stage_conjunction(self, grouped_library):
        grouping = self._grouping(grouped_library)
        tasks = gen_tasks(grouped_library, 3, seed=11)
        params = SimParams(alpha=0.9, kappa=4.0, gamma=1.5, seed=11)
        backend = simulated_backend(params, grouped_library, tasks, grouping=grouping)
        label_of = {
            sid: g.label for g in grouping for sid in g.skill_ids
        }
        saw_failure = saw_success = False
        for task in tasks:
            outcome = hier_select(task, grouped_library, grouping, backend)
            stage1_hit = outcome.stage_trace[0].raw == label_of[task.truth]
            stage2_hit = (
                outcome.calls == 2 and outcome.stage_trace[1].raw == task.truth
            )
            assert outcome.correct == (stage1_hit and stage2_hit)
            saw_failure |= not outcome.correct
            saw_success |= outcome.correct
        assert saw_failure and saw_success

    def test_single_group_equals_flat_over_group(self, small_library):
        tasks = gen_tasks(small_library, 1, seed=7)
        grouping = (
            SkillGroup(
                label="Everything",
                description="All available skills.",
                skill_ids=small_library.ids(),
            ),
        )
        params = SimParams(alpha=0.8, kappa=6.0, gamma=1.5, seed=7)
        for task in tasks:
            backend = simulated_backend(params, small_library, tasks, grouping=grouping)
            hier = hier_select(task, small_library, grouping, backend)
            flat = flat_select(task, small_library, backend)
            assert hier.stage_trace[0].candidates == 1
            assert hier.selected == flat.selected
            assert hier.correct == flat.correct

    def test_orphan_truth_rejected(self, grouped_library):
        grouping = self._grouping(grouped_library)
        task = TaskInstance(id="t", query="q", truth="skill_999")
        with pytest.raises(OrphanSkill):
            hier_select(task, grouped_library, grouping, ScriptedBackend(["x"]))


class TestValidateGrouping:
    def test_partitions_pass(self, small_library, grouped_library):
        validate_grouping(small_library, group_naive_domain(small_library))
        validate_grouping(
            grouped_library, group_confusability(grouped_library, threshold=0.25)
        )

    def test_empty_grouping(self, small_library):
        with pytest.raises(EmptyGrouping):
            validate_grouping(small_library, ())

    def _single(self, library, label="Everything"):
        return SkillGroup(
            label=label, description="d", skill_ids=library.ids()
        )

    def test_duplicate_labels(self, small_library):
        half = len(small_library) // 2
        ids = small_library.ids()
        grouping = (
            SkillGroup("Same", "d", ids[:half]),
            SkillGroup("Same", "d", ids[half:]),
        )
        with pytest.raises(SpecError, match="unique"):
            validate_grouping(small_library, grouping)

    def test_unknown_skill(self, small_library):
        grouping = (
            self._single(small_library),
            SkillGroup("Extra", "d", ("skill_999",)),
        )
        with pytest.raises(SpecError, match="unknown skill"):
            validate_grouping(small_library, grouping)

    def test_duplicated_skill(self, small_library):
        ids = small_library.ids()
        grouping = (
            self._single(small_library),
            SkillGroup("Extra", "d", (ids[0],)),
        )
        with pytest.raises(SpecError, match="more than one group"):
            validate_grouping(small_library, grouping)

    def test_missing_skills(self, small_library):
        ids = small_library.ids()
        grouping = (SkillGroup("Partial", "d", ids[:-1]),)
        with pytest.raises(SpecError, match="misses"):
            validate_grouping(small_library, grouping)

    def test_hier_select_refuses_non_partition(self, small_library):
        ids = small_library.ids()
        grouping = (SkillGroup("Partial", "d", ids[:-1]),)
        task = TaskInstance(id="t", query="q", truth=ids[0])
        with pytest.raises(SpecError):
            hier_select(task, small_library, grouping, ScriptedBackend(["Partial"]))


class TestGroupNaiveDomain:
    def test_first_appearance_order_and_membership(self, small_library):
        expected_order = []
        expected_members = {}
        for skill in small_library:
            domain = small_library.meta_for(skill.id).domain
            if domain not in expected_members:
                expected_members[domain] = []
                expected_order.append(domain)
            expected_members[domain].append(skill.id)
        grouping = group_naive_domain(small_library)
        assert [g.label for g in grouping] == expected_order
        for group in grouping:
            assert list(group.skill_ids) == expected_members[group.label]
            assert group.description == DOMAIN_DESCRIPTIONS[group.label]
        validate_grouping(small_library, grouping)

    def test_skill_without_domain_is_omitted(self):
        library = SkillLibrary(
            skills=(
                Skill(id="skill_001", descriptor="Sum Numbers: Add numbers."),
                Skill(id="skill_002", descriptor="Rename Files: Rename files."),
            ),
            meta={"skill_001": SkillMeta(domain="mathematics")},
        )
        grouping = group_naive_domain(library)
        assert [g.label for g in grouping] == ["mathematics"]
        assert grouping[0].skill_ids == ("skill_001",)
        with pytest.raises(SpecError, match="misses"):
            validate_grouping(library, grouping)


class TestGroupConfusability:
    def test_threshold_domain(self, small_library):
        for bad in (-0.1, 1.0000001, 2.0):
            with pytest.raises(DomainError):
                group_confusability(small_library, threshold=bad)

    def test_cluster_counts_frozen(self):
        library = gen_library(120, "mixed", "simple", seed=5)
        assert len(group_confusability(library, threshold=0.25)) == 91
        assert len(group_confusability(library, threshold=0.6)) == 114

    def test_always_partitions(self, small_library):
        for threshold in (0.0, 0.3, 0.6, 1.0):
            grouping = group_confusability(small_library, threshold=threshold)
            validate_grouping(small_library, grouping)

    def test_distinct_descriptors_singletons_at_one(self, small_library):
        grouping = group_confusability(small_library, threshold=1.0)
        assert len(grouping) == len(small_library)
        assert all(len(g.skill_ids) == 1 for g in grouping)

    def test_zero_threshold_single_cluster(self, small_library):
        grouping = group_confusability(small_library, threshold=0.0)
        assert len(grouping) == 1
        # Mixed domains and no shared group force the name fallback label.
        first = small_library.skills[0]
        assert grouping[0].label == first.name
        assert grouping[0].description == f"Skills related to {first.name}"

    def test_paraphrases_chain_into_one_cluster(self):
        # Pairwise overlaps here are 0.3333, 0.2727 and 0.1667; at 0.25 the
        # first two links pull all three together single-link style, while
        # at 0.6 nothing connects.
        library = SkillLibrary(
            skills=(
                Skill(id="skill_001", descriptor="Add all numbers together and return the total."),
                Skill(id="skill_002", descriptor="Compute the total by adding all values together."),
                Skill(id="skill_003", descriptor="Sum up all the given numbers."),
            )
        )
        low = group_confusability(library, threshold=0.25)
        assert len(low) == 1
        assert set(low[0].skill_ids) == {"skill_001", "skill_002", "skill_003"}
        high = group_confusability(library, threshold=0.6)
        assert len(high) == 3

    def test_recovers_generator_groups(self):
        library = gen_competitors(6, 2, seed=9)
        grouping = group_confusability(library, threshold=0.25)
        expected = {}
        for skill in library:
            meta = library.meta_for(skill.id)
            expected.setdefault(meta.group_id, []).append(skill.id)
        got = sorted(sorted(g.skill_ids) for g in grouping)
        assert got == sorted(sorted(v) for v in expected.values())
        labels = {g.label for g in grouping}
        assert labels == set(expected.keys())
        for group in grouping:
            assert group.description == library.groups[group.label]

    def test_label_collisions_get_suffixes(self):
        library = gen_competitors(2, 1, seed=9)
        grouping = group_confusability(library, threshold=1.0)
        assert [g.label for g in grouping] == [
            "Markdown Formatting",
            "Markdown Formatting (2)",
            "JSON Conversion",
            "JSON Conversion (2)",
        ]
        # Suffixed clusters still describe the shared underlying group.
        assert grouping[1].description == library.groups["Markdown Formatting"]

    def test_deterministic(self, small_library):
        a = group_confusability(small_library, threshold=0.3)
        b = group_confusability(small_library, threshold=0.3)
        assert a == b

from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skillab import (
    build_flat_prompt,
    build_fused_prompt,
    build_stage1_prompt,
    build_stage2_prompt,
    gen_grouped,
    gen_tasks,
    group_confusability,
    parse_selection,
)
from skillab.errors import EmptyGrouping, EmptyLibrary, EmptyTask
from skillab.prompts import POLICY_SEP, SkillGroup, parse_prompt
from skillab.types import SkillLibrary, TaskInstance

GOLDEN = Path(__file__).parent / "golden"


def _fixture():
    library = gen_grouped(2, seed=0)
    task = gen_tasks(library, 1, seed=0)[0]
    grouping = group_confusability(library, threshold=0.25)
    truth_group = next(g for g in grouping if task.truth in g.skill_ids)
    return library, task, grouping, truth_group


class TestGoldenPrompts:
    def test_flat_prompt_matches_golden(self):
        library, task, _, _ = _fixture()
        expected = (GOLDEN / "flat_prompt.txt").read_text(encoding="utf-8")
        assert build_flat_prompt(task, library) == expected

    def test_flat_prompt_with_policies_matches_golden(self):
        library, task, _, _ = _fixture()
        expected = (GOLDEN / "flat_prompt_policies.txt").read_text(encoding="utf-8")
        assert build_flat_prompt(task, library, include_policies=True) == expected

    def test_stage1_prompt_matches_golden(self):
        _, task, grouping, _ = _fixture()
        expected = (GOLDEN / "stage1_prompt.txt").read_text(encoding="utf-8")
        assert build_stage1_prompt(task, grouping) == expected

    def test_stage2_prompt_matches_golden(self):
        library, task, _, truth_group = _fixture()
        expected = (GOLDEN / "stage2_prompt.txt").read_text(encoding="utf-8")
        assert build_stage2_prompt(task, library, truth_group) == expected

    def test_fused_prompt_matches_golden(self):
        library, task, _, _ = _fixture()
        expected = (GOLDEN / "fused_prompt.txt").read_text(encoding="utf-8")
        assert build_fused_prompt(library, task) == expected

    def test_instruction_lines_present(self):
        library, task, grouping, truth_group = _fixture()
        assert "Respond with ONLY the skill ID" in build_flat_prompt(task, library)
        assert "Respond with ONLY the category name." in build_stage1_prompt(
            task, grouping
        )
        assert "Respond with ONLY the skill ID." in build_stage2_prompt(
            task, library, truth_group
        )


class TestPromptShape:
    def test_one_candidate_per_line(self):
        library, task, _, _ = _fixture()
        prompt = build_flat_prompt(task, library, include_policies=True)
        entries = [l for l in prompt.splitlines() if l.startswith("- skill_")]
        assert len(entries) == len(library)
        assert all("\n" not in e for e in entries)

    def test_policies_are_flattened(self):
        library, task, _, _ = _fixture()
        prompt = build_flat_prompt(task, library, include_policies=True)
        for line in prompt.splitlines():
            if POLICY_SEP in line:
                policy_part = line.split(POLICY_SEP, 1)[1]
                assert "  " not in policy_part

    def test_empty_library_rejected(self):
        task = TaskInstance(id="t", query="Do a thing.", truth="s1")
        with pytest.raises(EmptyLibrary):
            build_flat_prompt(task, SkillLibrary(skills=()))

    def test_empty_grouping_rejected(self):
        task = TaskInstance(id="t", query="Do a thing.", truth="s1")
        with pytest.raises(EmptyGrouping):
            build_stage1_prompt(task, ())

    def test_blank_query_rejected(self):
        library, task, _, _ = _fixture()
        with pytest.raises(EmptyTask):
            # Bypass TaskInstance validation to exercise the prompt guard.
            blank = TaskInstance(id="t", query="x", truth=task.truth)
            object.__setattr__(blank, "query", "   ")
            build_flat_prompt(blank, library)


class TestSkillGroup:
    def test_rejects_label_with_separator(self):
        with pytest.raises(ValueError):
            SkillGroup(label="Bad: Label", description="d", skill_ids=("s1",))

    def test_rejects_empty_membership(self):
        with pytest.raises(ValueError):
            SkillGroup(label="Fine", description="d", skill_ids=())


class TestParseSelection:
    def test_strict_exact_match(self):
        assert parse_selection("skill_002", ["skill_001", "skill_002"]) == "skill_002"

    def test_strict_trims_whitespace(self):
        assert parse_selection("  skill_001 \n", ["skill_001"]) == "skill_001"

    def test_strict_rejects_extra_text(self):
        assert parse_selection("I pick skill_001", ["skill_001"]) is None

    def test_lenient_substring(self):
        raw = "The best option is skill_007 here."
        assert parse_selection(raw, ["skill_001", "skill_007"], "lenient") == "skill_007"

    def test_lenient_ambiguous_fails(self):
        raw = "Either skill_001 or skill_002."
        assert parse_selection(raw, ["skill_001", "skill_002"], "lenient") is None

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            parse_selection("x", ["x"], mode="fuzzy")

    @given(st.text(max_size=40))
    def test_strict_never_invents_candidates(self, raw):
        result = parse_selection(raw, ["skill_001", "skill_002"], "strict")
        assert result in (None, "skill_001", "skill_002")

    @given(st.sampled_from(["skill_001", "skill_002", "skill_003"]))
    def test_round_trip_through_echo(self, choice):
        candidates = ["skill_001", "skill_002", "skill_003"]
        assert parse_selection(choice, candidates, "strict") == choice
        assert parse_selection(f"answer: {choice}", candidates, "lenient") == choice


class TestParsePrompt:
    def test_flat_prompt_inverts(self):
        library, task, _, _ = _fixture()
        parsed = parse_prompt(build_flat_prompt(task, library, include_policies=True))
        assert parsed.kind == "skill"
        assert parsed.query == task.query
        assert [k for k, _ in parsed.candidates] == list(library.ids())
        # Policy text is stripped from candidate display text.
        assert all(POLICY_SEP not in t for _, t in parsed.candidates)

    def test_stage1_prompt_inverts(self):
        _, task, grouping, _ = _fixture()
        parsed = parse_prompt(build_stage1_prompt(task, grouping))
        assert parsed.kind == "category"
        assert [k for k, _ in parsed.candidates] == [g.label for g in grouping]

    def test_stage2_prompt_inverts(self):
        library, task, _, truth_group = _fixture()
        parsed = parse_prompt(build_stage2_prompt(task, library, truth_group))
        assert parsed.kind == "skill"
        assert parsed.category == truth_group.label
        assert [k for k, _ in parsed.candidates] == list(truth_group.skill_ids)

    def test_garbage_rejected(self):
        with pytest.raises(ValueError):
            parse_prompt("not a prompt at all")

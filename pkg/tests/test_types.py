import pytest

from skillab import (
    SCHEMA_VERSION,
    AgentSpec,
    MASSpec,
    ParseError,
    Skill,
    SkillBackend,
    SkillLibrary,
    SkillMeta,
    SpecError,
    TaskInstance,
    library_from_dict,
    library_to_dict,
    mas_from_dict,
    mas_to_dict,
    task_from_dict,
    task_to_dict,
    tasks_from_dict,
    tasks_to_dict,
)
from skillab.errors import UnknownAgent
from skillab.types import load_json


def _mas():
    return MASSpec(
        agents=(
            AgentSpec(id="solver", role="Solve the problem."),
            AgentSpec(id="checker", role="Check the solution.", tools=("calculator",)),
        ),
        edges=(("solver", "checker"),),
    )


class TestMASSpec:
    def test_requires_agents(self):
        with pytest.raises(SpecError):
            MASSpec(agents=())

    def test_rejects_duplicate_agent_ids(self):
        agent = AgentSpec(id="a", role="x")
        with pytest.raises(SpecError):
            MASSpec(agents=(agent, AgentSpec(id="a", role="y")))

    def test_rejects_unknown_edge_endpoints(self):
        agent = AgentSpec(id="a", role="x")
        with pytest.raises(UnknownAgent):
            MASSpec(agents=(agent,), edges=(("a", "ghost"),))

    def test_agent_lookup(self):
        mas = _mas()
        assert mas.agent("solver").role == "Solve the problem."
        with pytest.raises(UnknownAgent):
            mas.agent("nobody")

    def test_successors(self):
        assert _mas().successors("solver") == ("checker",)
        assert _mas().successors("checker") == ()

    def test_round_trip(self):
        mas = _mas()
        data = mas_to_dict(mas)
        assert data["schema_version"] == SCHEMA_VERSION
        assert mas_from_dict(data) == mas


class TestSkill:
    def test_name_is_descriptor_head(self):
        skill = Skill(id="s1", descriptor="Calculate Sum: Add numbers.")
        assert skill.name == "Calculate Sum"

    def test_name_without_separator_is_whole_descriptor(self):
        assert Skill(id="s1", descriptor="Standalone").name == "Standalone"

    def test_rejects_empty_descriptor(self):
        with pytest.raises(SpecError):
            Skill(id="s1", descriptor="   ")

    def test_backend_validation(self):
        with pytest.raises(SpecError):
            SkillBackend(kind="magic")
        with pytest.raises(SpecError):
            SkillBackend(kind="external")
        assert SkillBackend.external("calc").tool == "calc"
        assert SkillBackend.internal().tool is None


class TestSkillLibrary:
    def test_rejects_duplicate_ids(self):
        s = Skill(id="s1", descriptor="A: a")
        with pytest.raises(SpecError):
            SkillLibrary(skills=(s, Skill(id="s1", descriptor="B: b")))

    def test_rejects_duplicate_descriptors(self):
        with pytest.raises(SpecError):
            SkillLibrary(
                skills=(
                    Skill(id="s1", descriptor="A: a"),
                    Skill(id="s2", descriptor="A: a"),
                )
            )

    def test_rejects_metadata_for_unknown_skill(self):
        s = Skill(id="s1", descriptor="A: a")
        with pytest.raises(SpecError):
            SkillLibrary(skills=(s,), meta={"ghost": SkillMeta()})

    def test_group_needs_exactly_one_base(self):
        skills = (
            Skill(id="s1", descriptor="A: a"),
            Skill(id="s2", descriptor="B: b"),
        )
        meta = {
            "s1": SkillMeta(domain="d", group_id="g", is_base=True),
            "s2": SkillMeta(domain="d", group_id="g", is_base=True),
        }
        with pytest.raises(SpecError):
            SkillLibrary(skills=skills, meta=meta)

    def test_lookup_and_iteration(self, small_library):
        ids = small_library.ids()
        assert len(ids) == len(small_library) == 12
        assert [s.id for s in small_library] == list(ids)
        assert small_library.by_id(ids[0]).id == ids[0]
        with pytest.raises(KeyError):
            small_library.by_id("missing")

    def test_round_trip(self, small_library):
        data = library_to_dict(small_library)
        assert data["schema_version"] == SCHEMA_VERSION
        assert library_from_dict(data) == small_library

    def test_grouped_round_trip(self, grouped_library):
        restored = library_from_dict(library_to_dict(grouped_library))
        assert restored == grouped_library
        assert restored.groups == grouped_library.groups


class TestTasks:
    def test_rejects_empty_query(self):
        with pytest.raises(SpecError):
            TaskInstance(id="t", query="  ", truth="s1")

    def test_round_trip(self):
        task = TaskInstance(id="t1", query="Add 2 and 3.", truth="s9", domain="math")
        data = task_to_dict(task)
        assert task_from_dict(data) == task

    def test_list_round_trip(self, small_tasks):
        data = tasks_to_dict(small_tasks)
        assert data["schema_version"] == SCHEMA_VERSION
        assert tasks_from_dict(data) == small_tasks


class TestLoadJson:
    def test_malformed_json_reports_position(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"agents": [\n  broken')
        with pytest.raises(ParseError) as err:
            load_json(path)
        assert "line 2" in str(err.value)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError):
            load_json(tmp_path / "nope.json")

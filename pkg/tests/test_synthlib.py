import pytest

from skillab import (
    gen_competitors,
    gen_grouped,
    gen_library,
    gen_tasks,
    sample_tasks,
)
from skillab.catalog import DOMAINS, HIGH_SIMILARITY_DOMAINS
from skillab.errors import DomainError, PoolExhausted
from skillab.similarity import mean_pairwise


class TestGenLibrary:
    def test_size_exact(self):
        for size in (1, 5, 40, 200):
            assert len(gen_library(size, seed=1)) == size

    def test_deterministic_under_seed(self):
        assert gen_library(30, seed=5) == gen_library(30, seed=5)

    def test_seed_changes_composition(self):
        a = gen_library(30, seed=1)
        b = gen_library(30, seed=2)
        assert a.ids() == b.ids()
        assert {s.descriptor for s in a} != {s.descriptor for s in b}

    def test_low_similarity_covers_every_domain(self):
        library = gen_library(16, "low", seed=0)
        domains = {library.meta_for(s.id).domain for s in library}
        assert domains == set(DOMAINS)

    def test_high_similarity_stays_in_confusable_domains(self):
        library = gen_library(30, "high", seed=0)
        domains = {library.meta_for(s.id).domain for s in library}
        assert domains <= set(HIGH_SIMILARITY_DOMAINS)

    def test_high_similarity_is_more_confusable_than_low(self):
        low = gen_library(40, "low", seed=0)
        high = gen_library(40, "high", seed=0)
        low_sim = mean_pairwise([s.descriptor for s in low])
        high_sim = mean_pairwise([s.descriptor for s in high])
        assert high_sim > low_sim

    def test_complexity_sets_policy_tier(self):
        simple = gen_library(10, complexity="simple", seed=4)
        complex_ = gen_library(10, complexity="complex", seed=4)
        for s_simple, s_complex in zip(simple, complex_):
            assert len(s_complex.policy.split()) > 3 * len(s_simple.policy.split())
        tiers = {simple.meta_for(s.id).complexity for s in simple}
        assert tiers == {"simple"}

    def test_bad_arguments(self):
        with pytest.raises(DomainError):
            gen_library(0)
        with pytest.raises(DomainError):
            gen_library(5, similarity="extreme")
        with pytest.raises(DomainError):
            gen_library(5, complexity="herculean")

    def test_pool_exhaustion(self):
        with pytest.raises(PoolExhausted):
            gen_library(201)
        with pytest.raises(PoolExhausted):
            gen_library(80, "high")


class TestGenCompetitors:
    def test_size_formula(self):
        for n_base in (1, 5, 10, 20):
            for n_comp in (0, 1, 2):
                library = gen_competitors(n_base, n_comp, seed=2)
                assert len(library) == n_base * (1 + n_comp)

    def test_one_base_per_group(self):
        library = gen_competitors(8, 2, seed=1)
        by_group = {}
        for s in library:
            m = library.meta_for(s.id)
            by_group.setdefault(m.group_id, []).append(m)
        assert len(by_group) == 8
        for members in by_group.values():
            assert sum(1 for m in members if m.is_base) == 1
            assert len(members) == 3

    def test_bases_stable_as_competitors_grow(self):
        bare = gen_competitors(10, 0, seed=6)
        crowded = gen_competitors(10, 2, seed=6)
        bare_descriptors = {s.descriptor for s in bare}
        crowded_bases = {
            s.descriptor for s in crowded if crowded.meta_for(s.id).is_base
        }
        assert bare_descriptors == crowded_bases

    def test_zero_competitors_is_ungrouped(self):
        library = gen_competitors(6, 0, seed=0)
        assert all(library.meta_for(s.id).group_id is None for s in library)
        assert library.groups == {}

    def test_competitors_resemble_their_base(self):
        library = gen_competitors(10, 2, seed=3)
        from skillab.similarity import jaccard

        by_group = {}
        for s in library:
            m = library.meta_for(s.id)
            by_group.setdefault(m.group_id, []).append((s, m))
        for members in by_group.values():
            base = next(s for s, m in members if m.is_base)
            rest = [s for s, m in members if not m.is_base]
            for comp in rest:
                within = jaccard(base.descriptor, comp.descriptor)
                others = [
                    jaccard(comp.descriptor, s.descriptor)
                    for s in library
                    if library.meta_for(s.id).group_id
                    != library.meta_for(comp.id).group_id
                ]
                assert within > sum(others) / len(others)

    def test_bad_arguments(self):
        with pytest.raises(DomainError):
            gen_competitors(5, -1)
        with pytest.raises(DomainError):
            gen_competitors(5, 3)
        with pytest.raises(DomainError):
            gen_competitors(0, 1)
        with pytest.raises(PoolExhausted):
            gen_competitors(41, 1)


class TestGenGrouped:
    def test_size_formula(self):
        for n_groups in (2, 10, 40):
            assert len(gen_grouped(n_groups, seed=0)) == 3 * n_groups

    def test_group_labels_have_descriptions(self):
        library = gen_grouped(5, seed=1)
        assert len(library.groups) == 5
        group_ids = {library.meta_for(s.id).group_id for s in library}
        assert group_ids == set(library.groups)
        assert all(desc.strip() for desc in library.groups.values())

    def test_each_group_has_one_base(self):
        library = gen_grouped(7, seed=2)
        by_group = {}
        for s in library:
            m = library.meta_for(s.id)
            by_group.setdefault(m.group_id, []).append(m)
        for members in by_group.values():
            assert len(members) == 3
            assert sum(1 for m in members if m.is_base) == 1

    def test_deterministic(self):
        assert gen_grouped(9, seed=4) == gen_grouped(9, seed=4)


class TestGenTasks:
    def test_per_skill_count_and_truths(self, small_library):
        tasks = gen_tasks(small_library, 3, seed=1)
        assert len(tasks) == 3 * len(small_library)
        valid = set(small_library.ids())
        assert all(t.truth in valid for t in tasks)

    def test_grouped_library_targets_bases_only(self, grouped_library):
        tasks = gen_tasks(grouped_library, 2, seed=1)
        bases = {
            s.id
            for s in grouped_library
            if grouped_library.meta_for(s.id).is_base
        }
        assert {t.truth for t in tasks} == bases

    def test_queries_single_line_and_deterministic(self, small_library):
        tasks = gen_tasks(small_library, 2, seed=9)
        again = gen_tasks(small_library, 2, seed=9)
        assert tasks == again
        assert all("\n" not in t.query for t in tasks)

    def test_shared_skills_share_task_streams(self):
        narrow = gen_competitors(10, 0, seed=8)
        wide = gen_competitors(10, 2, seed=8)
        narrow_tasks = {t.query for t in gen_tasks(narrow, 2, seed=0)}
        wide_tasks = {t.query for t in gen_tasks(wide, 2, seed=0)}
        assert narrow_tasks == wide_tasks

    def test_task_stream_survives_complexity_change(self):
        simple = gen_library(15, complexity="simple", seed=3)
        complex_ = gen_library(15, complexity="complex", seed=3)
        assert [t.query for t in gen_tasks(simple, 2, seed=1)] == [
            t.query for t in gen_tasks(complex_, 2, seed=1)
        ]

    def test_bad_per_skill(self, small_library):
        with pytest.raises(DomainError):
            gen_tasks(small_library, 0)


class TestSampleTasks:
    def test_exact_count(self, small_library):
        for count in (1, 7, 24, 50):
            assert len(sample_tasks(small_library, count, seed=2)) == count

    def test_deterministic(self, small_library):
        a = sample_tasks(small_library, 17, seed=5)
        assert a == sample_tasks(small_library, 17, seed=5)

    def test_spread_over_skills(self, small_library):
        tasks = sample_tasks(small_library, 36, seed=0)
        truths = {t.truth for t in tasks}
        assert truths == set(small_library.ids())

    def test_bad_count(self, small_library):
        with pytest.raises(DomainError):
            sample_tasks(small_library, 0)

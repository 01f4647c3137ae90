import json

import pytest

from richfca.concepts import count_concepts
from richfca.context import FormalContext, contranominal, delete_pair, full_context
from richfca.cxt import read_cxt
from richfca.edit_ops import contrast
from richfca.errors import GuardError
from richfca import verifier
from richfca.verifier import (
    PROPERTIES, Scope, albano_bound, cell_bounded_shapes, check_albano_bound,
    context_from_code, enumerate_contexts, extremal_search, fig7_resistance,
    oracle_concept_count, random_context, run_property_suite, shrink,
)


class TestOracle:
    def test_examples(self, fig1, fig7):
        assert oracle_concept_count(fig1) == 15
        assert oracle_concept_count(contranominal(2)) == 4
        assert oracle_concept_count(fig7) == 22

    def test_degenerate(self):
        assert oracle_concept_count(FormalContext([], [], [])) == 1
        assert oracle_concept_count(FormalContext(["g"], [], [[]])) == 1

    def test_guard(self):
        with pytest.raises(GuardError):
            oracle_concept_count(full_context(21, 1))
        with pytest.raises(GuardError):
            oracle_concept_count(full_context(2, 64))
        assert oracle_concept_count(full_context(20, 2)) == 1


class TestUniverses:
    def test_enumerate(self):
        all22 = list(enumerate_contexts(2, 2))
        assert len(all22) == 16 and len({K.to_strings().__repr__() for K in all22}) == 16
        assert len(list(enumerate_contexts(0, 3))) == 1
        assert len(list(enumerate_contexts(3, 0))) == 1
        with pytest.raises(GuardError):
            next(enumerate_contexts(3, 6))

    def test_code_layout(self):
        K = context_from_code(2, 3, 0b100_011)
        assert K.to_strings() == ["XX.", "..X"]

    def test_random_is_reproducible(self):
        assert random_context(5, 5, 0.5, 1) == random_context(5, 5, 0.5, 1)
        assert random_context(5, 5, 0.5, 1) != random_context(5, 5, 0.5, 2)
        assert random_context(3, 3, 0.0, 7) == context_from_code(3, 3, 0)
        assert random_context(3, 3, 1.0, 7) == full_context(3, 3)
        with pytest.raises(ValueError):
            random_context(2, 2, 1.5, 0)

    def test_cell_bounded_shapes(self):
        shapes = cell_bounded_shapes(4)
        assert (2, 2) in shapes and (4, 1) in shapes and (0, 4) in shapes
        assert (2, 3) not in shapes


class TestSuite:
    def test_doubling_3x3(self):
        [rep] = run_property_suite(Scope(3, 3), ["doubling"], jobs=1)
        assert rep.passed and rep.checked == sum(2 ** (a * b) for a in range(4) for b in range(4))
        assert rep.counterexample is None

    def test_every_property_up_to_3x3(self):
        reports = run_property_suite(Scope(3, 3), jobs=1)
        assert [r.property for r in reports] == sorted(PROPERTIES)
        failed = [(r.property, r.message) for r in reports if not r.passed]
        assert not failed

    @pytest.mark.slow
    def test_every_property_up_to_4x4(self):
        reports = run_property_suite(Scope(4, 4))
        failed = [(r.property, r.message, r.counterexample) for r in reports if not r.passed]
        assert not failed
        assert {r.checked for r in reports} == {74963}

    def test_rich_pairs_up_to_3x4(self):
        [rep] = run_property_suite(Scope(3, 4), ["rich-pair-existence"], jobs=1)
        assert rep.passed

    @pytest.mark.slow
    def test_theorem1_on_samples(self):
        scope = Scope(max_objects=-1, max_attributes=-1, samples=1000, seed=0)
        [rep] = run_property_suite(scope, ["theorem1"], jobs=1)
        assert rep.passed and rep.checked == 1000 and rep.seed == 0
        assert "1000 random 5x5" in rep.universe

    def test_parallel_matches_serial(self):
        scope = Scope(2, 3, samples=40, seed=3)
        names = ["oracle-agreement", "theorem1", "nop-monotone"]
        serial = run_property_suite(scope, names, jobs=1, chunk=16)
        parallel = run_property_suite(scope, names, jobs=2, chunk=16)
        assert [r.to_json() for r in serial] == [r.to_json() for r in parallel]

    def test_guard(self):
        with pytest.raises(GuardError):
            run_property_suite(Scope(9, 9), ["doubling"], jobs=1)
        with pytest.raises(KeyError):
            run_property_suite(Scope(1, 1), ["no-such-property"], jobs=1)

    def test_failures_carry_shrunk_counterexample(self, monkeypatch):
        def too_many(facts):
            return "more than two concepts" if facts.count > 2 else None

        monkeypatch.setitem(PROPERTIES, "too-many", too_many)
        [rep] = run_property_suite(Scope(3, 3), ["too-many"], jobs=1)
        assert not rep.passed and rep.failures > 0
        K = read_cxt(rep.counterexample)
        assert count_concepts(K) > 2
        # every delete_pair child of the shrunk context passes
        for g in range(K.n_objects):
            for m in range(K.n_attributes):
                assert count_concepts(delete_pair(K, g, m)) <= 2
        data = json.loads(rep.to_json())
        assert data["property"] == "too-many" and data["counterexample"] == rep.counterexample

    def test_shrink_keeps_failure(self, monkeypatch):
        monkeypatch.setitem(PROPERTIES, "has-cn2", lambda f: "cn2" if contrast(f.K) >= 2 else None)
        small, msg = shrink(contranominal(4), "has-cn2")
        assert msg == "cn2" and small.shape == (2, 2)

    def test_property_exceptions_are_failures(self, monkeypatch):
        def broken(facts):
            raise GuardError("boom")

        monkeypatch.setitem(PROPERTIES, "broken", broken)
        [rep] = run_property_suite(Scope(1, 1), ["broken"], jobs=1)
        assert not rep.passed and "boom" in rep.message


class TestTargeted:
    def test_fig7_resistance(self):
        rep = fig7_resistance()
        assert rep.passed and rep.checked == 12

    def test_extremal_3x3_c2(self):
        rep = extremal_search(3, 3, 2, jobs=1)
        assert (rep.class_size, rep.max_count, rep.extremal_count) == (230, 4, 36)
        assert rep.has_cn_witness
        assert contrast(read_cxt(rep.witness)) == 1
        assert rep.bound == 4 and rep.bound_ok

    def test_extremal_c1(self):
        rep = extremal_search(3, 3, 1, jobs=1)
        assert (rep.class_size, rep.max_count) == (1, 1)

    def test_extremal_guards(self):
        with pytest.raises(GuardError):
            extremal_search(3, 3, 5)
        with pytest.raises(GuardError):
            extremal_search(5, 5, 2)

    def test_albano_bound_values(self):
        assert albano_bound(4, 2) == 5
        assert albano_bound(3, 3) == 7
        assert albano_bound(4, 5) == 16

    def test_albano_checks(self):
        rep = check_albano_bound(3, 3, jobs=1)
        assert rep.passed and rep.checked == 4519
        rep = check_albano_bound(3, 2, jobs=1)
        assert rep.passed and rep.checked == 1351
        assert check_albano_bound(2, 3, jobs=1).passed

    def test_albano_reports_violations(self, monkeypatch):
        monkeypatch.setattr(verifier, "albano_bound", lambda a, c: 1)
        rep = check_albano_bound(2, 2, max_b=2, jobs=1)
        assert not rep.passed and read_cxt(rep.counterexample).n_objects == 2

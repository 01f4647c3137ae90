import pickle

import pytest
from hypothesis import given, settings, strategies as st

from richfca.concepts import count_concepts
from richfca.context import (
    FormalContext, apply_op, close_objects, co_extent, co_intent, contranominal,
    delete_pair, derive_attributes, derive_objects, direct_sum, empty_context,
    full_context, remove_incidence, subcontext,
)
from richfca.errors import DomainError, ForeignSetError

import _oracles as O


def names(K, s):
    return "".join(K.object_labels(s.bits))


def attrs(K, b):
    return "".join(K.attribute_labels(b.bits))


contexts = st.integers(0, 4).flatmap(lambda a: st.integers(0, 4).flatmap(
    lambda b: st.lists(st.text("X.", min_size=b, max_size=b), min_size=a, max_size=a)
    .map(lambda rows: (rows, b))))


def build(spec):
    rows, b = spec
    return FormalContext.from_strings(rows, attribute_names=[f"m{j}" for j in range(b)])


def oracle(K):
    return O.Ctx.from_rows(K.to_strings(), list(K.object_names), list(K.attribute_names))


class TestConstruction:
    def test_names_must_be_distinct(self):
        with pytest.raises(ValueError):
            FormalContext(["a", "a"], ["m"], [[True], [False]])
        with pytest.raises(ValueError):
            FormalContext(["a"], ["m", "m"], [[True, False]])

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            FormalContext(["a", "b"], ["m"], [[True]])
        with pytest.raises(ValueError):
            FormalContext(["a"], ["m"], [[True, False]])

    def test_degenerate_shapes_allowed(self):
        assert FormalContext([], ["m", "n"], []).shape == (0, 2)
        assert FormalContext(["g"], [], [[]]).shape == (1, 0)
        assert empty_context().shape == (0, 0)

    def test_equality_hash_and_pickle(self, fig1):
        same = FormalContext.from_strings(fig1.to_strings(), fig1.object_names,
                                          fig1.attribute_names)
        assert same == fig1 and hash(same) == hash(fig1)
        assert same.context_id == fig1.context_id
        assert pickle.loads(pickle.dumps(fig1)) == fig1
        assert remove_incidence(fig1, 0, 1) != fig1

    def test_immutable(self, fig1):
        with pytest.raises(AttributeError):
            fig1.foo = 1


class TestDerivation:
    def test_derive_objects(self, fig1):
        assert attrs(fig1, derive_objects(fig1, fig1.objects("ij"))) == "mp"
        assert derive_objects(fig1, fig1.objects()).bits == fig1.all_attributes
        assert attrs(fig1, derive_objects(fig1, fig1.objects("k"))) == "mq"

    def test_derive_attributes(self, fig1):
        assert names(fig1, derive_attributes(fig1, fig1.attributes("m"))) == "ijk"
        assert derive_attributes(fig1, fig1.attributes()).bits == fig1.all_objects
        assert names(fig1, derive_attributes(fig1, fig1.attributes("np"))) == "hi"

    def test_close_objects(self, fig1):
        assert names(fig1, close_objects(fig1, fig1.objects("k"))) == "k"
        assert close_objects(fig1, fig1.objects(fig1.all_objects)).bits == fig1.all_objects
        assert names(fig1, close_objects(fig1, fig1.objects("hi"))) == "hi"

    def test_against_oracle(self, fig1, fig1_oracle):
        for S in O.subsets(fig1_oracle.G):
            s = fig1.objects(sorted(S))
            assert set(fig1.attribute_labels(derive_objects(fig1, s).bits)) == fig1_oracle.up(S)
            assert set(fig1.object_labels(close_objects(fig1, s).bits)) == fig1_oracle.close(S)

    def test_co_sets(self, fig1):
        assert names(fig1, co_extent(fig1, 0)) == "gh"
        assert co_extent(full_context(2, 2), 0).bits == 0
        assert attrs(fig1, co_intent(fig1, 1)) == "mo"
        with pytest.raises(IndexError):
            co_extent(fig1, 5)
        with pytest.raises(IndexError):
            co_intent(fig1, -1)

    def test_foreign_sets_rejected(self, fig1, fig7):
        with pytest.raises(ForeignSetError):
            derive_objects(fig1, fig7.objects([0]))
        with pytest.raises(ForeignSetError):
            derive_attributes(fig7, fig1.attributes([0]))
        with pytest.raises(ForeignSetError):
            close_objects(fig7, fig1.objects([0]))


class TestEdits:
    def test_delete_pair(self, fig1):
        L = delete_pair(fig1, 0, 0)
        assert L.shape == (4, 4)
        assert L.object_names == ("h", "i", "j", "k")
        assert count_concepts(L) == 7
        assert count_concepts(delete_pair(fig1, 1, 0)) == 9
        assert delete_pair(full_context(1, 1), 0, 0).shape == (0, 0)
        with pytest.raises(DomainError):
            delete_pair(FormalContext([], ["m"], []), 0, 0)

    def test_apply_op_fig3(self, fig1):
        L = apply_op(fig1, 0, 0)
        # g keeps everything but m, h keeps m and loses nothing else
        assert L.to_strings() == [".XXXX", "XX.XX", "XX.X.", "X.XX.", "X...X"]
        assert count_concepts(L) == 14
        with pytest.raises(DomainError):
            apply_op(fig1, 2, 0)

    def test_apply_op_on_cn1(self):
        cn1 = contranominal(1)
        assert apply_op(cn1, 0, 0) == cn1

    def test_remove_incidence(self, fig1, fig1_oracle):
        assert remove_incidence(full_context(1, 1), 0, 0) == contranominal(1)
        K = FormalContext.from_strings(["XX", "XX"], ["1", "2"], ["a", "b"])
        assert count_concepts(remove_incidence(K, 0, 0)) == 2
        L = remove_incidence(fig1, 2, 0)
        pairs = fig1_oracle.I - {("i", "m")}
        assert count_concepts(L) == O.concept_count(O.Ctx(fig1_oracle.G, fig1_oracle.M, pairs))
        with pytest.raises(DomainError):
            remove_incidence(fig1, 0, 0)

    def test_direct_sum(self, fig1):
        assert direct_sum(contranominal(1), contranominal(1, ("h", "n"))).to_strings() == \
            contranominal(2).to_strings()
        assert direct_sum(fig1, empty_context()) == fig1
        assert direct_sum(empty_context(), fig1) == fig1
        lone = FormalContext(["x"], ["y"], [[False]])
        assert count_concepts(direct_sum(lone, delete_pair(fig1, 0, 0))) == 14

    def test_direct_sum_suffixes_collisions(self):
        S = direct_sum(contranominal(1), contranominal(1))
        assert S.object_names == ("g0_1", "g0_2")
        assert S.attribute_names == ("m0_1", "m0_2")

    def test_subcontext(self, fig1):
        sub = subcontext(fig1, 0b00011, 0b00110)
        assert sub.object_names == ("g", "h") and sub.attribute_names == ("n", "o")
        assert sub.to_strings() == ["XX", "X."]


@settings(max_examples=150, deadline=None)
@given(contexts)
def test_edits_match_oracle(spec):
    K = build(spec)
    ref = oracle(K)
    assert count_concepts(K) == O.concept_count(ref)
    for g, m in K.non_incidences():
        gn, mn = K.object_names[g], K.attribute_names[m]
        assert count_concepts(apply_op(K, g, m)) == O.concept_count(O.apply_op(ref, gn, mn))
        assert count_concepts(delete_pair(K, g, m)) == O.concept_count(O.delete_pair(ref, gn, mn))


@settings(max_examples=100, deadline=None)
@given(contexts, contexts)
def test_direct_sum_multiplies_counts(a, b):
    K1, K2 = build(a), build(b)
    assert count_concepts(direct_sum(K1, K2)) == count_concepts(K1) * count_concepts(K2)

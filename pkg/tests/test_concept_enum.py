import pytest
from hypothesis import given, settings, strategies as st

from richfca.concepts import count_concepts, enumerate_concepts, extent_masks, lectic_key
from richfca.context import (
    FormalContext, contranominal, delete_pair, empty_context, full_context,
)
from richfca.figures import three_chain

import _oracles as O


def test_fig1(fig1, fig1_oracle):
    cs = enumerate_concepts(fig1)
    assert len(cs) == 15
    found = {frozenset(fig1.object_labels(c.extent.bits)) for c in cs}
    assert found == O.extents(fig1_oracle)
    for c in cs:
        assert c.intent.bits == fig1.intent_of(c.extent.bits)
        assert c.extent.context_id == fig1.context_id


def test_standard_counts(fig7):
    assert len(enumerate_concepts(contranominal(3))) == 8
    assert len(enumerate_concepts(fig7)) == 22
    assert count_concepts(three_chain()) == 3
    assert count_concepts(full_context(3, 4)) == 1
    assert count_concepts(empty_context()) == 1
    assert count_concepts(FormalContext([], ["m"], [])) == 1
    assert count_concepts(FormalContext(["g"], [], [[]])) == 1


def test_fig1_minus_gm(fig1):
    assert count_concepts(delete_pair(fig1, 0, 0)) == 7


def test_lectic_order_is_strict(fig1):
    n = fig1.n_objects
    keys = [lectic_key(e, n) for e in extent_masks(fig1)]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    # empty first when it is an extent; G is always last
    assert extent_masks(fig1)[-1] == fig1.all_objects


def test_lectic_key_matches_oracle_order():
    order = ["a", "b", "c"]
    subsets = list(O.subsets(order))
    for x in subsets:
        for y in subsets:
            kx = lectic_key(sum(1 << order.index(v) for v in x), 3)
            ky = lectic_key(sum(1 << order.index(v) for v in y), 3)
            assert (kx < ky) == O.lectic_less(x, y, order)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 6).flatmap(lambda a: st.integers(0, 6).flatmap(
    lambda b: st.lists(st.text("X.", min_size=b, max_size=b), min_size=a, max_size=a)
    .map(lambda rows: (rows, b)))))
def test_enumeration_matches_oracle(spec):
    rows, b = spec
    K = FormalContext.from_strings(rows, attribute_names=[f"m{j}" for j in range(b)])
    ref = O.Ctx.from_rows(rows, list(K.object_names), list(K.attribute_names))
    ext = extent_masks(K)
    assert {frozenset(K.object_labels(e)) for e in ext} == O.extents(ref)
    assert len(ext) == len(set(ext)) == count_concepts(K)


@pytest.mark.parametrize("j", range(0, 9))
def test_contranominal_is_boolean(j):
    assert count_concepts(contranominal(j)) == 2 ** j

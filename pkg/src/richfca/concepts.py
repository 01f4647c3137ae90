"""Concept enumeration (NextClosure over objects) and counting."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from richfca import kernels
from richfca.context import AttributeSet, FormalContext, ObjectSet


@dataclass(frozen=True)
class Concept:
    extent: ObjectSet
    intent: AttributeSet


@dataclass(frozen=True)
class ConceptSet:
    """All concepts of one context, extents in strictly increasing lectic order."""

    context_id: str
    concepts: tuple[Concept, ...]

    def __len__(self) -> int:
        return len(self.concepts)

    def __iter__(self) -> Iterator[Concept]:
        return iter(self.concepts)

    def __getitem__(self, i: int) -> Concept:
        return self.concepts[i]

    @property
    def extents(self) -> list[int]:
        return [c.extent.bits for c in self.concepts]


def extent_masks(K: FormalContext) -> list[int]:
    """Raw extent bitmasks in lectic order (object 0 most significant)."""
    return kernels.list_extents(K.rows, K.cols, K.n_objects, K.n_attributes)


def enumerate_concepts(K: FormalContext) -> ConceptSet:
    cid = K.context_id
    concepts = tuple(
        Concept(ObjectSet(cid, e), AttributeSet(cid, K.intent_of(e)))
        for e in extent_masks(K))
    return ConceptSet(cid, concepts)


def count_concepts(K: FormalContext) -> int:
    """|B(K)| without materialising the concepts."""
    return kernels.count_concepts(K.rows, K.cols, K.n_objects, K.n_attributes)


def lectic_key(mask: int, n: int) -> int:
    """Integer whose natural order is the lectic order on subsets of ``n`` objects.

    The lowest-index differing object decides; the set lacking it is smaller.
    """
    key = 0
    for i in range(n):
        if mask >> i & 1:
            key |= 1 << (n - 1 - i)
    return key

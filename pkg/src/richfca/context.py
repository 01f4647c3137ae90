"""Formal contexts, derivation operators and context edits.

Incidence is held twice as bitmasks: ``rows[g]`` is the attribute mask of
object ``g`` and ``cols[m]`` the object mask of attribute ``m``. Bit ``i``
always stands for the element with index ``i``.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from richfca import kernels
from richfca.errors import DomainError, ForeignSetError


def _bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


class FormalContext:
    """An immutable formal context (G, M, I).

    Objects and attributes are identified by position; names are labels.
    """

    __slots__ = ("_objects", "_attributes", "_rows", "_cols", "_id")

    def __init__(self, object_names: Sequence[str], attribute_names: Sequence[str],
                 incidence: Sequence[Sequence[bool]]):
        objects = tuple(str(n) for n in object_names)
        attributes = tuple(str(n) for n in attribute_names)
        if len(set(objects)) != len(objects):
            raise ValueError("object names must be pairwise distinct")
        if len(set(attributes)) != len(attributes):
            raise ValueError("attribute names must be pairwise distinct")
        rows = []
        incidence = list(incidence)
        if len(incidence) != len(objects):
            raise ValueError(
                f"incidence has {len(incidence)} rows, expected {len(objects)}")
        for g, row in enumerate(incidence):
            row = list(row)
            if len(row) != len(attributes):
                raise ValueError(
                    f"row {g} has {len(row)} entries, expected {len(attributes)}")
            mask = 0
            for m, flag in enumerate(row):
                if flag:
                    mask |= 1 << m
            rows.append(mask)
        self._init(objects, attributes, tuple(rows))

    @classmethod
    def from_masks(cls, object_names: Sequence[str], attribute_names: Sequence[str],
                   rows: Sequence[int]) -> "FormalContext":
        """Build from one attribute bitmask per object (no copying of lists)."""
        self = cls.__new__(cls)
        objects = tuple(object_names)
        attributes = tuple(attribute_names)
        if len(rows) != len(objects):
            raise ValueError("one row mask per object required")
        if len(set(objects)) != len(objects) or len(set(attributes)) != len(attributes):
            raise ValueError("names must be pairwise distinct")
        full = (1 << len(attributes)) - 1
        if any(r & ~full for r in rows):
            raise ValueError("row mask refers to a missing attribute")
        self._init(objects, attributes, tuple(rows))
        return self

    @classmethod
    def from_strings(cls, rows: Sequence[str], object_names: Sequence[str] | None = None,
                     attribute_names: Sequence[str] | None = None) -> "FormalContext":
        """Build from rows such as ``".XX.X"``; default names are ``g0.. / m0..``."""
        rows = list(rows)
        width = len(rows[0]) if rows else len(attribute_names or ())
        if object_names is None:
            object_names = [f"g{i}" for i in range(len(rows))]
        if attribute_names is None:
            attribute_names = [f"m{j}" for j in range(width)]
        for r in rows:
            if set(r) - set(".xX"):
                raise ValueError(f"illegal character in row {r!r}")
        return cls(object_names, attribute_names,
                   [[c in "xX" for c in r] for r in rows])

    def _init(self, objects, attributes, rows):
        self._objects = objects
        self._attributes = attributes
        self._rows = rows
        cols = [0] * len(attributes)
        for g, r in enumerate(rows):
            for m in _bits(r):
                cols[m] |= 1 << g
        self._cols = tuple(cols)
        digest = hashlib.blake2b(digest_size=8)
        digest.update("\x1f".join(objects).encode())
        digest.update(b"\x1e")
        digest.update("\x1f".join(attributes).encode())
        digest.update(b"\x1e")
        digest.update(",".join(map(str, rows)).encode())
        self._id = digest.hexdigest()

    # -- basic accessors ------------------------------------------------

    @property
    def object_names(self) -> tuple[str, ...]:
        return self._objects

    @property
    def attribute_names(self) -> tuple[str, ...]:
        return self._attributes

    @property
    def n_objects(self) -> int:
        return len(self._objects)

    @property
    def n_attributes(self) -> int:
        return len(self._attributes)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self._objects), len(self._attributes)

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def cols(self) -> tuple[int, ...]:
        return self._cols

    @property
    def context_id(self) -> str:
        """Content fingerprint; sets carry it to detect cross-context misuse."""
        return self._id

    @property
    def incidence(self) -> tuple[tuple[bool, ...], ...]:
        n = len(self._attributes)
        return tuple(tuple(bool(r >> m & 1) for m in range(n)) for r in self._rows)

    @property
    def all_objects(self) -> int:
        return (1 << len(self._objects)) - 1

    @property
    def all_attributes(self) -> int:
        return (1 << len(self._attributes)) - 1

    def incident(self, g: int, m: int) -> bool:
        return bool(self._rows[g] >> m & 1)

    def object_index(self, name: str) -> int:
        try:
            return self._objects.index(name)
        except ValueError:
            raise KeyError(f"no object named {name!r}") from None

    def attribute_index(self, name: str) -> int:
        try:
            return self._attributes.index(name)
        except ValueError:
            raise KeyError(f"no attribute named {name!r}") from None

    def non_incidences(self) -> list[tuple[int, int]]:
        """All non-incident (object, attribute) index pairs, row-major."""
        full = self.all_attributes
        return [(g, m) for g, r in enumerate(self._rows) for m in _bits(full & ~r)]

    def is_full(self) -> bool:
        full = self.all_attributes
        return all(r == full for r in self._rows)

    # -- raw mask derivation (hot paths) ----------------------------------

    def intent_of(self, objs: int) -> int:
        res = self.all_attributes
        rows = self._rows
        for g in _bits(objs):
            res &= rows[g]
        return res

    def extent_of(self, attrs: int) -> int:
        res = self.all_objects
        cols = self._cols
        for m in _bits(attrs):
            res &= cols[m]
        return res

    def closure_of(self, objs: int) -> int:
        return self.extent_of(self.intent_of(objs))

    # -- set constructors --------------------------------------------------

    def objects(self, members: Iterable[int | str] | int = ()) -> "ObjectSet":
        """An ObjectSet of this context from indices, names, or a raw mask."""
        if isinstance(members, int):
            if members & ~self.all_objects or members < 0:
                raise IndexError("object mask out of range")
            return ObjectSet(self._id, members)
        mask = 0
        for x in members:
            i = self.object_index(x) if isinstance(x, str) else x
            if not 0 <= i < len(self._objects):
                raise IndexError(f"object index {i} out of range")
            mask |= 1 << i
        return ObjectSet(self._id, mask)

    def attributes(self, members: Iterable[int | str] | int = ()) -> "AttributeSet":
        if isinstance(members, int):
            if members & ~self.all_attributes or members < 0:
                raise IndexError("attribute mask out of range")
            return AttributeSet(self._id, members)
        mask = 0
        for x in members:
            i = self.attribute_index(x) if isinstance(x, str) else x
            if not 0 <= i < len(self._attributes):
                raise IndexError(f"attribute index {i} out of range")
            mask |= 1 << i
        return AttributeSet(self._id, mask)

    def object_labels(self, mask: int) -> list[str]:
        return [self._objects[i] for i in _bits(mask)]

    def attribute_labels(self, mask: int) -> list[str]:
        return [self._attributes[i] for i in _bits(mask)]

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalContext):
            return NotImplemented
        return (self._objects == other._objects and self._attributes == other._attributes
                and self._rows == other._rows)

    def __hash__(self) -> int:
        return hash((self._objects, self._attributes, self._rows))

    def __repr__(self) -> str:
        return f"FormalContext({len(self._objects)}x{len(self._attributes)}, id={self._id})"

    def __reduce__(self):
        return (FormalContext.from_masks, (self._objects, self._attributes, self._rows))

    def to_strings(self) -> list[str]:
        n = len(self._attributes)
        return ["".join("X" if r >> m & 1 else "." for m in range(n)) for r in self._rows]

    def __str__(self) -> str:
        width = max((len(n) for n in self._objects), default=0)
        head = " " * (width + 1) + " ".join(self._attributes)
        lines = [head]
        for name, row in zip(self._objects, self.to_strings()):
            lines.append(f"{name:<{width}} " + " ".join(
                c.rjust(len(a)) for c, a in zip(row, self._attributes)))
        return "\n".join(lines)


@dataclass(frozen=True, slots=True)
class ObjectSet:
    """A set of object indices bound to one context."""

    context_id: str
    bits: int

    def __contains__(self, i: int) -> bool:
        return bool(self.bits >> i & 1)

    def __iter__(self) -> Iterator[int]:
        return _bits(self.bits)

    def __len__(self) -> int:
        return _popcount(self.bits)

    @property
    def members(self) -> frozenset[int]:
        return frozenset(_bits(self.bits))


@dataclass(frozen=True, slots=True)
class AttributeSet:
    """A set of attribute indices bound to one context."""

    context_id: str
    bits: int

    def __contains__(self, i: int) -> bool:
        return bool(self.bits >> i & 1)

    def __iter__(self) -> Iterator[int]:
        return _bits(self.bits)

    def __len__(self) -> int:
        return _popcount(self.bits)

    @property
    def members(self) -> frozenset[int]:
        return frozenset(_bits(self.bits))


def _own(K: FormalContext, s: ObjectSet | AttributeSet) -> int:
    if s.context_id != K.context_id:
        raise ForeignSetError(
            f"set belongs to context {s.context_id}, not {K.context_id}")
    return s.bits


# -- constructors of standard contexts --------------------------------------

def contranominal(j: int, prefix: tuple[str, str] = ("g", "m")) -> FormalContext:
    """CN(j): object i has every attribute except attribute i."""
    full = (1 << j) - 1
    return FormalContext.from_masks(
        [f"{prefix[0]}{i}" for i in range(j)], [f"{prefix[1]}{i}" for i in range(j)],
        [full & ~(1 << i) for i in range(j)])


def full_context(a: int, b: int) -> FormalContext:
    full = (1 << b) - 1
    return FormalContext.from_masks([f"g{i}" for i in range(a)],
                                    [f"m{j}" for j in range(b)], [full] * a)


def empty_context() -> FormalContext:
    return FormalContext.from_masks((), (), ())


# -- derivation ----------------------------------------------------------------

def derive_objects(K: FormalContext, S: ObjectSet) -> AttributeSet:
    """Common attributes of ``S``; the empty set derives to all of M."""
    return AttributeSet(K.context_id, K.intent_of(_own(K, S)))


def derive_attributes(K: FormalContext, B: AttributeSet) -> ObjectSet:
    return ObjectSet(K.context_id, K.extent_of(_own(K, B)))


def close_objects(K: FormalContext, S: ObjectSet) -> ObjectSet:
    return ObjectSet(K.context_id, K.closure_of(_own(K, S)))


def co_intent(K: FormalContext, g: int) -> AttributeSet:
    """Attributes that object ``g`` lacks."""
    if not 0 <= g < K.n_objects:
        raise IndexError(f"object index {g} out of range")
    return AttributeSet(K.context_id, K.all_attributes & ~K.rows[g])


def co_extent(K: FormalContext, m: int) -> ObjectSet:
    """Objects lacking attribute ``m``."""
    if not 0 <= m < K.n_attributes:
        raise IndexError(f"attribute index {m} out of range")
    return ObjectSet(K.context_id, K.all_objects & ~K.cols[m])


def concept_count(K: FormalContext) -> int:
    return kernels.count_concepts(K.rows, K.cols, K.n_objects, K.n_attributes)


# -- edits -----------------------------------------------------------------

def _check_pair(K: FormalContext, g: int, m: int) -> None:
    if K.n_objects == 0 or K.n_attributes == 0:
        raise DomainError("context has no objects or no attributes")
    if not 0 <= g < K.n_objects:
        raise IndexError(f"object index {g} out of range")
    if not 0 <= m < K.n_attributes:
        raise IndexError(f"attribute index {m} out of range")


def _drop_bit(mask: int, i: int) -> int:
    low = mask & ((1 << i) - 1)
    return low | (mask >> (i + 1)) << i


def delete_pair(K: FormalContext, g: int, m: int) -> FormalContext:
    """The subcontext on G minus g and M minus m."""
    _check_pair(K, g, m)
    rows = tuple(_drop_bit(r, m) for i, r in enumerate(K.rows) if i != g)
    objects = K.object_names[:g] + K.object_names[g + 1:]
    attributes = K.attribute_names[:m] + K.attribute_names[m + 1:]
    return FormalContext.from_masks(objects, attributes, rows)


def apply_op(K: FormalContext, g: int, m: int) -> FormalContext:
    """Fill row ``g`` except at ``m`` and column ``m`` except at ``g``.

    Afterwards ``g`` is the only object lacking ``m`` and ``m`` the only
    attribute ``g`` lacks.
    """
    _check_pair(K, g, m)
    if K.incident(g, m):
        raise DomainError(f"pair ({K.object_names[g]}, {K.attribute_names[m]}) is incident")
    bit = 1 << m
    rows = tuple(
        (K.all_attributes & ~bit) if i == g else (r | bit) for i, r in enumerate(K.rows))
    return FormalContext.from_masks(K.object_names, K.attribute_names, rows)


def remove_incidence(K: FormalContext, g: int, m: int) -> FormalContext:
    _check_pair(K, g, m)
    if not K.incident(g, m):
        raise DomainError(
            f"pair ({K.object_names[g]}, {K.attribute_names[m]}) is already non-incident")
    rows = list(K.rows)
    rows[g] &= ~(1 << m)
    return FormalContext.from_masks(K.object_names, K.attribute_names, tuple(rows))


def _disjoint_names(a: Sequence[str], b: Sequence[str]) -> tuple[list[str], list[str]]:
    if not set(a) & set(b):
        return list(a), list(b)
    return [f"{n}_1" for n in a], [f"{n}_2" for n in b]


def direct_sum(K1: FormalContext, K2: FormalContext) -> FormalContext:
    """Disjoint union with full incidence between the two parts.

    Colliding names get ``_1``/``_2`` suffixes on the respective side.
    """
    objects1, objects2 = _disjoint_names(K1.object_names, K2.object_names)
    attributes1, attributes2 = _disjoint_names(K1.attribute_names, K2.attribute_names)
    b1 = K1.n_attributes
    rows = [r | (K2.all_attributes << b1) for r in K1.rows]
    rows += [K1.all_attributes | (r << b1) for r in K2.rows]
    return FormalContext.from_masks(objects1 + objects2, attributes1 + attributes2, rows)


def subcontext(K: FormalContext, objs: int, attrs: int) -> FormalContext:
    """Restriction of ``K`` to the given object and attribute masks."""
    g_idx = list(_bits(objs))
    m_idx = list(_bits(attrs))
    rows = []
    for g in g_idx:
        r = K.rows[g]
        mask = 0
        for k, m in enumerate(m_idx):
            if r >> m & 1:
                mask |= 1 << k
        rows.append(mask)
    return FormalContext.from_masks([K.object_names[g] for g in g_idx],
                                    [K.attribute_names[m] for m in m_idx], rows)

"""Rich-pair search, contranominal structure, and the nop edit sequence."""

from __future__ import annotations

from dataclasses import dataclass, field

from richfca.concepts import count_concepts
from richfca.context import (
    FormalContext, _bits, _popcount, apply_op, delete_pair, remove_incidence,
    subcontext,
)
from richfca.errors import DomainError, InvariantViolation
from richfca.mixgen import MixgenSystem, build_complete_system, decompose


# -- object selection for a fixed attribute -------------------------------------

@dataclass(frozen=True)
class Theorem2Report:
    """Membership counts of the g-independent class D = B ∪ CnotR.

    For a split object g, members of D containing g form CnotR and the
    others form B, so ``counts[g] = (|CnotR|, |B|)``.
    """

    attribute_m: int
    counts: dict[int, tuple[int, int]]
    selected: int
    d_members: tuple[int, ...] = field(default=())

    def balance(self, g: int) -> int:
        inside, outside = self.counts[g]
        return outside - inside


def select_object_theorem2(K: FormalContext, m: int,
                           system: MixgenSystem | None = None) -> Theorem2Report:
    """Pick g in co_extent(m) whose edit keeps |B| >= |CnotR|.

    Among the valid objects the one with the largest |B| - |CnotR| wins,
    ties going to the lowest index.
    """
    if not 0 <= m < K.n_attributes:
        raise IndexError(f"attribute index {m} out of range")
    r = K.all_objects & ~K.cols[m]
    if not r:
        raise DomainError(f"attribute {K.attribute_names[m]} is a full column")
    if system is None:
        system = build_complete_system(K, m)
    elif system.context_id != K.context_id or system.attribute_m != m:
        raise DomainError("system was built for another context or attribute")
    elif not system.semidownset:
        raise DomainError("system lacks the semi-downset property")

    d = decompose(system, next(_bits(r)))
    members = tuple(d.masks("B") + d.masks("CnotR"))
    counts = {}
    for g in _bits(r):
        inside = sum(1 for s in members if s >> g & 1)
        counts[g] = (inside, len(members) - inside)
    valid = [g for g, (i, o) in counts.items() if o >= i]
    if not valid:
        raise InvariantViolation(
            f"no object of co_extent({K.attribute_names[m]}) satisfies |B| >= |CnotR|")
    best = max(valid, key=lambda g: (counts[g][1] - counts[g][0], -g))
    return Theorem2Report(m, counts, best, members)


# -- richness ---------------------------------------------------------------------

def is_rich_pair(K: FormalContext, g: int, m: int) -> bool:
    """Deleting g and m keeps at least half of the concepts."""
    if K.incident(g, m):
        raise DomainError(
            f"pair ({K.object_names[g]}, {K.attribute_names[m]}) is incident")
    return 2 * count_concepts(delete_pair(K, g, m)) >= count_concepts(K)


def find_rich_pair(K: FormalContext) -> tuple[int, int] | None:
    """A non-incident (g, m) whose deletion keeps half the concepts.

    Uses the attribute with the smallest non-empty co-extent, its complete
    lex-minimal system and the object selection above. Returns None for a
    context without non-incidences.
    """
    candidates = [(_popcount(K.all_objects & ~K.cols[m]), m) for m in range(K.n_attributes)]
    candidates = [c for c in candidates if c[0]]
    if not candidates:
        return None
    _, m = min(candidates)
    g = select_object_theorem2(K, m).selected
    if not is_rich_pair(K, g, m):
        raise InvariantViolation(
            f"selected pair ({K.object_names[g]}, {K.attribute_names[m]}) is not rich")
    return g, m


# -- contranominal structure --------------------------------------------------------

def contrast(K: FormalContext) -> int:
    """Size of the largest contranominal scale inside K.

    Branch and bound over non-incident pairs taken in increasing object
    order. A chosen pair (g, m) must be compatible with every earlier pair
    (g', m'): g has m' and g' has m.
    """
    rows = K.rows
    limit = min(K.n_objects, K.n_attributes)
    best = 0

    def extend(size: int, cand: list[tuple[int, int]]) -> None:
        nonlocal best
        best = max(best, size)
        if size + len({g for g, _ in cand}) <= best or best == limit:
            return
        for idx, (g, m) in enumerate(cand):
            nxt = [(h, n) for h, n in cand[idx + 1:]
                   if h > g and n != m and rows[g] >> n & 1 and rows[h] >> m & 1]
            extend(size + 1, nxt)

    extend(0, K.non_incidences())
    return best


@dataclass(frozen=True)
class ContranominalDecomposition:
    """K == kernel + CN(summand_size), with the peeled pairs in K's indices."""

    kernel: FormalContext
    summand_size: int
    peeled_pairs: tuple[tuple[int, int], ...]
    kernel_objects: tuple[int, ...]
    kernel_attributes: tuple[int, ...]


def splitting_pairs(K: FormalContext) -> list[tuple[int, int]]:
    """Pairs (g, m) where g lacks only m and m is lacked only by g."""
    out = []
    for g, row in enumerate(K.rows):
        missing = K.all_attributes & ~row
        if _popcount(missing) != 1:
            continue
        m = missing.bit_length() - 1
        if K.all_objects & ~K.cols[m] == 1 << g:
            out.append((g, m))
    return out


def contranominal_summand_size(K: FormalContext) -> int:
    return len(splitting_pairs(K))


def noncontranominal_kernel(K: FormalContext) -> ContranominalDecomposition:
    pairs = splitting_pairs(K)
    objs = K.all_objects
    attrs = K.all_attributes
    for g, m in pairs:
        objs &= ~(1 << g)
        attrs &= ~(1 << m)
    kernel = subcontext(K, objs, attrs)
    return ContranominalDecomposition(kernel, len(pairs), tuple(pairs),
                                      tuple(_bits(objs)), tuple(_bits(attrs)))


# -- nop ------------------------------------------------------------------------------

FIXED_POINT = "fixed-point"
OP_CASE = "op-case"
REMOVAL_CASE = "incidence-removal-case"


def _kernel_op_pair(dec: ContranominalDecomposition) -> tuple[int, int]:
    """Lex-least (g, m) of the kernel with g a valid selection for m."""
    L = dec.kernel
    best = None
    for m in range(L.n_attributes):
        r = L.all_objects & ~L.cols[m]
        if not r:
            continue
        report = select_object_theorem2(L, m)
        for g in _bits(r):
            inside, outside = report.counts[g]
            if outside >= inside:
                cand = (dec.kernel_objects[g], dec.kernel_attributes[m])
                if best is None or cand < best:
                    best = cand
                break
    assert best is not None
    return best


def nop_step(K: FormalContext) -> tuple[FormalContext, str, tuple[int, int] | None]:
    """One deterministic step of the concept-count non-decreasing edit."""
    dec = noncontranominal_kernel(K)
    L = dec.kernel
    if L.n_objects == 0 or L.n_attributes == 0:
        return K, FIXED_POINT, None
    if not L.is_full():
        g, m = _kernel_op_pair(dec)
        return apply_op(K, g, m), OP_CASE, (g, m)
    g, m = dec.kernel_objects[0], dec.kernel_attributes[0]
    return remove_incidence(K, g, m), REMOVAL_CASE, (g, m)


@dataclass(frozen=True)
class NopStep:
    context: FormalContext
    case: str
    pair: tuple[int, int] | None
    concepts: int
    contrast: int
    summand: int


@dataclass(frozen=True)
class NopTrace:
    """Contexts visited by nop, each with the step taken from it.

    The last entry is the last context inside the class; ``left_class``
    tells whether its recorded step would have created CN(c).
    """

    c: int | None
    steps: tuple[NopStep, ...]
    left_class: bool

    @property
    def last(self) -> NopStep:
        return self.steps[-1]


def _record(K: FormalContext, case: str, pair) -> NopStep:
    return NopStep(K, case, pair, count_concepts(K), contrast(K),
                   contranominal_summand_size(K))


def nop_sequence(K: FormalContext, c: int) -> NopTrace:
    """Iterate nop inside the class of contexts without CN(c)."""
    if c > min(K.n_objects, K.n_attributes) + 1:
        raise DomainError("c must not exceed min(|G|, |M|) + 1")
    if contrast(K) >= c:
        raise DomainError(f"context already contains a contranominal scale of size {c}")
    steps = []
    current = K
    while True:
        nxt, case, pair = nop_step(current)
        steps.append(_record(current, case, pair))
        if case == FIXED_POINT:
            return NopTrace(c, tuple(steps), False)
        if contrast(nxt) >= c:
            return NopTrace(c, tuple(steps), True)
        current = nxt


def nop_run(K: FormalContext, max_steps: int) -> NopTrace:
    """At most ``max_steps`` nop steps with no class boundary.

    The final entry is recorded with the step that would come next.
    """
    steps = []
    current = K
    for _ in range(max_steps + 1):
        nxt, case, pair = nop_step(current)
        steps.append(_record(current, case, pair))
        if case == FIXED_POINT or len(steps) > max_steps:
            break
        current = nxt
    return NopTrace(None, tuple(steps), False)


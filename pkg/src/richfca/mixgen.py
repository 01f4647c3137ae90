"""Mixed generators, the chi map, complete systems and their decomposition.

Throughout, ``R`` is a set of objects. An ``R``-mixed generator ``S`` cannot
lose any of its ``R``-members and cannot gain any object outside ``R`` without
its closure changing. With ``R = G`` these are minimal generators, with
``R`` empty they are extents. For a fixed attribute ``m`` the interesting
choice is ``R = co_extent(m)``, the objects whose rows ``apply_op`` rewrites.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from richfca import kernels
from richfca.concepts import count_concepts, extent_masks
from richfca.context import (
    FormalContext, ObjectSet, _bits, _own, _popcount, apply_op,
)
from richfca.errors import DomainError, InvariantViolation

CLASS_LABELS = ("N", "A1", "A2", "AchiEqR", "B", "CR", "CnotR")


# -- definitions on raw masks -------------------------------------------------

def _mixgen(K: FormalContext, r: int, s: int) -> bool:
    return kernels.is_mixgen(K.rows, K.cols, K.n_objects, K.n_attributes, r, s)


def _strongly_avoids(K: FormalContext, m: int, s: int, h: int) -> bool:
    return K.intent_of(s) & ~K.rows[h] & ~(1 << m) & K.all_attributes != 0


def _chi(K: FormalContext, m: int, s: int) -> int:
    """Objects of co_extent(m) ruled out by an attribute of ``s`` other than ``m``."""
    r = K.all_objects & ~K.cols[m]
    s_int = K.intent_of(s) & ~(1 << m)
    out = 0
    for h in _bits(r):
        if s_int & ~K.rows[h]:
            out |= 1 << h
    return out


def _is_extent(K: FormalContext, s: int) -> bool:
    return K.closure_of(s) == s


def _is_intent(K: FormalContext, b: int) -> bool:
    return K.intent_of(K.extent_of(b)) == b


# -- public operations ----------------------------------------------------------

def is_mixed_generator(K: FormalContext, R: ObjectSet, S: ObjectSet) -> bool:
    return _mixgen(K, _own(K, R), _own(K, S))


def strongly_avoids(K: FormalContext, m: int, S: ObjectSet, h: int) -> bool:
    """True iff S^I meets the attributes ``h`` lacks, ``m`` excluded."""
    if not 0 <= m < K.n_attributes:
        raise IndexError(f"attribute index {m} out of range")
    if not 0 <= h < K.n_objects:
        raise IndexError(f"object index {h} out of range")
    return _strongly_avoids(K, m, _own(K, S), h)


def chi(K: FormalContext, m: int, S: ObjectSet) -> ObjectSet:
    if not 0 <= m < K.n_attributes:
        raise IndexError(f"attribute index {m} out of range")
    return ObjectSet(K.context_id, _chi(K, m, _own(K, S)))


def chi_bar(K: FormalContext, m: int, S: ObjectSet) -> ObjectSet:
    if not 0 <= m < K.n_attributes:
        raise IndexError(f"attribute index {m} out of range")
    r = K.all_objects & ~K.cols[m]
    return ObjectSet(K.context_id, r & ~_chi(K, m, _own(K, S)))


def restrict(S: ObjectSet, R: ObjectSet) -> ObjectSet:
    """S minus R."""
    if S.context_id != R.context_id:
        raise DomainError("sets belong to different contexts")
    return ObjectSet(S.context_id, S.bits & ~R.bits)


def lex_min_mixgen(K: FormalContext, R: ObjectSet, A: ObjectSet) -> ObjectSet:
    """Lexicographically least R-mixgen with closure ``A``.

    Subsets are compared at the first differing object index, the one
    lacking that object being smaller. Only subsets of ``A`` are scanned,
    so the cost is exponential in ``|A|``.
    """
    r, a = _own(K, R), _own(K, A)
    if not _is_extent(K, a):
        raise DomainError("A is not an extent")
    s = kernels.lex_min_mixgen(K.rows, K.cols, K.n_objects, K.n_attributes, r, a)
    if s < 0:
        raise InvariantViolation("extent without a mixed generator")
    return ObjectSet(K.context_id, s)


# -- systems ----------------------------------------------------------------------

@dataclass(frozen=True)
class MixgenSystem:
    """A representative family of R-mixed generators for ``R = co_extent(m)``."""

    context: FormalContext
    attribute_m: int
    R: ObjectSet
    generators: tuple[ObjectSet, ...]
    complete: bool
    semidownset: bool

    @property
    def context_id(self) -> str:
        return self.context.context_id

    @property
    def masks(self) -> list[int]:
        return [s.bits for s in self.generators]

    def __len__(self) -> int:
        return len(self.generators)

    def __contains__(self, s: ObjectSet) -> bool:
        return s in self.generators


def has_semidownset_property(r: int, masks) -> bool:
    """S in family and T inside S∩R imply S minus T in family."""
    family = set(masks)
    for s in family:
        core = s & r
        sub = core
        while sub:
            if s & ~sub not in family:
                return False
            sub = (sub - 1) & core
    return True


def _co_extent_mask(K: FormalContext, m: int) -> int:
    if not 0 <= m < K.n_attributes:
        raise IndexError(f"attribute index {m} out of range")
    return K.all_objects & ~K.cols[m]


def build_complete_system(K: FormalContext, m: int) -> MixgenSystem:
    """One lex-least co_extent(m)-mixgen per extent; complete and semi-downset."""
    r = _co_extent_mask(K, m)
    masks = kernels.complete_system(K.rows, K.cols, K.n_objects, K.n_attributes, r)
    if any(s < 0 for s in masks):
        raise InvariantViolation("extent without a mixed generator")
    if not has_semidownset_property(r, masks):
        raise InvariantViolation("lex-minimal complete system is not a semi-downset")
    cid = K.context_id
    return MixgenSystem(K, m, ObjectSet(cid, r), tuple(ObjectSet(cid, s) for s in masks),
                        complete=True, semidownset=True)


def validate_system(K: FormalContext, m: int, family) -> MixgenSystem:
    """Check a user-supplied family and return it as a flagged system.

    ``family`` holds ObjectSets of ``K``. Raises DomainError when it is not
    a representative system of co_extent(m)-mixed generators.
    """
    r = _co_extent_mask(K, m)
    masks = [_own(K, s) for s in family]
    if len(set(masks)) != len(masks):
        raise DomainError("family contains duplicates")
    closures = set()
    for s in masks:
        if not _mixgen(K, r, s):
            raise DomainError(f"{K.object_labels(s)} is not a mixed generator")
        c = K.closure_of(s)
        if c in closures:
            raise DomainError(f"two members close to {K.object_labels(c)}")
        closures.add(c)
    complete = closures == set(extent_masks(K))
    cid = K.context_id
    return MixgenSystem(K, m, ObjectSet(cid, r), tuple(ObjectSet(cid, s) for s in masks),
                        complete=complete,
                        semidownset=has_semidownset_property(r, masks))


# -- decomposition -----------------------------------------------------------------

@dataclass(frozen=True)
class Decomposition:
    """The seven-class partition of a system for one split object ``g``.

    ``g`` is None only for the degenerate case of an empty ``R`` (full column
    ``m``), where the edited context equals the original.
    """

    system: MixgenSystem
    g: int | None
    op_context: FormalContext
    classes: dict[str, tuple[ObjectSet, ...]]

    def masks(self, label: str) -> list[int]:
        return [s.bits for s in self.classes[label]]

    def sizes(self) -> dict[str, int]:
        return {k: len(v) for k, v in self.classes.items()}

    def label_of(self, s: ObjectSet) -> str:
        for k, v in self.classes.items():
            if s in v:
                return k
        raise KeyError("not a member of the system")


def not_mixgen_in_op(K: FormalContext, L: FormalContext, m: int, g: int, s: int) -> bool:
    """Characterisation of generators lost by the edit.

    S stops being a mixgen iff S∩R = {h} with h != g and
    (S minus h)^J = S^I ∪ {m}.
    """
    r = K.all_objects & ~K.cols[m]
    core = s & r
    if _popcount(core) != 1 or core == 1 << g:
        return False
    return L.intent_of(s & ~core) == K.intent_of(s) | 1 << m


def decompose(system: MixgenSystem, g: int | None) -> Decomposition:
    K = system.context
    m = system.attribute_m
    r = system.R.bits
    if g is None:
        if r:
            raise DomainError("an object of R must be chosen when R is non-empty")
        L = K
    else:
        if not r >> g & 1:
            raise DomainError(
                f"{K.object_names[g]} does not lack attribute {K.attribute_names[m]}")
        L = apply_op(K, g, m)
    gbit = 0 if g is None else 1 << g

    raw: dict[str, list[int]] = {k: [] for k in CLASS_LABELS}
    members_a: list[int] = []
    for s in system.masks:
        s_i = K.intent_of(s)
        lost = not _mixgen(L, r, s)
        if g is not None and lost != not_mixgen_in_op(K, L, m, g, s):
            raise InvariantViolation(
                f"mixgen status of {K.object_labels(s)} in the edited context "
                "disagrees with its characterisation")
        if lost:
            raw["N"].append(s)
        elif L.intent_of(s) == s_i:
            members_a.append(s)
        elif L.intent_of(s | gbit) == s_i:
            raw["B"].append(s)
        elif r & ~s == 0:
            raw["CR"].append(s)
        else:
            raw["CnotR"].append(s)

    restricted = {s & ~r for s in raw["N"]}
    if system.complete and not restricted <= set(members_a):
        raise InvariantViolation("restriction of a lost generator is not in class A")
    for s in members_a:
        if s in restricted:
            raw["A2"].append(s)
        elif _chi(K, m, s) == r:
            raw["AchiEqR"].append(s)
        else:
            raw["A1"].append(s)

    cid = K.context_id
    classes = {k: tuple(ObjectSet(cid, s) for s in v) for k, v in raw.items()}
    return Decomposition(system, g, L, classes)


# -- Theorem-1 style verification ----------------------------------------------------

@dataclass(frozen=True)
class ImageRecord:
    """One alpha or beta image and its predicted vs computed derivations."""

    generator: ObjectSet
    label: str
    mapping: str
    image: int
    predicted_intent: int
    computed_intent: int
    predicted_extent: int
    computed_extent: int
    mixgen_in_op: bool
    intent_of_original: bool


@dataclass
class Theorem1Report:
    passed: bool
    failure: str | None
    count_original: int
    count_op: int
    size_b: int
    size_c_not_r: int
    bound_checked: bool
    records: list[ImageRecord] = field(default_factory=list)

    @property
    def bound_rhs(self) -> int:
        return self.count_original + self.size_b - self.size_c_not_r

    def bound_line(self) -> str:
        return (f"{self.count_op} >= {self.count_original} + {self.size_b} - "
                f"{self.size_c_not_r} = {self.bound_rhs}")


def verify_theorem1(d: Decomposition) -> Theorem1Report:
    """Check image maps, intent/extent formulas, distinctness and the count bound.

    alpha(S) = S on A ∪ B, beta(S) = S ∪ {g} on A2 ∪ AchiEqR ∪ B. The first
    violated clause is reported; a passing report means every clause held.
    """
    K, L = d.system.context, d.op_context
    m, g = d.system.attribute_m, d.g
    r = d.system.R.bits
    mbit = 1 << m
    gbit = 0 if g is None else 1 << g
    cid = K.context_id
    records: list[ImageRecord] = []
    failure: str | None = None

    def fail(msg: str) -> None:
        nonlocal failure
        if failure is None:
            failure = msg

    def chi_bar_of(s: int) -> int:
        return r & ~_chi(K, m, s)

    in_a = {s for lab in ("A1", "A2", "AchiEqR") for s in d.masks(lab)}
    alpha_dom = [(s, lab) for lab in ("A1", "A2", "AchiEqR", "B") for s in d.masks(lab)]
    beta_dom = [(s, lab) for lab in ("A2", "AchiEqR", "B") for s in d.masks(lab)]
    if g is None:
        beta_dom = []

    for s, lab in alpha_dom:
        s_i = K.intent_of(s)
        pred_int = s_i if s in in_a else s_i | mbit
        pred_ext = s | (chi_bar_of(s) & ~gbit)
        rec = ImageRecord(ObjectSet(cid, s), lab, "alpha", s, pred_int, L.intent_of(s),
                          pred_ext, L.closure_of(s), _mixgen(L, r, s),
                          _is_intent(K, L.intent_of(s)))
        records.append(rec)
    for s, lab in beta_dom:
        s_i = K.intent_of(s)
        img = s | gbit
        pred_int = s_i & ~mbit if s in in_a else s_i
        pred_ext = s | chi_bar_of(s) | gbit
        rec = ImageRecord(ObjectSet(cid, s), lab, "beta", img, pred_int, L.intent_of(img),
                          pred_ext, L.closure_of(img), _mixgen(L, r, img),
                          _is_intent(K, L.intent_of(img)))
        records.append(rec)

    for rec in records:
        name = f"{rec.mapping}({''.join(K.object_labels(rec.generator.bits)) or '{}'})"
        if not rec.mixgen_in_op:
            fail(f"{name} is not a mixed generator in the edited context")
        if rec.predicted_intent != rec.computed_intent:
            fail(f"{name}: intent {K.attribute_labels(rec.computed_intent)} != predicted "
                 f"{K.attribute_labels(rec.predicted_intent)}")
        if rec.predicted_extent != rec.computed_extent:
            fail(f"{name}: extent {K.object_labels(rec.computed_extent)} != predicted "
                 f"{K.object_labels(rec.predicted_extent)}")
        if rec.mapping == "alpha":
            expect_old = rec.label != "B"
        else:
            expect_old = rec.label != "AchiEqR"
        if rec.intent_of_original != expect_old:
            fail(f"{name}: intent-of-original status {rec.intent_of_original}, "
                 f"expected {expect_old}")

    intents = [rec.computed_intent for rec in records]
    if len(set(intents)) != len(intents):
        fail("image intents are not pairwise distinct")

    count_k = count_concepts(K)
    count_l = count_concepts(L)
    if len(set(intents)) > count_l:
        fail("more distinct image intents than concepts in the edited context")
    n_b, n_c = len(d.classes["B"]), len(d.classes["CnotR"])
    bound_checked = d.system.complete
    if bound_checked and count_l < count_k + n_b - n_c:
        fail(f"count bound violated: {count_l} < {count_k} + {n_b} - {n_c}")
    return Theorem1Report(failure is None, failure, count_k, count_l, n_b, n_c,
                          bound_checked, records)


# -- stability across choices of g -----------------------------------------------------

def stability_violations(system: MixgenSystem) -> list[str]:
    """Differences between decompositions for different split objects.

    Empty when AchiEqR, CR and B ∪ CnotR agree for every g in R and the
    chi criteria separate N ∪ A from B ∪ C.
    """
    K, m = system.context, system.attribute_m
    r = system.R.bits
    problems: list[str] = []
    reference = None
    for g in _bits(r):
        d = decompose(system, g)
        key = (frozenset(d.masks("AchiEqR")), frozenset(d.masks("CR")),
               frozenset(d.masks("B") + d.masks("CnotR")))
        if reference is None:
            reference = (g, key)
        elif key != reference[1]:
            problems.append(
                f"classes differ between g={K.object_names[reference[0]]} "
                f"and g={K.object_names[g]}")
        lower = {s for lab in ("N", "A1", "A2", "AchiEqR") for s in d.masks(lab)}
        for s in system.masks:
            c_s, c_res = _chi(K, m, s), _chi(K, m, s & ~r)
            equal = c_s == c_res
            strict = c_s != c_res and c_s & ~c_res == 0
            if (s in lower) != equal or (s not in lower) != strict:
                problems.append(
                    f"chi criterion fails for {K.object_labels(s)} with "
                    f"g={K.object_names[g]}")
    return problems


def check_stability(system: MixgenSystem) -> bool:
    return not stability_violations(system)

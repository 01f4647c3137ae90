"""Brute-force oracles and exhaustive/randomised property campaigns.

Every property is a function of one context returning ``None`` on success
or a message describing the first violation. A campaign runs a selection
of properties over every context up to a given shape plus seeded random
samples, and produces one :class:`VerificationReport` per property.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterator, Sequence

import numpy as np

from richfca.concepts import count_concepts
from richfca.context import (
    FormalContext, _bits, apply_op, contranominal, delete_pair, direct_sum,
)
from richfca.cxt import write_cxt
from richfca.edit_ops import (
    FIXED_POINT, contranominal_summand_size, contrast, find_rich_pair, nop_step,
    noncontranominal_kernel, select_object_theorem2,
)
from richfca.errors import GuardError, RichFCAError
from richfca.figures import figure7
from richfca.mixgen import (
    _chi, _mixgen, build_complete_system, decompose, has_semidownset_property,
    not_mixgen_in_op, stability_violations, verify_theorem1,
)

MAX_ENUM_CELLS = 16
MAX_ORACLE_OBJECTS = 20


# -- oracles -----------------------------------------------------------------------

def _subset_intents(K: FormalContext) -> np.ndarray:
    """Intent of every object subset, indexed by subset bitmask."""
    n = K.n_objects
    if n > MAX_ORACLE_OBJECTS:
        raise GuardError(f"oracle refuses {n} objects (limit {MAX_ORACLE_OBJECTS})")
    if K.n_attributes > 63:
        raise GuardError("oracle supports at most 63 attributes")
    intents = np.empty(1 << n, dtype=np.uint64)
    intents[0] = K.all_attributes
    for g in range(n):
        half = 1 << g
        intents[half:2 * half] = intents[:half] & np.uint64(K.rows[g])
    return intents


def oracle_concept_count(K: FormalContext) -> int:
    """Number of distinct closures over all 2^|G| object subsets.

    Two subsets share a closure exactly when they share an intent, so the
    distinct intents are counted.
    """
    return int(np.unique(_subset_intents(K)).size)


def oracle_is_mixgen(intents: np.ndarray, rows: Sequence[int], n: int, r: int, s: int) -> bool:
    """The mixed-generator definition evaluated on a precomputed intent table."""
    s_int = int(intents[s])
    for i in range(n):
        bit = 1 << i
        if s & bit:
            if r & bit and int(intents[s & ~bit]) == s_int:
                return False
        elif not r & bit and int(intents[s | bit]) == s_int:
            return False
    return True


# -- universes ---------------------------------------------------------------------

def context_from_code(a: int, b: int, code: int) -> FormalContext:
    """The a x b context whose row g is bits g*b .. g*b+b-1 of ``code``."""
    full = (1 << b) - 1
    rows = tuple((code >> (g * b)) & full for g in range(a))
    return FormalContext.from_masks([f"g{i}" for i in range(a)],
                                    [f"m{j}" for j in range(b)], rows)


def enumerate_contexts(a: int, b: int) -> Iterator[FormalContext]:
    """Every a x b context exactly once."""
    if a * b > MAX_ENUM_CELLS:
        raise GuardError(f"{a}x{b} has 2^{a * b} contexts (limit 2^{MAX_ENUM_CELLS})")
    for code in range(1 << (a * b)):
        yield context_from_code(a, b, code)


def cell_bounded_shapes(max_cells: int) -> list[tuple[int, int]]:
    """Shapes (a, b) with a*b <= max_cells and both sides at most max_cells."""
    return [(a, b) for a in range(max_cells + 1) for b in range(max_cells + 1)
            if a * b <= max_cells]


def random_context(a: int, b: int, density: float = 0.5,
                   seed: int | Sequence[int] = 0) -> FormalContext:
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    matrix = rng.random((a, b)) < density
    return FormalContext([f"g{i}" for i in range(a)], [f"m{j}" for j in range(b)], matrix)


# -- shared per-context facts --------------------------------------------------------

class Facts:
    """Lazily computed systems and decompositions for one context."""

    def __init__(self, K: FormalContext):
        self.K = K
        self._count = None
        self._systems = {}
        self._decomps = {}
        self._intents = None

    @property
    def count(self) -> int:
        if self._count is None:
            self._count = count_concepts(self.K)
        return self._count

    @property
    def intents(self) -> np.ndarray:
        if self._intents is None:
            self._intents = _subset_intents(self.K)
        return self._intents

    def co_extent(self, m: int) -> int:
        return self.K.all_objects & ~self.K.cols[m]

    def non_full(self) -> list[int]:
        return [m for m in range(self.K.n_attributes) if self.co_extent(m)]

    def system(self, m: int):
        if m not in self._systems:
            self._systems[m] = build_complete_system(self.K, m)
        return self._systems[m]

    def decomposition(self, m: int, g: int):
        if (m, g) not in self._decomps:
            self._decomps[(m, g)] = decompose(self.system(m), g)
        return self._decomps[(m, g)]

    def decompositions(self) -> Iterator:
        for m in self.non_full():
            for g in _bits(self.co_extent(m)):
                yield m, g, self.decomposition(m, g)

    def mixgens(self, r: int) -> list[int]:
        """All R-mixed generators, by the table oracle."""
        n = self.K.n_objects
        return [s for s in range(1 << n)
                if oracle_is_mixgen(self.intents, self.K.rows, n, r, s)]

    def interesting_r(self) -> list[int]:
        rs = {self.co_extent(m) for m in range(self.K.n_attributes)}
        rs.update({0, self.K.all_objects})
        return sorted(rs)


def _labels(K: FormalContext, s: int) -> str:
    return "{" + ",".join(K.object_labels(s)) + "}"


# -- properties ------------------------------------------------------------------------

def prop_oracle_agreement(f: Facts) -> str | None:
    fast, slow = f.count, oracle_concept_count(f.K)
    if fast != slow:
        return f"count_concepts={fast} but oracle={slow}"
    return None


def prop_doubling(f: Facts) -> str | None:
    K = f.K
    for g, m in K.non_incidences():
        after = count_concepts(apply_op(K, g, m))
        deleted = count_concepts(delete_pair(K, g, m))
        if after != 2 * deleted:
            return f"pair ({K.object_names[g]},{K.attribute_names[m]}): {after} != 2*{deleted}"
    return None


def prop_rich_pair_existence(f: Facts) -> str | None:
    K = f.K
    pair = find_rich_pair(K)
    if pair is None:
        return None if not K.non_incidences() else "no pair returned despite a non-incidence"
    g, m = pair
    if K.incident(g, m):
        return "returned pair is incident"
    if 2 * oracle_concept_count(delete_pair(K, g, m)) < oracle_concept_count(K):
        return f"pair ({K.object_names[g]},{K.attribute_names[m]}) is not rich"
    return None


def prop_theorem2_selection(f: Facts) -> str | None:
    K = f.K
    for m in f.non_full():
        report = select_object_theorem2(K, m, f.system(m))
        for g in _bits(f.co_extent(m)):
            d = f.decomposition(m, g)
            observed = (len(d.classes["CnotR"]), len(d.classes["B"]))
            if report.counts[g] != observed:
                return (f"m={K.attribute_names[m]} g={K.object_names[g]}: counted "
                        f"{report.counts[g]}, decomposition gives {observed}")
        g = report.selected
        inside, outside = report.counts[g]
        if outside < inside:
            return f"m={K.attribute_names[m]}: selected g violates |B| >= |CnotR|"
        if count_concepts(apply_op(K, g, m)) < f.count:
            return f"m={K.attribute_names[m]} g={K.object_names[g]}: edit loses concepts"
    return None


def prop_stability(f: Facts) -> str | None:
    for m in f.non_full():
        problems = stability_violations(f.system(m))
        if problems:
            return f"m={f.K.attribute_names[m]}: {problems[0]}"
    return None


def prop_theorem1(f: Facts) -> str | None:
    for m, g, d in f.decompositions():
        rep = verify_theorem1(d)
        if not rep.passed:
            return f"m={f.K.attribute_names[m]} g={f.K.object_names[g]}: {rep.failure}"
    return None


def prop_mixgen_definition(f: Facts) -> str | None:
    """Engine mixgen test agrees with the table oracle for every R considered."""
    K = f.K
    for r in f.interesting_r():
        expected = set(f.mixgens(r))
        for s in range(1 << K.n_objects):
            if _mixgen(K, r, s) != (s in expected):
                return f"R={_labels(K, r)} S={_labels(K, s)}: engine disagrees with oracle"
    return None


def prop_mixgen_extents(f: Facts) -> str | None:
    K = f.K
    for r in f.interesting_r():
        for s in f.mixgens(r):
            c = K.closure_of(s)
            if (c == s) != ((c & ~s & r) == 0):
                return f"R={_labels(K, r)} S={_labels(K, s)}"
    return None


def prop_disjoint_mixgen_is_extent(f: Facts) -> str | None:
    K = f.K
    for m in range(K.n_attributes):
        r = f.co_extent(m)
        gens = set(f.mixgens(r))
        for s in range(1 << K.n_objects):
            if s & r:
                continue
            if (s in gens) != (K.closure_of(s) == s):
                return f"m={K.attribute_names[m]} S={_labels(K, s)}"
    return None


def prop_unique_mixgen(f: Facts) -> str | None:
    K = f.K
    for r in f.interesting_r():
        gens = f.mixgens(r)
        by_closure: dict[int, list[int]] = {}
        for s in gens:
            by_closure.setdefault(K.closure_of(s), []).append(s)
        for s in gens:
            if K.closure_of(s) == s and by_closure[s] != [s]:
                return f"R={_labels(K, r)} extent {_labels(K, s)} has several mixgens"
    return None


def prop_mixgen_extremal(f: Facts) -> str | None:
    K = f.K
    co_int = [K.all_attributes & ~row for row in K.rows]
    for r in f.interesting_r():
        gens = set(f.mixgens(r))
        for s in gens:
            c = K.closure_of(s)
            for g in range(K.n_objects):
                if s >> g & 1 or not co_int[g]:
                    continue
                if K.closure_of(s | 1 << g) != c | 1 << g:
                    continue
                if any(co_int[g] & co_int[h] for h in _bits(s)):
                    continue
                if not _mixgen(K, r, s | 1 << g):
                    return f"R={_labels(K, r)} S={_labels(K, s)} g={K.object_names[g]}"
    return None


def prop_second_preserved(f: Facts) -> str | None:
    K = f.K
    for m in f.non_full():
        r = f.co_extent(m)
        gens = f.mixgens(r)
        for g in _bits(r):
            L = apply_op(K, g, m)
            for s in gens:
                c = L.closure_of(s)
                for h in range(K.n_objects):
                    if (s | r) >> h & 1:
                        continue
                    if L.closure_of(s | 1 << h) == c:
                        return f"m={K.attribute_names[m]} g={K.object_names[g]} S={_labels(K, s)}"
                if not s & r and not _mixgen(L, r, s):
                    return f"disjoint S={_labels(K, s)} lost in edit at g={K.object_names[g]}"
    return None


def prop_restriction(f: Facts) -> str | None:
    K = f.K
    for r in f.interesting_r():
        for s in f.mixgens(r):
            core = s & r
            sub = core
            while sub:
                if not _mixgen(K, r, s & ~sub):
                    return f"R={_labels(K, r)} S={_labels(K, s)} minus {_labels(K, sub)}"
                sub = (sub - 1) & core
    for m in f.non_full():
        r = f.co_extent(m)
        for s in f.mixgens(r):
            base = s & ~r
            if K.closure_of(base) != base:
                return f"S={_labels(K, s)} restricted is not an extent"
            for g in _bits(r):
                if not _mixgen(apply_op(K, g, m), r, base):
                    return f"S={_labels(K, s)} restricted is not a mixgen after the edit"
    return None


def prop_lost_characterisation(f: Facts) -> str | None:
    K = f.K
    for m in f.non_full():
        r = f.co_extent(m)
        gens = f.mixgens(r)
        for g in _bits(r):
            L = apply_op(K, g, m)
            for s in gens:
                if (not _mixgen(L, r, s)) != not_mixgen_in_op(K, L, m, g, s):
                    return f"m={K.attribute_names[m]} g={K.object_names[g]} S={_labels(K, s)}"
    return None


def prop_restriction_injective(f: Facts) -> str | None:
    for m, g, d in f.decompositions():
        r = f.co_extent(m)
        lost = d.masks("N")
        if len({s & ~r for s in lost}) != len(lost):
            return f"m={f.K.attribute_names[m]} g={f.K.object_names[g]}"
    return None


def prop_chi_separation(f: Facts) -> str | None:
    K = f.K
    for m, g, d in f.decompositions():
        r = f.co_extent(m)
        for s in d.masks("CR"):
            if _chi(K, m, s & ~r) != r:
                return f"CR member {_labels(K, s)} has chi(S minus R) != R"
        for s in d.masks("N"):
            if _chi(K, m, s & ~r) == r:
                return f"N member {_labels(K, s)} has chi(S minus R) == R"
    return None


def prop_closure_relations(f: Facts) -> str | None:
    K = f.K
    for m, g, d in f.decompositions():
        L = d.op_context
        r = f.co_extent(m)
        gbit = 1 << g
        for lab in ("N", "A1", "A2", "AchiEqR", "B", "CR"):
            for s in d.masks(lab):
                ii, jj = K.closure_of(s), L.closure_of(s)
                cbar = r & ~_chi(K, m, s)
                where = f"{lab} member {_labels(K, s)} (m={K.attribute_names[m]}, g={K.object_names[g]})"
                if jj & ~ii & ~cbar or ii & ~s & ~cbar:
                    return f"{where}: closure growth outside chi-bar"
                if lab == "CR" and not (s == ii == jj):
                    return f"{where}: not an extent in both contexts"
                if lab in ("A1", "A2", "AchiEqR") and ii & ~jj:
                    return f"{where}: S^II not inside S^JJ"
                if lab in ("N", "B") and (s & ~(ii & ~gbit) or (ii & ~gbit) & ~jj):
                    return f"{where}: S, S^II minus g, S^JJ not nested"
    return None


def prop_semidownset(f: Facts) -> str | None:
    for m in f.non_full():
        sysm = f.system(m)
        if not has_semidownset_property(sysm.R.bits, sysm.masks):
            return f"m={f.K.attribute_names[m]}"
    return None


def prop_direct_sum(f: Facts) -> str | None:
    K = f.K
    summed = direct_sum(K, contranominal(1, ("x", "y")))
    if count_concepts(summed) != 2 * f.count:
        return "count(K + CN(1)) != 2 count(K)"
    if contranominal_summand_size(summed) != contranominal_summand_size(K) + 1:
        return "CN(1) summand not detected"
    if noncontranominal_kernel(summed).kernel != noncontranominal_kernel(K).kernel:
        return "kernel changed by adding a CN(1) summand"
    return None


def prop_apply_op_locality(f: Facts) -> str | None:
    K = f.K
    for g, m in K.non_incidences():
        L = apply_op(K, g, m)
        for h in range(K.n_objects):
            for n in range(K.n_attributes):
                if h != g and n != m and L.incident(h, n) != K.incident(h, n):
                    return f"edit at ({g},{m}) touched ({h},{n})"
        if L.non_incidences() and [p for p in L.non_incidences() if p[0] == g or p[1] == m] != [(g, m)]:
            return f"edit at ({g},{m}) did not isolate the pair"
    return None


def prop_nop_monotone(f: Facts) -> str | None:
    K = f.K
    nxt, case, _ = nop_step(K)
    if count_concepts(nxt) < f.count:
        return "nop lost concepts"
    c0, c1 = contrast(K), contrast(nxt)
    if not c0 <= c1 <= c0 + 1:
        return f"contrast moved from {c0} to {c1}"
    if case != FIXED_POINT and contranominal_summand_size(nxt) <= contranominal_summand_size(K):
        return "contranominal summand did not grow"
    return None


PROPERTIES: dict[str, Callable[[Facts], str | None]] = {
    "oracle-agreement": prop_oracle_agreement,
    "doubling": prop_doubling,
    "rich-pair-existence": prop_rich_pair_existence,
    "theorem2-selection": prop_theorem2_selection,
    "stability": prop_stability,
    "theorem1": prop_theorem1,
    "mixgen-definition": prop_mixgen_definition,
    "mixgen-extents": prop_mixgen_extents,
    "disjoint-mixgen-extent": prop_disjoint_mixgen_is_extent,
    "unique-mixgen": prop_unique_mixgen,
    "mixgen-extremal": prop_mixgen_extremal,
    "second-condition-preserved": prop_second_preserved,
    "restriction": prop_restriction,
    "lost-generator-characterisation": prop_lost_characterisation,
    "restriction-injective": prop_restriction_injective,
    "chi-separation": prop_chi_separation,
    "closure-relations": prop_closure_relations,
    "semi-downset": prop_semidownset,
    "direct-sum": prop_direct_sum,
    "apply-op-locality": prop_apply_op_locality,
    "nop-monotone": prop_nop_monotone,
}

SUITES = {
    "all": tuple(PROPERTIES),
    "core": ("oracle-agreement", "doubling", "rich-pair-existence",
             "theorem2-selection", "stability"),
}


# -- campaign -------------------------------------------------------------------------------

@dataclass
class VerificationReport:
    property: str
    universe: str
    passed: bool
    checked: int
    failures: int = 0
    message: str | None = None
    counterexample: str | None = None
    seed: int | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


@dataclass(frozen=True)
class Scope:
    """Exhaustive shapes up to ``max_objects`` x ``max_attributes`` plus samples."""

    max_objects: int = 4
    max_attributes: int = 4
    min_size: int = 0
    samples: int = 0
    sample_shape: tuple[int, int] = (5, 5)
    density: float = 0.5
    seed: int = 0

    def shapes(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.min_size, self.max_objects + 1)
                for b in range(self.min_size, self.max_attributes + 1)]

    def describe(self) -> str:
        parts = []
        if self.max_objects >= 0 and self.max_attributes >= 0:
            parts.append(f"all contexts with a<={self.max_objects}, b<={self.max_attributes}")
        if self.samples:
            a, b = self.sample_shape
            parts.append(f"{self.samples} random {a}x{b} (density {self.density}, seed {self.seed})")
        return "; ".join(parts)

    def check(self) -> None:
        for a, b in self.shapes():
            if a * b > MAX_ENUM_CELLS:
                raise GuardError(f"exhaustive {a}x{b} exceeds 2^{MAX_ENUM_CELLS} contexts")


@dataclass
class _Tally:
    checked: int = 0
    failures: int = 0
    message: str | None = None
    witness: FormalContext | None = None


def _units(scope: Scope, chunk: int) -> list[tuple]:
    units = []
    for a, b in scope.shapes():
        total = 1 << (a * b)
        for lo in range(0, total, chunk):
            units.append(("enum", a, b, lo, min(total, lo + chunk)))
    for lo in range(0, scope.samples, max(1, chunk // 16)):
        units.append(("sample", lo, min(scope.samples, lo + max(1, chunk // 16))))
    return units


def _unit_contexts(scope: Scope, unit: tuple) -> Iterator[FormalContext]:
    if unit[0] == "enum":
        _, a, b, lo, hi = unit
        for code in range(lo, hi):
            yield context_from_code(a, b, code)
    else:
        _, lo, hi = unit
        a, b = scope.sample_shape
        for i in range(lo, hi):
            yield random_context(a, b, scope.density, (scope.seed, i))


def _run_unit(args) -> dict[str, _Tally]:
    scope, unit, names = args
    tallies = {n: _Tally() for n in names}
    for K in _unit_contexts(scope, unit):
        facts = Facts(K)
        for n in names:
            t = tallies[n]
            t.checked += 1
            try:
                msg = PROPERTIES[n](facts)
            except RichFCAError as exc:
                msg = f"{type(exc).__name__}: {exc}"
            if msg is not None:
                t.failures += 1
                if t.witness is None:
                    t.message, t.witness = msg, K
    return tallies


def shrink(K: FormalContext, name: str) -> tuple[FormalContext, str]:
    """Best effort: descend to delete_pair children that still fail."""
    check = PROPERTIES[name]

    def failing(C: FormalContext) -> str | None:
        try:
            return check(Facts(C))
        except RichFCAError as exc:
            return f"{type(exc).__name__}: {exc}"

    msg = failing(K) or ""
    improved = True
    while improved and K.n_objects and K.n_attributes:
        improved = False
        for g in range(K.n_objects):
            for m in range(K.n_attributes):
                child = delete_pair(K, g, m)
                child_msg = failing(child)
                if child_msg is not None:
                    K, msg, improved = child, child_msg, True
                    break
            if improved:
                break
    return K, msg


def run_property_suite(scope: Scope, properties: Sequence[str] | None = None,
                       jobs: int | None = None, chunk: int = 4096) -> list[VerificationReport]:
    """Run the selected properties over the scope; reports sorted by name."""
    scope.check()
    names = list(properties) if properties is not None else list(PROPERTIES)
    unknown = [n for n in names if n not in PROPERTIES]
    if unknown:
        raise KeyError(f"unknown properties: {unknown}")
    units = [(scope, u, names) for u in _units(scope, chunk)]
    jobs = jobs or os.cpu_count() or 1
    if jobs == 1 or len(units) == 1:
        results = map(_run_unit, units)
    else:
        pool = ProcessPoolExecutor(max_workers=jobs)
        results = pool.map(_run_unit, units)
    merged = {n: _Tally() for n in names}
    for tallies in results:
        for n, t in tallies.items():
            m = merged[n]
            m.checked += t.checked
            m.failures += t.failures
            if m.witness is None and t.witness is not None:
                m.message, m.witness = t.message, t.witness
    if jobs != 1 and len(units) != 1:
        pool.shutdown()

    reports = []
    for n in sorted(names):
        t = merged[n]
        cex = None
        msg = t.message
        if t.witness is not None:
            small, msg = shrink(t.witness, n)
            cex = write_cxt(small)
        reports.append(VerificationReport(n, scope.describe(), t.failures == 0, t.checked,
                                          t.failures, msg, cex, scope.seed))
    return reports


# -- targeted checks -------------------------------------------------------------------------

def fig7_resistance() -> VerificationReport:
    """Every single edit of the resistant context keeps exactly 22 concepts."""
    K = figure7()
    base = count_concepts(K)
    bad = [(g, m) for g, m in K.non_incidences() if count_concepts(apply_op(K, g, m)) != base]
    msg = None
    if base != 22:
        msg = f"context has {base} concepts, expected 22"
    elif bad:
        g, m = bad[0]
        msg = f"edit at ({K.object_names[g]},{K.attribute_names[m]}) changes the count"
    return VerificationReport("fig7-resistance", f"{len(K.non_incidences())} non-incident pairs",
                              msg is None, len(K.non_incidences()), len(bad), msg,
                              None if msg is None else write_cxt(K))


def albano_bound(a: int, c: int) -> int:
    return sum(math.comb(a, i) for i in range(c))


@dataclass
class ExtremalReport:
    a: int
    b: int
    c: int
    class_size: int
    max_count: int
    extremal_count: int
    has_cn_witness: bool
    witness: str | None
    bound: int
    bound_ok: bool
    extremal_contrasts: dict[int, int] = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def _scan_shape(args) -> list[tuple[int, int, int]]:
    a, b, lo, hi = args
    out = []
    for code in range(lo, hi):
        K = context_from_code(a, b, code)
        out.append((code, contrast(K), count_concepts(K)))
    return out


_TABLES: dict[tuple[int, int], list[tuple[int, int, int]]] = {}


def _contrast_table(a: int, b: int, jobs: int | None) -> list[tuple[int, int, int]]:
    """(code, contrast, concept count) for every a x b context, cached per shape."""
    if (a, b) in _TABLES:
        return _TABLES[(a, b)]
    if a * b > MAX_ENUM_CELLS:
        raise GuardError(f"{a}x{b} exceeds 2^{MAX_ENUM_CELLS} contexts")
    total = 1 << (a * b)
    step = 4096
    parts = [(a, b, lo, min(total, lo + step)) for lo in range(0, total, step)]
    jobs = jobs or os.cpu_count() or 1
    if jobs == 1 or len(parts) == 1:
        chunks = list(map(_scan_shape, parts))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_scan_shape, parts))
    table = [row for chunk in chunks for row in chunk]
    _TABLES[(a, b)] = table
    return table


def extremal_search(a: int, b: int, c: int, jobs: int | None = None,
                    table: list[tuple[int, int, int]] | None = None) -> ExtremalReport:
    """Maximum concept count among a x b contexts without CN(c)."""
    if c < 1 or c > min(a, b) + 1:
        raise GuardError("need 1 <= c <= min(a, b) + 1")
    rows = table if table is not None else _contrast_table(a, b, jobs)
    members = [(code, k, n) for code, k, n in rows if k < c]
    best = max(n for _, _, n in members)
    extremal = [(code, k) for code, k, n in members if n == best]
    hist: dict[int, int] = {}
    for _, k in extremal:
        hist[k] = hist.get(k, 0) + 1
    witness_code = next((code for code, k in extremal if k == c - 1), None)
    has_witness = witness_code is not None
    if witness_code is None:
        witness_code = extremal[0][0]
    bound = albano_bound(a, c)
    return ExtremalReport(a, b, c, len(members), best, len(extremal), has_witness,
                          write_cxt(context_from_code(a, b, witness_code)), bound,
                          best <= bound, hist)


def check_albano_bound(a: int, c: int, max_b: int = 4, jobs: int | None = None) -> VerificationReport:
    """No enumerated CN(c)-free context on ``a`` objects beats sum_{i<c} C(a, i)."""
    bound = albano_bound(a, c)
    checked = 0
    failures = 0
    cex = None
    msg = None
    for b in range(0, max_b + 1):
        if a * b > MAX_ENUM_CELLS:
            raise GuardError(f"{a}x{b} exceeds 2^{MAX_ENUM_CELLS} contexts")
        for code, k, n in _contrast_table(a, b, jobs):
            if k >= c:
                continue
            checked += 1
            if n > bound:
                failures += 1
                if cex is None:
                    cex = write_cxt(context_from_code(a, b, code))
                    msg = f"{a}x{b} context with {n} > {bound} concepts"
    return VerificationReport(f"albano-bound(a={a},c={c})",
                              f"all {a}x b contexts, b<={max_b}, without CN({c})",
                              failures == 0, checked, failures, msg, cex)

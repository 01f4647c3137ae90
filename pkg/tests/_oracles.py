"""Brute-force reference implementations on frozensets.

Nothing here imports the package. Contexts are (objects, attributes, incidence)
with incidence a set of (object, attribute) pairs, so every answer is derived
straight from the definitions.
"""

from __future__ import annotations

from itertools import combinations, permutations


class Ctx:
    def __init__(self, objects, attributes, pairs):
        self.G = tuple(objects)
        self.M = tuple(attributes)
        self.I = frozenset(pairs)

    @classmethod
    def from_rows(cls, rows, objects=None, attributes=None):
        objects = objects or [f"g{i}" for i in range(len(rows))]
        attributes = attributes or [f"m{j}" for j in range(len(rows[0]) if rows else 0)]
        pairs = {(objects[i], attributes[j]) for i, row in enumerate(rows)
                 for j, c in enumerate(row) if c in "Xx"}
        return cls(objects, attributes, pairs)

    def up(self, S):
        return frozenset(m for m in self.M if all((g, m) in self.I for g in S))

    def down(self, B):
        return frozenset(g for g in self.G if all((g, m) in self.I for m in B))

    def close(self, S):
        return self.down(self.up(S))


def subsets(xs):
    xs = list(xs)
    for k in range(len(xs) + 1):
        for c in combinations(xs, k):
            yield frozenset(c)


def extents(K: Ctx) -> set:
    return {K.close(S) for S in subsets(K.G)}


def concept_count(K: Ctx) -> int:
    return len(extents(K))


def delete_pair(K: Ctx, g, m) -> Ctx:
    G = [x for x in K.G if x != g]
    M = [y for y in K.M if y != m]
    return Ctx(G, M, {(x, y) for x, y in K.I if x != g and y != m})


def apply_op(K: Ctx, g, m) -> Ctx:
    """g gets every attribute but m, m gets every object but g."""
    pairs = {(x, y) for x, y in K.I if x != g and y != m}
    pairs |= {(g, y) for y in K.M if y != m}
    pairs |= {(x, m) for x in K.G if x != g}
    return Ctx(K.G, K.M, pairs)


def co_extent(K: Ctx, m) -> frozenset:
    return frozenset(g for g in K.G if (g, m) not in K.I)


def is_mixgen(K: Ctx, R, S) -> bool:
    S, R = frozenset(S), frozenset(R)
    c = K.close(S)
    for h in S & R:
        if K.close(S - {h}) == c:
            return False
    for h in set(K.G) - S - R:
        if K.close(S | {h}) == c:
            return False
    return True


def chi(K: Ctx, m, S) -> frozenset:
    up = K.up(S)
    return frozenset(h for h in co_extent(K, m)
                     if any((h, n) not in K.I and n != m for n in up))


def lectic_less(a, b, order) -> bool:
    """Lectic order: at the first differing element the set lacking it is smaller."""
    for x in order:
        if (x in a) != (x in b):
            return x in b
    return False


def lex_min_mixgen(K: Ctx, R, A):
    best = None
    for S in subsets(A):
        if K.close(S) == A and is_mixgen(K, R, S):
            if best is None or lectic_less(S, best, K.G):
                best = S
    return best


def contrast(K: Ctx) -> int:
    """Largest k with k objects and k attributes forming a contranominal scale."""
    best = 0
    for k in range(1, min(len(K.G), len(K.M)) + 1):
        found = False
        for gs in combinations(K.G, k):
            for ms in combinations(K.M, k):
                for perm in permutations(ms):
                    if all(((g, n) in K.I) != (n == perm[i])
                           for i, g in enumerate(gs) for n in ms):
                        found = True
                        break
                if found:
                    break
            if found:
                break
        if not found:
            break
        best = k
    return best


def splitting_pairs(K: Ctx) -> list:
    out = []
    for g in K.G:
        missing = [m for m in K.M if (g, m) not in K.I]
        if len(missing) == 1 and co_extent(K, missing[0]) == {g}:
            out.append((g, missing[0]))
    return out

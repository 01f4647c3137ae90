"""Pure-Python kernels over bitmask-encoded contexts.

A context is passed as ``rows`` (one attribute mask per object) and ``cols``
(one object mask per attribute). Bit ``i`` of an object mask stands for
object ``i``. Works for any size since Python ints are unbounded.

``_ckernels.pyx`` mirrors every function here with the same signature.
"""

from __future__ import annotations

from typing import Sequence


def intent(rows: Sequence[int], n_attr: int, extent: int) -> int:
    result = (1 << n_attr) - 1
    i = 0
    while extent:
        if extent & 1:
            result &= rows[i]
        extent >>= 1
        i += 1
    return result


def extent(cols: Sequence[int], n_obj: int, intent_: int) -> int:
    result = (1 << n_obj) - 1
    j = 0
    while intent_:
        if intent_ & 1:
            result &= cols[j]
        intent_ >>= 1
        j += 1
    return result


def closure(rows: Sequence[int], cols: Sequence[int], n_obj: int, n_attr: int,
            objs: int) -> int:
    return extent(cols, n_obj, intent(rows, n_attr, objs))


def _next_extent(rows, cols, n_obj, n_attr, current):
    # Lectic successor: object 0 is the most significant position.
    a = current
    for i in range(n_obj - 1, -1, -1):
        bit = 1 << i
        if a & bit:
            a &= ~bit
            continue
        b = closure(rows, cols, n_obj, n_attr, a | bit)
        if (b & ~a) & (bit - 1) == 0:
            return b
    return -1


def list_extents(rows: Sequence[int], cols: Sequence[int], n_obj: int,
                 n_attr: int) -> list[int]:
    """All extents in increasing lectic order (NextClosure)."""
    full = (1 << n_obj) - 1
    a = closure(rows, cols, n_obj, n_attr, 0)
    out = [a]
    while a != full:
        a = _next_extent(rows, cols, n_obj, n_attr, a)
        out.append(a)
    return out


def count_concepts(rows: Sequence[int], cols: Sequence[int], n_obj: int,
                   n_attr: int) -> int:
    full = (1 << n_obj) - 1
    a = closure(rows, cols, n_obj, n_attr, 0)
    n = 1
    while a != full:
        a = _next_extent(rows, cols, n_obj, n_attr, a)
        n += 1
    return n


def is_mixgen(rows: Sequence[int], cols: Sequence[int], n_obj: int, n_attr: int,
              r: int, s: int) -> bool:
    """R-mixed generator test; closures compared through intents."""
    s_int = intent(rows, n_attr, s)
    for i in range(n_obj):
        bit = 1 << i
        if s & bit:
            if r & bit and intent(rows, n_attr, s & ~bit) == s_int:
                return False
        elif not r & bit:
            if s_int & ~rows[i] == 0:
                return False
    return True


def lex_min_mixgen(rows: Sequence[int], cols: Sequence[int], n_obj: int,
                   n_attr: int, r: int, a: int) -> int:
    """Lex-least R-mixgen whose closure is ``a``; -1 if ``a`` has none.

    Subsets of ``a`` are scanned in lex order: with members a_0 < ... < a_{k-1},
    counter bit ``k-1-j`` selects a_j, so counting up walks the order.
    """
    members = [i for i in range(n_obj) if a >> i & 1]
    k = len(members)
    a_int = intent(rows, n_attr, a)
    for t in range(1 << k):
        s = 0
        for j in range(k):
            if t >> (k - 1 - j) & 1:
                s |= 1 << members[j]
        if intent(rows, n_attr, s) != a_int:
            continue
        if is_mixgen(rows, cols, n_obj, n_attr, r, s):
            return s
    return -1


def complete_system(rows: Sequence[int], cols: Sequence[int], n_obj: int,
                    n_attr: int, r: int) -> list[int]:
    """Lex-least R-mixgen of every extent, extents taken in lectic order."""
    return [lex_min_mixgen(rows, cols, n_obj, n_attr, r, a)
            for a in list_extents(rows, cols, n_obj, n_attr)]

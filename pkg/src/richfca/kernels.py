"""Backend selection for the hot loops.

The compiled ``_ckernels`` extension is used when it was built and the
context fits its 64-bit masks; otherwise the pure-Python ``_pykernels``
run. Set ``RICHFCA_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from richfca import _pykernels

_compiled = None
if not os.environ.get("RICHFCA_PURE_PYTHON"):
    try:
        from richfca import _ckernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"

# Lex-min results are returned as signed 64-bit values by the extension.
_MAX_OBJ = 62
_MAX_ATTR = 64


def _impl(n_obj: int, n_attr: int):
    if _compiled is not None and n_obj <= _MAX_OBJ and n_attr <= _MAX_ATTR:
        return _compiled
    return _pykernels


def count_concepts(rows, cols, n_obj, n_attr):
    return _impl(n_obj, n_attr).count_concepts(rows, cols, n_obj, n_attr)


def list_extents(rows, cols, n_obj, n_attr):
    return _impl(n_obj, n_attr).list_extents(rows, cols, n_obj, n_attr)


def is_mixgen(rows, cols, n_obj, n_attr, r, s):
    return _impl(n_obj, n_attr).is_mixgen(rows, cols, n_obj, n_attr, r, s)


def lex_min_mixgen(rows, cols, n_obj, n_attr, r, a):
    return _impl(n_obj, n_attr).lex_min_mixgen(rows, cols, n_obj, n_attr, r, a)


def complete_system(rows, cols, n_obj, n_attr, r):
    return _impl(n_obj, n_attr).complete_system(rows, cols, n_obj, n_attr, r)

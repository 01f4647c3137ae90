# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_pykernels`` for contexts with at most 64 objects/attributes."""

from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64


cdef inline u64 _full(int n):
    if n >= 64:
        return <u64>0xFFFFFFFFFFFFFFFF
    return ((<u64>1) << n) - 1


cdef inline u64 _intent(const u64* rows, int n_obj, u64 full_attr, u64 ext) nogil:
    cdef u64 res = full_attr
    cdef int i = 0
    while ext:
        if ext & 1:
            res &= rows[i]
        ext >>= 1
        i += 1
    return res


cdef inline u64 _extent(const u64* cols, int n_attr, u64 full_obj, u64 itt) nogil:
    cdef u64 res = full_obj
    cdef int j = 0
    while itt:
        if itt & 1:
            res &= cols[j]
        itt >>= 1
        j += 1
    return res


cdef inline u64 _closure(const u64* rows, const u64* cols, int n_obj, int n_attr,
                         u64 full_obj, u64 full_attr, u64 objs) nogil:
    return _extent(cols, n_attr, full_obj, _intent(rows, n_obj, full_attr, objs))


cdef inline bint _next_extent(const u64* rows, const u64* cols, int n_obj, int n_attr,
                              u64 full_obj, u64 full_attr, u64* cur) nogil:
    cdef u64 a = cur[0]
    cdef u64 b, bit
    cdef int i
    for i in range(n_obj - 1, -1, -1):
        bit = (<u64>1) << i
        if a & bit:
            a &= ~bit
            continue
        b = _closure(rows, cols, n_obj, n_attr, full_obj, full_attr, a | bit)
        if ((b & ~a) & (bit - 1)) == 0:
            cur[0] = b
            return True
    return False


cdef class _Ctx:
    cdef u64* rows
    cdef u64* cols
    cdef int n_obj, n_attr
    cdef u64 full_obj, full_attr

    def __cinit__(self, rows, cols, int n_obj, int n_attr):
        if n_obj > 64 or n_attr > 64:
            raise ValueError("compiled kernels support at most 64 objects/attributes")
        self.n_obj = n_obj
        self.n_attr = n_attr
        self.full_obj = _full(n_obj)
        self.full_attr = _full(n_attr)
        self.rows = <u64*> malloc((n_obj + 1) * sizeof(u64))
        self.cols = <u64*> malloc((n_attr + 1) * sizeof(u64))
        if self.rows == NULL or self.cols == NULL:
            raise MemoryError()
        cdef int i
        for i in range(n_obj):
            self.rows[i] = rows[i]
        for i in range(n_attr):
            self.cols[i] = cols[i]

    def __dealloc__(self):
        free(self.rows)
        free(self.cols)

    cdef bint is_mixgen(self, u64 r, u64 s) nogil:
        cdef u64 s_int = _intent(self.rows, self.n_obj, self.full_attr, s)
        cdef u64 bit
        cdef int i
        for i in range(self.n_obj):
            bit = (<u64>1) << i
            if s & bit:
                if (r & bit) and _intent(self.rows, self.n_obj, self.full_attr, s & ~bit) == s_int:
                    return False
            elif not (r & bit):
                if (s_int & ~self.rows[i]) == 0:
                    return False
        return True

    cdef long long lex_min(self, u64 r, u64 a) nogil:
        cdef int members[64]
        cdef int k = 0
        cdef int i, j
        cdef u64 t, s, limit
        cdef u64 a_int = _intent(self.rows, self.n_obj, self.full_attr, a)
        for i in range(self.n_obj):
            if (a >> i) & 1:
                members[k] = i
                k += 1
        if k >= 63:
            return -2
        limit = (<u64>1) << k
        t = 0
        while t < limit:
            s = 0
            for j in range(k):
                if (t >> (k - 1 - j)) & 1:
                    s |= (<u64>1) << members[j]
            if _intent(self.rows, self.n_obj, self.full_attr, s) == a_int:
                if self.is_mixgen(r, s):
                    return <long long> s
            t += 1
        return -1


def intent(rows, int n_attr, extent):
    cdef u64 res = _full(n_attr)
    cdef u64 e = extent
    cdef int i = 0
    while e:
        if e & 1:
            res &= <u64> rows[i]
        e >>= 1
        i += 1
    return res


def extent(cols, int n_obj, intent_):
    cdef u64 res = _full(n_obj)
    cdef u64 t = intent_
    cdef int j = 0
    while t:
        if t & 1:
            res &= <u64> cols[j]
        t >>= 1
        j += 1
    return res


def closure(rows, cols, int n_obj, int n_attr, objs):
    return extent(cols, n_obj, intent(rows, n_attr, objs))


def list_extents(rows, cols, int n_obj, int n_attr):
    cdef _Ctx c = _Ctx(rows, cols, n_obj, n_attr)
    cdef u64 a = _closure(c.rows, c.cols, n_obj, n_attr, c.full_obj, c.full_attr, 0)
    out = [a]
    while a != c.full_obj:
        _next_extent(c.rows, c.cols, n_obj, n_attr, c.full_obj, c.full_attr, &a)
        out.append(a)
    return out


def count_concepts(rows, cols, int n_obj, int n_attr):
    cdef _Ctx c = _Ctx(rows, cols, n_obj, n_attr)
    cdef u64 a
    cdef long long n = 1
    with nogil:
        a = _closure(c.rows, c.cols, n_obj, n_attr, c.full_obj, c.full_attr, 0)
        while a != c.full_obj:
            _next_extent(c.rows, c.cols, n_obj, n_attr, c.full_obj, c.full_attr, &a)
            n += 1
    return n


def is_mixgen(rows, cols, int n_obj, int n_attr, r, s):
    cdef _Ctx c = _Ctx(rows, cols, n_obj, n_attr)
    return c.is_mixgen(r, s)


def lex_min_mixgen(rows, cols, int n_obj, int n_attr, r, a):
    cdef _Ctx c = _Ctx(rows, cols, n_obj, n_attr)
    cdef long long res = c.lex_min(r, a)
    if res == -2:
        raise ValueError("extent too large for exhaustive generator scan")
    return res


def complete_system(rows, cols, int n_obj, int n_attr, r):
    cdef _Ctx c = _Ctx(rows, cols, n_obj, n_attr)
    cdef u64 rr = r
    cdef u64 a = _closure(c.rows, c.cols, n_obj, n_attr, c.full_obj, c.full_attr, 0)
    cdef long long s
    out = []
    while True:
        s = c.lex_min(rr, a)
        if s == -2:
            raise ValueError("extent too large for exhaustive generator scan")
        out.append(s)
        if a == c.full_obj:
            break
        _next_extent(c.rows, c.cols, n_obj, n_attr, c.full_obj, c.full_attr, &a)
    return out

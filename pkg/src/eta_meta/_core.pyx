# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernel backend: dense integer element codes, three multiplication
laws, and the batch routines the brute-force counting leans on.  Mirrors the
`_purepy` fallback exactly."""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "compiled"

MC = 0
DP = 1
TBL = 2

ctypedef cnp.int64_t i64
ctypedef cnp.int32_t i32


cdef class Law:
    cdef public int kind
    cdef public long long n, identity, pa, pb, carry
    cdef i64[::1] r_pows
    cdef i64[::1] rinv_pows
    cdef i32[:, ::1] table
    cdef i64[::1] inv_table

    def __init__(self, kind, n, identity, pa=0, pb=0, carry=0,
                 r_pows=None, rinv_pows=None, table=None, inv_table=None):
        self.kind = kind
        self.n = n
        self.identity = identity
        self.pa = pa
        self.pb = pb
        self.carry = carry
        if r_pows is not None:
            self.r_pows = r_pows
        if rinv_pows is not None:
            self.rinv_pows = rinv_pows
        if table is not None:
            self.table = table
        if inv_table is not None:
            self.inv_table = inv_table


cdef inline long long _mul(Law law, long long g, long long h) noexcept:
    cdef long long pa, b1, a1, b2, a2, b, a
    if law.kind == MC:
        pa = law.pa
        b1 = g / pa; a1 = g % pa
        b2 = h / pa; a2 = h % pa
        b = b1 + b2
        a = (a1 * law.r_pows[b2] + a2) % pa
        if b >= law.pb:
            b -= law.pb
            a = (a + law.carry) % pa
        return b * pa + a
    if law.kind == DP:
        pa = law.pa
        b1 = g / pa; a1 = g % pa
        b2 = h / pa; a2 = h % pa
        return (a1 + a2) % pa + pa * ((b1 + b2) % law.pb)
    return law.table[g, h]


cdef inline long long _inv(Law law, long long g) noexcept:
    cdef long long pa, b1, a1, b, a
    if law.kind == MC:
        pa = law.pa
        b1 = g / pa; a1 = g % pa
        if b1 == 0:
            return (pa - a1) % pa
        b = law.pb - b1
        a = ((-(a1 + law.carry)) * law.rinv_pows[b1]) % pa
        if a < 0:
            a += pa
        return b * pa + a
    if law.kind == DP:
        pa = law.pa
        b1 = g / pa; a1 = g % pa
        return (pa - a1) % pa + pa * ((law.pb - b1) % law.pb)
    return law.inv_table[g]


def mc_law(pa, pb, r, carry):
    r = r % pa
    rinv = pow(r, -1, pa)
    r_pows = np.empty(pb, dtype=np.int64)
    rinv_pows = np.empty(pb, dtype=np.int64)
    acc = accinv = 1
    for k in range(pb):
        r_pows[k] = acc
        rinv_pows[k] = accinv
        acc = acc * r % pa
        accinv = accinv * rinv % pa
    return Law(MC, pa * pb, 0, pa=pa, pb=pb, carry=carry % pa,
               r_pows=r_pows, rinv_pows=rinv_pows)


def dp_law(pa, pb):
    return Law(DP, pa * pb, 0, pa=pa, pb=pb)


def table_law(table, identity):
    table = np.ascontiguousarray(table, dtype=np.int32)
    n = table.shape[0]
    inv_table = np.empty(n, dtype=np.int64)
    rows, cols = np.nonzero(table == identity)
    inv_table[rows] = cols
    return Law(TBL, n, identity, table=table, inv_table=inv_table)


def mul(Law law, g, h):
    return _mul(law, g, h)


def inv(Law law, g):
    return _inv(law, g)


def power(Law law, g, k):
    cdef long long res, base, kk
    if k < 0:
        g = _inv(law, g)
        k = -k
    res = law.identity
    base = g
    kk = k
    while kk:
        if kk & 1:
            res = _mul(law, res, base)
        base = _mul(law, base, base)
        kk >>= 1
    return res


def mul_many(Law law, gs, hs):
    cdef i64[::1] gv = np.ascontiguousarray(gs, dtype=np.int64)
    cdef i64[::1] hv = np.ascontiguousarray(hs, dtype=np.int64)
    cdef Py_ssize_t i, m = gv.shape[0]
    out = np.empty(m, dtype=np.int64)
    cdef i64[::1] ov = out
    for i in range(m):
        ov[i] = _mul(law, gv[i], hv[i])
    return out


def power_map(Law law, k):
    cdef long long n = law.n
    cdef Py_ssize_t i
    cdef long long kk = k, res, base, g
    out = np.empty(n, dtype=np.int64)
    cdef i64[::1] ov = out
    for i in range(n):
        res = law.identity
        base = i
        kk = k
        while kk:
            if kk & 1:
                res = _mul(law, res, base)
            base = _mul(law, base, base)
            kk >>= 1
        ov[i] = res
    return out


def conj_map(Law law, h):
    cdef long long hh = h, hi = _inv(law, h)
    cdef long long n = law.n
    cdef Py_ssize_t i
    out = np.empty(n, dtype=np.int64)
    cdef i64[::1] ov = out
    for i in range(n):
        ov[i] = _mul(law, _mul(law, hi, i), hh)
    return out


def element_orders(Law law, p):
    cdef long long n = law.n, ident = law.identity, pp = p
    cdef Py_ssize_t i
    cdef long long cur, o
    out = np.empty(n, dtype=np.int64)
    cdef i64[::1] ov = out
    cdef i64[::1] pm = power_map(law, p)
    for i in range(n):
        cur = i
        o = 1
        while cur != ident:
            o *= pp
            cur = pm[cur]
        ov[i] = o
    return out


def cyclic_index(Law law, p):
    """See _purepy.cyclic_index."""
    cdef long long n = law.n, ident = law.identity, pp = p
    cdef long long g, cur, m, k, sid
    gen_to_sub = np.full(n, -1, dtype=np.int64)
    cdef i64[::1] gts = gen_to_sub
    chain_arr = np.empty(n, dtype=np.int64)
    cdef i64[::1] chain = chain_arr
    sub_gen = []
    sub_order = []
    for g in range(n):
        if gts[g] >= 0:
            continue
        cur = g
        m = 0
        while True:
            chain[m] = cur
            m += 1
            if cur == ident:
                break
            cur = _mul(law, cur, g)
        sid = len(sub_gen)
        sub_gen.append(g)
        sub_order.append(m)
        for k in range(1, m + 1):
            if k % pp:
                gts[chain[k - 1]] = sid
    return (gen_to_sub, np.array(sub_gen, dtype=np.int64),
            np.array(sub_order, dtype=np.int64))


def cyclic_elements(Law law, g):
    cdef long long ident = law.identity, cur = g, gg = g, m = 1
    buf_arr = np.empty(law.n, dtype=np.int64)
    cdef i64[::1] buf = buf_arr
    buf[0] = ident
    while cur != ident:
        buf[m] = cur
        m += 1
        cur = _mul(law, cur, gg)
    out = buf_arr[:m].copy()
    out.sort()
    return out


def closure(Law law, seeds):
    cdef i64[::1] sv = np.ascontiguousarray(seeds, dtype=np.int64)
    cdef long long n = law.n
    cdef Py_ssize_t nseeds = sv.shape[0]
    cdef long long head = 0, count = 1, g, h
    cdef Py_ssize_t j
    member_arr = np.zeros(n, dtype=np.uint8)
    cdef cnp.uint8_t[::1] member = member_arr
    queue_arr = np.empty(n, dtype=np.int64)
    cdef i64[::1] queue = queue_arr
    member[law.identity] = 1
    queue[0] = law.identity
    while head < count:
        g = queue[head]
        head += 1
        for j in range(nseeds):
            h = _mul(law, g, sv[j])
            if not member[h]:
                member[h] = 1
                queue[count] = h
                count += 1
    out = queue_arr[:count].copy()
    out.sort()
    return out


def subset_mul_table(Law law, elems):
    cdef i64[::1] ev = np.ascontiguousarray(elems, dtype=np.int64)
    cdef Py_ssize_t m = ev.shape[0], i, j
    cdef long long prod, lo, hi, mid
    out = np.empty((m, m), dtype=np.int32)
    cdef i32[:, ::1] ov = out
    for i in range(m):
        for j in range(m):
            prod = _mul(law, ev[i], ev[j])
            lo = 0
            hi = m - 1
            while lo < hi:
                mid = (lo + hi) >> 1
                if ev[mid] < prod:
                    lo = mid + 1
                else:
                    hi = mid
            if ev[lo] != prod:
                raise ValueError("subset is not closed under multiplication")
            ov[i, j] = <i32>lo
    return out

"""Pure-Python kernel backend.

Same surface as the compiled `_core` extension: dense integer element codes,
three multiplication laws (two-generator normal forms, direct products of two
cyclic factors, and explicit tables), and the batch routines the oracle leans
on.  numpy is used where the work vectorizes; the chain/closure walks are
plain loops.
"""

from __future__ import annotations

import numpy as np

BACKEND = "purepy"

MC = 0  # normal forms y^b x^a, code = a + pa*b
DP = 1  # direct product C_pa x C_pb, code = i + pa*j
TBL = 2  # explicit multiplication table over indices


class Law:
    __slots__ = ("kind", "n", "identity", "pa", "pb", "carry",
                 "r_pows", "rinv_pows", "table", "inv_table")

    def __init__(self, kind, n, identity, pa=0, pb=0, carry=0,
                 r_pows=None, rinv_pows=None, table=None, inv_table=None):
        self.kind = kind
        self.n = n
        self.identity = identity
        self.pa = pa
        self.pb = pb
        self.carry = carry
        self.r_pows = r_pows
        self.rinv_pows = rinv_pows
        self.table = table
        self.inv_table = inv_table


def mc_law(pa: int, pb: int, r: int, carry: int) -> Law:
    r %= pa
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


def dp_law(pa: int, pb: int) -> Law:
    return Law(DP, pa * pb, 0, pa=pa, pb=pb)


def table_law(table: np.ndarray, identity: int) -> Law:
    table = np.ascontiguousarray(table, dtype=np.int32)
    n = table.shape[0]
    inv_table = np.empty(n, dtype=np.int64)
    rows, cols = np.nonzero(table == identity)
    inv_table[rows] = cols
    return Law(TBL, n, identity, table=table, inv_table=inv_table)


def mul(law: Law, g: int, h: int) -> int:
    if law.kind == MC:
        pa = law.pa
        b1, a1 = divmod(g, pa)
        b2, a2 = divmod(h, pa)
        b = b1 + b2
        a = (a1 * int(law.r_pows[b2]) + a2) % pa
        if b >= law.pb:
            b -= law.pb
            a = (a + law.carry) % pa
        return b * pa + a
    if law.kind == DP:
        pa = law.pa
        j1, i1 = divmod(g, pa)
        j2, i2 = divmod(h, pa)
        return ((i1 + i2) % pa) + pa * ((j1 + j2) % law.pb)
    return int(law.table[g, h])


def inv(law: Law, g: int) -> int:
    if law.kind == MC:
        pa = law.pa
        b1, a1 = divmod(g, pa)
        if b1 == 0:
            return (pa - a1) % pa
        b = law.pb - b1
        a = (-(a1 + law.carry)) * int(law.rinv_pows[b1]) % pa
        return b * pa + a
    if law.kind == DP:
        pa = law.pa
        j, i = divmod(g, pa)
        return ((pa - i) % pa) + pa * ((law.pb - j) % law.pb)
    return int(law.inv_table[g])


def power(law: Law, g: int, k: int) -> int:
    if k < 0:
        g = inv(law, g)
        k = -k
    res = law.identity
    base = g
    while k:
        if k & 1:
            res = mul(law, res, base)
        base = mul(law, base, base)
        k >>= 1
    return res


def mul_many(law: Law, gs, hs) -> np.ndarray:
    gs = np.asarray(gs, dtype=np.int64)
    hs = np.asarray(hs, dtype=np.int64)
    if law.kind == MC:
        pa = law.pa
        b1, a1 = np.divmod(gs, pa)
        b2, a2 = np.divmod(hs, pa)
        b = b1 + b2
        a = (a1 * law.r_pows[b2] + a2) % pa
        wrap = b >= law.pb
        b[wrap] -= law.pb
        a[wrap] = (a[wrap] + law.carry) % pa
        return b * pa + a
    if law.kind == DP:
        pa = law.pa
        j1, i1 = np.divmod(gs, pa)
        j2, i2 = np.divmod(hs, pa)
        return (i1 + i2) % pa + pa * ((j1 + j2) % law.pb)
    return law.table[gs, hs].astype(np.int64)


def power_map(law: Law, k: int) -> np.ndarray:
    """g -> g^k for every code, k >= 0."""
    res = np.full(law.n, law.identity, dtype=np.int64)
    base = np.arange(law.n, dtype=np.int64)
    while k:
        if k & 1:
            res = mul_many(law, res, base)
        k >>= 1
        if k:
            base = mul_many(law, base, base)
    return res


def conj_map(law: Law, h: int) -> np.ndarray:
    """g -> h^-1 g h for every code."""
    hi = inv(law, h)
    codes = np.arange(law.n, dtype=np.int64)
    left = mul_many(law, np.full(law.n, hi, dtype=np.int64), codes)
    return mul_many(law, left, np.full(law.n, h, dtype=np.int64))


def element_orders(law: Law, p: int) -> np.ndarray:
    pm = power_map(law, p)
    orders = np.ones(law.n, dtype=np.int64)
    cur = np.arange(law.n, dtype=np.int64)
    while True:
        alive = cur != law.identity
        if not alive.any():
            return orders
        orders[alive] *= p
        cur = pm[cur]


def cyclic_index(law: Law, p: int):
    """Index every cyclic subgroup <g>.

    Returns (gen_to_sub, sub_gen, sub_order): gen_to_sub maps each code to
    the id of the subgroup it generates; sub_gen / sub_order give one
    generator and the order per id.  Orders are p-powers, so the generators
    of <g> are exactly the powers g^k with p not dividing k.
    """
    n = law.n
    ident = law.identity
    gen_to_sub = np.full(n, -1, dtype=np.int64)
    sub_gen: list[int] = []
    sub_order: list[int] = []
    _mul = mul
    chain: list[int] = []
    for g in range(n):
        if gen_to_sub[g] >= 0:
            continue
        chain.clear()
        cur = g
        while True:
            chain.append(cur)  # chain[k-1] = g^k
            if cur == ident:
                break
            cur = _mul(law, cur, g)
        m = len(chain)
        sid = len(sub_gen)
        sub_gen.append(g)
        sub_order.append(m)
        for k in range(1, m + 1):
            if k % p:
                gen_to_sub[chain[k - 1]] = sid
    return gen_to_sub, np.array(sub_gen, dtype=np.int64), np.array(sub_order, dtype=np.int64)


def cyclic_elements(law: Law, g: int) -> np.ndarray:
    """Sorted codes of <g>."""
    out = [law.identity]
    cur = g
    while cur != law.identity:
        out.append(cur)
        cur = mul(law, cur, g)
    out.sort()
    return np.array(out, dtype=np.int64)


def closure(law: Law, seeds) -> np.ndarray:
    """Sorted codes of the subgroup generated by the seeds (BFS)."""
    member = np.zeros(law.n, dtype=bool)
    member[law.identity] = True
    frontier = [law.identity]
    seeds = [int(s) for s in seeds]
    while frontier:
        nxt = []
        for g in frontier:
            for s in seeds:
                h = mul(law, g, s)
                if not member[h]:
                    member[h] = True
                    nxt.append(h)
        frontier = nxt
    return np.nonzero(member)[0].astype(np.int64)


def subset_mul_table(law: Law, elems) -> np.ndarray:
    """m x m index table of a multiplicatively closed subset (sorted codes)."""
    elems = np.asarray(elems, dtype=np.int64)
    m = len(elems)
    gs = np.repeat(elems, m)
    hs = np.tile(elems, m)
    prod = mul_many(law, gs, hs)
    idx = np.searchsorted(elems, prod)
    if (idx >= m).any() or (elems[np.minimum(idx, m - 1)] != prod).any():
        raise ValueError("subset is not closed under multiplication")
    return idx.astype(np.int32).reshape(m, m)

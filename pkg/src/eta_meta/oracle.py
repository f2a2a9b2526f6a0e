"""Brute-force ground truth over any finite group view.

Everything here works purely from the group operation: maximal cyclic
subgroups, conjugacy orbits, eta, eta* for a normal subgroup, p-th power
sets, derived subgroup, center, and abelian invariants.  Nothing consults
the closed-form formulas, so these results can cross-check them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from . import kernels
from .engine import (
    FiniteGroupView,
    NotNormal,
    SubgroupElements,
    is_normal,
    quotient_view,
    subgroup_closure,
    subgroup_view,
)

CyclicSubgroupKey = Tuple[int, ...]


class NotAbelian(ValueError):
    pass


class RankExceeded(ValueError):
    pass


@dataclass(frozen=True)
class StructureReport:
    derived: SubgroupElements
    center: SubgroupElements
    pth_powers: frozenset
    pth_power_subgroup: SubgroupElements
    is_powerful: bool


def _cyclic_index(view: FiniteGroupView):
    return kernels.cyclic_index(view.law, view.p)


def _maximal_mask(view: FiniteGroupView, gen_to_sub: np.ndarray,
                  num_subs: int) -> np.ndarray:
    """Mark non-maximal cyclic subgroups.

    In a p-group the proper cyclic subgroups of <h> form the chain
    <h^(p^j)>, so marking <g^p> for every g != e covers them all.
    """
    pm = kernels.power_map(view.law, view.p)
    codes = np.arange(view.order, dtype=np.int64)
    nontrivial = codes != view.identity
    maximal = np.ones(num_subs, dtype=bool)
    maximal[np.unique(gen_to_sub[pm[codes[nontrivial]]])] = False
    if not nontrivial.any():
        maximal[:] = True  # trivial group: the trivial subgroup is maximal
    return maximal


def cyclic_subgroups(view: FiniteGroupView) -> set[CyclicSubgroupKey]:
    _, sub_gen, _ = _cyclic_index(view)
    return {tuple(int(c) for c in kernels.cyclic_elements(view.law, g))
            for g in sub_gen}


def maximal_cyclic_subgroups(view: FiniteGroupView,
                             method: str = "chain") -> set[CyclicSubgroupKey]:
    """Cyclic subgroups contained in no larger cyclic subgroup.

    method="chain" uses the p-group chain shortcut; "containment" is the
    generic all-pairs cross-check.
    """
    if method == "containment":
        keys = cyclic_subgroups(view)
        return {c for c in keys
                if not any(set(c) < set(d) for d in keys if len(d) > len(c))}
    gts, sub_gen, _ = _cyclic_index(view)
    maximal = _maximal_mask(view, gts, len(sub_gen))
    return {tuple(int(c) for c in kernels.cyclic_elements(view.law, int(g)))
            for g, keep in zip(sub_gen, maximal) if keep}


def eta(view: FiniteGroupView, conjugators: str = "generators") -> int:
    """Number of conjugacy classes of maximal cyclic subgroups.

    Orbits are closed transitively under conjugation by the view's
    generators; conjugators="all" is the slow debug mode that conjugates by
    every element instead.
    """
    gts, sub_gen, _ = _cyclic_index(view)
    maximal = _maximal_mask(view, gts, len(sub_gen))
    law = view.law
    if conjugators == "all":
        inv_all = kernels.power_map(law, view.order - 1)
        codes = np.arange(view.order, dtype=np.int64)

        def neighbors(sid: int):
            g = np.full(view.order, sub_gen[sid], dtype=np.int64)
            conj = kernels.mul_many(law, kernels.mul_many(law, inv_all, g), codes)
            return np.unique(gts[conj])
    else:
        cmaps = [kernels.conj_map(law, g) for g in view.generators]

        def neighbors(sid: int):
            g = sub_gen[sid]
            return [int(gts[cm[g]]) for cm in cmaps]

    seen = np.zeros(len(sub_gen), dtype=bool)
    orbits = 0
    for sid in range(len(sub_gen)):
        if not maximal[sid] or seen[sid]:
            continue
        orbits += 1
        stack = [sid]
        seen[sid] = True
        while stack:
            cur = stack.pop()
            for nb in neighbors(cur):
                if maximal[nb] and not seen[nb]:
                    seen[nb] = True
                    stack.append(int(nb))
    return orbits


def eta_star(view: FiniteGroupView, n: SubgroupElements) -> int:
    """G-orbits on the N-conjugacy classes of maximal cyclic subgroups of N."""
    if not is_normal(view, n):
        raise NotNormal("eta_star needs a normal subgroup")
    sub = subgroup_view(view, n)
    gts, sub_gen, _ = _cyclic_index(sub)
    maximal = _maximal_mask(sub, gts, len(sub_gen))

    # N-conjugacy classes of the maximal keys
    cmaps_n = [kernels.conj_map(sub.law, g) for g in sub.generators]
    class_of = np.full(len(sub_gen), -1, dtype=np.int64)
    classes = 0
    for sid in range(len(sub_gen)):
        if not maximal[sid] or class_of[sid] >= 0:
            continue
        cid = classes
        classes += 1
        stack = [sid]
        class_of[sid] = cid
        while stack:
            cur = stack.pop()
            for cm in cmaps_n:
                nb = int(gts[cm[sub_gen[cur]]])
                if class_of[nb] < 0:
                    class_of[nb] = cid
                    stack.append(nb)

    # ambient action on those classes
    def ambient_class(sid: int, gen: int) -> int:
        amb = sub.ambient_code(int(sub_gen[sid]))
        conj = view.conjugate(amb, gen)
        return int(class_of[gts[sub.local_handle(conj)]])

    rep_sid = {}
    for sid in range(len(sub_gen)):
        if maximal[sid]:
            rep_sid.setdefault(int(class_of[sid]), sid)
    seen = set()
    orbits = 0
    for cid, sid in rep_sid.items():
        if cid in seen:
            continue
        orbits += 1
        stack = [cid]
        seen.add(cid)
        while stack:
            cur = stack.pop()
            for gen in view.generators:
                nb = ambient_class(rep_sid[cur], gen)
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
    return orbits


def pth_power_set(view: FiniteGroupView, p: Optional[int] = None) -> frozenset:
    p = view.p if p is None else p
    return frozenset(int(c) for c in kernels.power_map(view.law, p))


def _normal_closure(view: FiniteGroupView, seeds) -> SubgroupElements:
    """Smallest normal subgroup containing the seeds."""
    law = view.law
    member = np.zeros(view.order, dtype=bool)
    member[view.identity] = True
    frontier = [view.identity]
    seeds = sorted({int(s) for s in seeds})
    while frontier:
        nxt = []
        for g in frontier:
            for s in seeds:
                h = int(kernels.mul(law, g, s))
                if not member[h]:
                    member[h] = True
                    nxt.append(h)
            for t in view.generators:
                h = view.conjugate(g, t)
                if not member[h]:
                    member[h] = True
                    nxt.append(h)
        frontier = nxt
    elems = np.nonzero(member)[0].astype(np.int64)
    return SubgroupElements(elems, view)


def conjugacy_classes(view: FiniteGroupView) -> np.ndarray:
    """class id per element, orbits under conjugation by the generators."""
    cmaps = [kernels.conj_map(view.law, g) for g in view.generators]
    class_id = np.full(view.order, -1, dtype=np.int64)
    classes = 0
    for g in range(view.order):
        if class_id[g] >= 0:
            continue
        cid = classes
        classes += 1
        stack = [g]
        class_id[g] = cid
        while stack:
            cur = stack.pop()
            for cm in cmaps:
                nb = int(cm[cur])
                if class_id[nb] < 0:
                    class_id[nb] = cid
                    stack.append(nb)
    return class_id


def conjugacy_class_of(view: FiniteGroupView, g: int) -> frozenset:
    class_id = conjugacy_classes(view)
    cid = class_id[view._check(g)]
    return frozenset(int(c) for c in np.nonzero(class_id == cid)[0])


def structure(view: FiniteGroupView, params=None) -> StructureReport:
    """Derived subgroup, center, p-th powers and the powerful flag.

    When King parameters are supplied the brute-force answers are checked
    against the closed-form generators; a mismatch raises AssertionError.
    """
    law = view.law
    p = view.p
    gens = view.generators
    comms = []
    for s in gens:
        for t in gens:
            st = kernels.mul(law, s, t)
            ts = kernels.mul(law, t, s)
            comms.append(kernels.mul(law, kernels.inv(law, ts), st))
    derived = _normal_closure(view, comms)

    cmaps = [kernels.conj_map(law, g) for g in gens]
    codes = np.arange(view.order, dtype=np.int64)
    central = np.ones(view.order, dtype=bool)
    for cm in cmaps:
        central &= cm == codes
    center = SubgroupElements(codes[central], view)

    powers = kernels.power_map(law, p)
    pth_powers = frozenset(int(c) for c in powers)
    pth_subgroup = SubgroupElements(
        kernels.closure(law, np.unique(powers)), view)
    if p == 2:
        fourth = kernels.closure(law, np.unique(kernels.power_map(law, 4)))
        fourth_set = SubgroupElements(fourth, view)
        is_powerful = all(int(c) in fourth_set for c in derived.elements)
    else:
        is_powerful = all(int(c) in pth_subgroup for c in derived.elements)

    if params is not None:
        _cross_check_structure(view, params, derived, center)
    return StructureReport(derived, center, pth_powers, pth_subgroup, is_powerful)


def _cross_check_structure(view, params, derived, center) -> None:
    p, a, d = params.p, params.alpha, params.delta
    x, y = view.generators
    if params.sign == "+":
        expect_derived = subgroup_closure(view, [view.power(x, p ** (a - d))])
        expect_center = subgroup_closure(
            view, [view.power(x, p**d), view.power(y, p**d)])
    else:
        expect_derived = subgroup_closure(view, [view.power(x, 2)])
        expect_center = subgroup_closure(
            view, [view.power(x, 2 ** (a - 1)), view.power(y, 2 ** max(1, d))])
    if not np.array_equal(expect_derived.elements, derived.elements):
        raise AssertionError(f"derived subgroup mismatch for {params}")
    if not np.array_equal(expect_center.elements, center.elements):
        raise AssertionError(f"center mismatch for {params}")


def abelian_invariants(view: FiniteGroupView) -> Tuple[int, int]:
    """Exponents (a, b), a >= b, with view isomorphic to C_{p^a} x C_{p^b}."""
    law = view.law
    p = view.p
    for s in view.generators:
        for t in view.generators:
            if kernels.mul(law, s, t) != kernels.mul(law, t, s):
                raise NotAbelian("generators do not commute")
    orders = kernels.element_orders(law, p)
    a = _exact_log(int(orders.max()), p)
    total = _exact_log(view.order, p)
    b = total - a
    if b < 0 or b > a:
        raise RankExceeded(f"order/exponent mismatch: |G|=p^{total}, exponent p^{a}")
    for j in range(a + 1):
        expected = p ** (min(j, a) + min(j, b))
        got = int((orders <= p**j).sum())
        if got != expected:
            raise RankExceeded(
                f"element-order profile is not rank <= 2 (p^{j}: {got} != {expected})")
    return (a, b)


def _exact_log(n: int, p: int) -> int:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    if n != 1:
        raise ValueError("not a p-power")
    return e


def quotient_eta_equality_witness(view: FiniteGroupView, n: SubgroupElements,
                                  p: Optional[int] = None,
                                  check_eta: bool = True):
    """Direct test of the eta(G/N) = eta(G) criterion.

    Returns (holds, witness): both clauses checked element by element; the
    witness is a failing (n_element,) or (x, coset_element) pair.  When
    check_eta is set, consistency with the two oracle eta values is asserted.
    """
    p = view.p if p is None else p
    if not is_normal(view, n):
        raise NotNormal("criterion needs a normal subgroup")
    law = view.law
    gp_set = np.zeros(view.order, dtype=bool)
    gp_set[kernels.power_map(law, p)] = True

    holds = True
    witness = None
    if not gp_set[n.elements].all():
        holds = False
        bad = int(n.elements[~gp_set[n.elements]][0])
        witness = (bad,)
    else:
        class_id = conjugacy_classes(view)
        nelems = np.asarray(n.elements, dtype=np.int64)
        for x in range(view.order):
            if gp_set[x]:
                continue
            gen_classes = {int(class_id[g]) for g in _generators_of_cyclic(view, x)}
            coset = kernels.mul_many(law, np.full(len(nelems), x, dtype=np.int64), nelems)
            for w in coset:
                if int(class_id[w]) not in gen_classes:
                    holds = False
                    witness = (x, int(w))
                    break
            if not holds:
                break

    if check_eta:
        same = eta(view) == eta(quotient_view(view, n))
        assert same == holds, (
            f"criterion ({holds}) disagrees with eta comparison ({same})")
    return holds, witness


def _generators_of_cyclic(view: FiniteGroupView, g: int) -> list[int]:
    law = view.law
    out = []
    cur = g
    k = 1
    while True:
        if k % view.p:
            out.append(int(cur))
        if cur == view.identity:
            return out
        cur = kernels.mul(law, cur, g)
        k += 1

"""Finite group views.

Elements are dense integer handles (codes).  A metacyclic view encodes the
normal form y^b x^a as a + p^alpha * b; direct products of two cyclic factors
encode componentwise; quotient and subgroup views run on explicit
multiplication tables built from their ambient view.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from . import kernels
from .params import GroupParams, _is_prime

DEFAULT_BUDGET = 2**16


class BudgetExceeded(ValueError):
    pass


class ForeignHandle(ValueError):
    pass


class NotNormal(ValueError):
    pass


@dataclass(frozen=True)
class GroupElement:
    """Normal form y^b x^a as an exponent pair."""
    a: int
    b: int


class FiniteGroupView:
    """Carrier enumeration, multiply, identity, inverse over integer handles."""

    def __init__(self, law, p: int, generators: Sequence[int], name: str):
        self.law = law
        self.p = p
        self.generators = tuple(int(g) for g in generators)
        self.name = name

    @property
    def order(self) -> int:
        return int(self.law.n)

    @property
    def identity(self) -> int:
        return int(self.law.identity)

    def elements(self) -> range:
        return range(self.order)

    def _check(self, g: int) -> int:
        g = int(g)
        if not 0 <= g < self.order:
            raise ForeignHandle(f"handle {g} not in view of order {self.order}")
        return g

    def multiply(self, g: int, h: int) -> int:
        return int(kernels.mul(self.law, self._check(g), self._check(h)))

    def inverse(self, g: int) -> int:
        return int(kernels.inv(self.law, self._check(g)))

    def power(self, g: int, k: int) -> int:
        return int(kernels.power(self.law, self._check(g), int(k)))

    def conjugate(self, g: int, h: int) -> int:
        """h^-1 g h."""
        law = self.law
        return int(kernels.mul(law, kernels.mul(law, kernels.inv(law, self._check(h)),
                                                self._check(g)), h))

    def element_order(self, g: int) -> int:
        g = self._check(g)
        order = 1
        while g != self.identity:
            g = int(kernels.power(self.law, g, self.p))
            order *= self.p
        return order

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name} order={self.order}>"


class MetacyclicView(FiniteGroupView):
    def __init__(self, params: GroupParams, law):
        pa = params.p**params.alpha
        super().__init__(law, params.p, (1, pa), str(params))
        self.params = params
        self._pa = pa

    @property
    def x(self) -> int:
        return 1

    @property
    def y(self) -> int:
        return self._pa

    def encode(self, elem: GroupElement) -> int:
        pb = self.params.p**self.params.beta
        return (elem.a % self._pa) + self._pa * (elem.b % pb)

    def decode(self, code: int) -> GroupElement:
        b, a = divmod(self._check(code), self._pa)
        return GroupElement(a=a, b=b)


class DirectProductView(FiniteGroupView):
    """C_{p^a} x C_{p^b} under componentwise addition."""

    def __init__(self, p: int, exp_a: int, exp_b: int, law):
        pa = p**exp_a
        gens = [g for g in (1 % pa, pa * (1 % p**exp_b)) if g != 0] or [0]
        super().__init__(law, p, gens, f"C_{p}^{exp_a} x C_{p}^{exp_b}")
        self.exp_a = exp_a
        self.exp_b = exp_b


@dataclass(frozen=True)
class SubgroupElements:
    """A subgroup as its sorted set of ambient codes."""
    elements: np.ndarray
    ambient: FiniteGroupView

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, code: int) -> bool:
        i = int(np.searchsorted(self.elements, code))
        return i < len(self.elements) and int(self.elements[i]) == int(code)


def make_metacyclic(params: GroupParams, budget: int = DEFAULT_BUDGET) -> MetacyclicView:
    if params.order > budget:
        raise BudgetExceeded(f"|G| = {params.order} exceeds budget {budget}")
    p = params.p
    pa = p**params.alpha
    carry = p ** (params.alpha - params.epsilon) % pa
    law = kernels.mc_law(pa, p**params.beta, params.r, carry)
    return MetacyclicView(params, law)


def make_direct_product(p: int, a: int, b: int,
                        budget: int = DEFAULT_BUDGET) -> DirectProductView:
    if not _is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if a < 0 or b < 0:
        raise ValueError("exponents must be nonnegative")
    if p ** (a + b) > budget:
        raise BudgetExceeded(f"order {p**(a+b)} exceeds budget {budget}")
    return DirectProductView(p, a, b, kernels.dp_law(p**a, p**b))


def multiply(view: FiniteGroupView, g: int, h: int) -> int:
    return view.multiply(g, h)


def inverse(view: FiniteGroupView, g: int) -> int:
    return view.inverse(g)


def power(view: FiniteGroupView, g: int, n: int) -> int:
    return view.power(g, n)


def conjugate(view: FiniteGroupView, g: int, h: int) -> int:
    return view.conjugate(g, h)


def element_order(view: FiniteGroupView, g: int) -> int:
    return view.element_order(g)


def subgroup_closure(view: FiniteGroupView,
                     generators: Iterable[int]) -> SubgroupElements:
    gens = [view._check(g) for g in generators]
    elems = kernels.closure(view.law, np.array(gens or [view.identity], dtype=np.int64))
    return SubgroupElements(elements=elems, ambient=view)


def is_normal(view: FiniteGroupView, n: SubgroupElements,
              exhaustive_limit: int = 2**12) -> bool:
    """Exhaustive conjugation check at desk scale, generator-based above.

    Conjugation by each generator permutes the finite set, so the
    generator-based check is already exact; the exhaustive mode double-checks
    with every conjugator.
    """
    law = view.law
    member = np.zeros(view.order, dtype=bool)
    member[n.elements] = True
    if view.order <= exhaustive_limit:
        inv_all = kernels.power_map(law, view.order - 1)  # g^(|G|-1) = g^-1
        codes = np.arange(view.order, dtype=np.int64)
        for s in n.elements:
            left = kernels.mul_many(law, inv_all, np.full(view.order, s, dtype=np.int64))
            conj = kernels.mul_many(law, left, codes)
            if not member[conj].all():
                return False
        return True
    for gen in view.generators:
        cm = kernels.conj_map(law, gen)
        if not member[cm[n.elements]].all():
            return False
    return True


class QuotientView(FiniteGroupView):
    def __init__(self, ambient: FiniteGroupView, nsub: SubgroupElements,
                 law, reps: np.ndarray, coset_index: np.ndarray,
                 generators: Sequence[int]):
        super().__init__(law, ambient.p, generators,
                         f"{ambient.name} / N(order {len(nsub)})")
        self.ambient = ambient
        self.nsub = nsub
        self.reps = reps
        self.coset_index = coset_index

    def coset_rep(self, handle: int) -> int:
        """Minimal ambient code of the coset behind a handle."""
        return int(self.reps[self._check(handle)])


def quotient_view(view: FiniteGroupView, n: SubgroupElements) -> QuotientView:
    if n.ambient is not view:
        raise ForeignHandle("subgroup belongs to a different view")
    if not is_normal(view, n):
        raise NotNormal(f"subgroup of order {len(n)} is not normal in {view.name}")
    law = view.law
    order = view.order
    nelems = np.asarray(n.elements, dtype=np.int64)
    coset_index = np.full(order, -1, dtype=np.int64)
    reps = []
    for g in range(order):
        if coset_index[g] >= 0:
            continue
        coset = kernels.mul_many(law, np.full(len(nelems), g, dtype=np.int64), nelems)
        coset_index[coset] = len(reps)
        reps.append(g)  # g is minimal in its coset: codes scanned in order
    reps_arr = np.array(reps, dtype=np.int64)
    m = len(reps_arr)
    prods = kernels.mul_many(law, np.repeat(reps_arr, m), np.tile(reps_arr, m))
    table = coset_index[prods].astype(np.int32).reshape(m, m)
    qlaw = kernels.table_law(table, int(coset_index[view.identity]))
    gens = [int(coset_index[g]) for g in view.generators]
    return QuotientView(view, n, qlaw, reps_arr, coset_index, gens)


class SubgroupView(FiniteGroupView):
    """A subgroup as a group in its own right (induced multiplication)."""

    def __init__(self, ambient: FiniteGroupView, nsub: SubgroupElements, law,
                 generators: Sequence[int]):
        super().__init__(law, ambient.p, generators,
                         f"subgroup(order {len(nsub)}) of {ambient.name}")
        self.ambient = ambient
        self.nsub = nsub

    def ambient_code(self, handle: int) -> int:
        return int(self.nsub.elements[self._check(handle)])

    def local_handle(self, ambient_code: int) -> int:
        i = int(np.searchsorted(self.nsub.elements, ambient_code))
        if i >= len(self.nsub.elements) or int(self.nsub.elements[i]) != int(ambient_code):
            raise ForeignHandle(f"{ambient_code} is not in the subgroup")
        return i


def _find_generators(law, identity: int) -> list[int]:
    gens: list[int] = []
    reached = kernels.closure(law, np.array([identity], dtype=np.int64))
    n = int(law.n)
    while len(reached) < n:
        member = np.zeros(n, dtype=bool)
        member[reached] = True
        nxt = int(np.nonzero(~member)[0][0])
        gens.append(nxt)
        reached = kernels.closure(law, np.array(gens, dtype=np.int64))
    return gens or [identity]


def subgroup_view(view: FiniteGroupView, n: SubgroupElements) -> SubgroupView:
    if n.ambient is not view:
        raise ForeignHandle("subgroup belongs to a different view")
    table = kernels.subset_mul_table(view.law, n.elements)
    ident = int(np.searchsorted(n.elements, view.identity))
    law = kernels.table_law(table, ident)
    return SubgroupView(view, n, law, _find_generators(law, ident))


def full_subgroup(view: FiniteGroupView) -> SubgroupElements:
    return SubgroupElements(np.arange(view.order, dtype=np.int64), view)

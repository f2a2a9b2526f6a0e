"""Group views: normal-form arithmetic, presentation relations, subgroup and
quotient construction."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from eta_meta import kernels, oracle
from eta_meta.engine import (
    BudgetExceeded,
    ForeignHandle,
    GroupElement,
    NotNormal,
    full_subgroup,
    is_normal,
    make_direct_product,
    make_metacyclic,
    quotient_view,
    subgroup_closure,
    subgroup_view,
)
from eta_meta.params import validate


def view_of(raw, **kw):
    return make_metacyclic(validate(raw), **kw)


class TestConstruction:
    def test_orders(self):
        assert view_of((2, 4, 3, 0, 2, "-")).order == 128
        assert view_of((2, 2, 1, 1, 0, "-")).order == 8

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            view_of((2, 8, 8, 0, 0, "+"), budget=2**10)

    def test_direct_products(self):
        assert make_direct_product(2, 1, 1).order == 4   # Klein four
        assert make_direct_product(2, 3, 0).order == 8   # cyclic C_8
        assert make_direct_product(3, 2, 2).order == 81
        with pytest.raises(ValueError):
            make_direct_product(4, 1, 1)
        with pytest.raises(BudgetExceeded):
            make_direct_product(2, 9, 9, budget=2**10)

    def test_foreign_handle(self):
        v = view_of((2, 2, 1, 1, 0, "-"))
        with pytest.raises(ForeignHandle):
            v.multiply(0, v.order)
        with pytest.raises(ForeignHandle):
            v.inverse(-1)

    def test_encode_decode_roundtrip(self):
        v = view_of((2, 3, 2, 0, 1, "-"))
        for code in v.elements():
            assert v.encode(v.decode(code)) == code
        assert v.encode(GroupElement(a=3, b=2)) == 3 + 8 * 2


class TestRelations:
    def test_semidihedral_conjugation(self):
        # x^y = x^r with r = 2^2 - 1 = 3 in the order-16 semidihedral group
        v = view_of((2, 3, 1, 0, 1, "-"))
        assert v.conjugate(v.x, v.y) == v.power(v.x, 3)

    def test_dihedral_product(self):
        # (y x^2)(y x^3) = x since 2*7 + 3 = 17 = 1 mod 8
        v = view_of((2, 3, 1, 0, 0, "-"))
        g = v.multiply(v.y, v.power(v.x, 2))
        h = v.multiply(v.y, v.power(v.x, 3))
        assert v.multiply(g, h) == v.x

    def test_quaternion_y_squared(self):
        v = view_of((2, 2, 1, 1, 0, "-"))
        assert v.power(v.y, 2) == v.power(v.x, 2)
        assert v.element_order(v.y) == 4

    def test_x_relation_everywhere(self):
        for raw in [(2, 3, 2, 0, 1, "-"), (3, 3, 2, 0, 1, "+"), (5, 2, 2, 0, 0, "+")]:
            v = view_of(raw)
            p, a = v.params.p, v.params.alpha
            assert v.power(v.x, p**a) == v.identity
            # brute-force the order of x against the presentation
            g, k = v.x, 1
            while g != v.identity:
                g = v.multiply(g, v.x)
                k += 1
            assert k == p**a

    def test_y_power_relation(self):
        for raw in [(2, 2, 1, 1, 0, "-"), (2, 4, 3, 2, 1, "+"), (3, 3, 2, 1, 1, "+")]:
            v = view_of(raw)
            p = v.params
            assert (v.power(v.y, p.p**p.beta)
                    == v.power(v.x, p.p ** (p.alpha - p.epsilon)))

    def test_identity_and_inverse_laws(self):
        v = view_of((3, 3, 2, 0, 1, "+"))
        rng = np.random.default_rng(7)
        for g in rng.integers(0, v.order, size=100):
            g = int(g)
            assert v.multiply(g, v.identity) == g
            assert v.multiply(v.identity, g) == g
            assert v.multiply(g, v.inverse(g)) == v.identity
        assert v.inverse(v.identity) == v.identity
        assert v.element_order(v.identity) == 1

    def test_conjugation_laws(self):
        v = view_of((2, 4, 2, 0, 1, "-"))
        for g in range(0, v.order, 7):
            assert v.conjugate(g, v.identity) == g
        ab = make_direct_product(3, 2, 1)
        for g in range(ab.order):
            for h in ab.generators:
                assert ab.conjugate(g, h) == g


class TestSubgroups:
    def test_x_closure_size(self):
        v = view_of((2, 4, 3, 0, 2, "-"))
        assert len(subgroup_closure(v, [v.x])) == 16
        assert len(subgroup_closure(v, [v.power(v.x, 8)])) == 2

    def test_index_two_subgroup(self):
        v = view_of((2, 3, 2, 0, 0, "-"))
        m = subgroup_closure(v, [v.x, v.power(v.y, 2)])
        assert len(m) == 16 and v.order == 32

    def test_empty_generators_give_trivial(self):
        v = view_of((2, 2, 1, 1, 0, "-"))
        assert len(subgroup_closure(v, [])) == 1

    def test_membership(self):
        v = view_of((2, 4, 3, 0, 2, "-"))
        n = subgroup_closure(v, [v.x])
        assert v.x in n and v.y not in n

    def test_subgroup_view_roundtrip(self):
        v = view_of((2, 3, 2, 0, 0, "-"))
        m = subgroup_closure(v, [v.x, v.power(v.y, 2)])
        sub = subgroup_view(v, m)
        assert sub.order == 16
        for h in range(sub.order):
            assert sub.local_handle(sub.ambient_code(h)) == h
        # induced multiplication agrees with the ambient one
        for g in range(sub.order):
            for h in range(sub.order):
                assert sub.ambient_code(sub.multiply(g, h)) == v.multiply(
                    sub.ambient_code(g), sub.ambient_code(h))

    def test_subgroup_of_other_view_rejected(self):
        v1 = view_of((2, 3, 2, 0, 0, "-"))
        v2 = view_of((2, 3, 2, 0, 0, "-"))
        n = subgroup_closure(v1, [v1.x])
        with pytest.raises(ForeignHandle):
            subgroup_view(v2, n)


class TestNormalityAndQuotients:
    def test_is_normal(self):
        v = view_of((2, 3, 1, 0, 0, "-"))  # dihedral of order 16
        assert is_normal(v, subgroup_closure(v, [v.x]))
        assert not is_normal(v, subgroup_closure(v, [v.y]))

    def test_quotient_rejects_non_normal(self):
        v = view_of((2, 3, 1, 0, 0, "-"))
        with pytest.raises(NotNormal):
            quotient_view(v, subgroup_closure(v, [v.y]))

    def test_quotient_order(self):
        v = view_of((2, 4, 3, 0, 2, "-"))
        q = quotient_view(v, subgroup_closure(v, [v.power(v.x, 8)]))
        assert q.order == 64

    def test_quotient_by_whole_group(self):
        v = view_of((2, 3, 2, 0, 0, "-"))
        q = quotient_view(v, full_subgroup(v))
        assert q.order == 1
        assert oracle.eta(q) == 1

    def test_dihedral_quotient_is_smaller_dihedral(self):
        v = view_of((2, 3, 1, 0, 0, "-"))
        q = quotient_view(v, subgroup_closure(v, [v.power(v.x, 4)]))
        d8 = view_of((2, 2, 1, 0, 0, "-"))
        assert q.order == d8.order == 8
        q_orders = sorted(q.element_order(g) for g in q.elements())
        d8_orders = sorted(d8.element_order(g) for g in d8.elements())
        assert q_orders == d8_orders

    def test_coset_reps_are_minimal(self):
        v = view_of((2, 3, 2, 0, 1, "-"))
        n = subgroup_closure(v, [v.power(v.x, 2)])
        q = quotient_view(v, n)
        for h in range(q.order):
            rep = q.coset_rep(h)
            coset = [v.multiply(rep, int(s)) for s in n.elements]
            assert rep == min(coset)


_HYP_VIEW = make_metacyclic(validate((2, 4, 3, 1, 2, "-")))


@settings(max_examples=200, deadline=None)
@given(g=st.integers(0, _HYP_VIEW.order - 1),
       h=st.integers(0, _HYP_VIEW.order - 1),
       k=st.integers(0, _HYP_VIEW.order - 1))
def test_associativity_property(g, h, k):
    v = _HYP_VIEW
    assert v.multiply(v.multiply(g, h), k) == v.multiply(g, v.multiply(h, k))


@settings(max_examples=200, deadline=None)
@given(g=st.integers(0, _HYP_VIEW.order - 1), n=st.integers(-300, 300))
def test_power_matches_iterated_product(g, n):
    v = _HYP_VIEW
    acc = v.identity
    step = g if n >= 0 else v.inverse(g)
    for _ in range(abs(n) % 17):
        acc = v.multiply(acc, step)
    assert v.power(g, (abs(n) % 17) * (1 if n >= 0 else -1)) == acc


def test_batch_kernels_match_scalar_ops():
    v = _HYP_VIEW
    rng = np.random.default_rng(11)
    gs = rng.integers(0, v.order, size=256).astype(np.int64)
    hs = rng.integers(0, v.order, size=256).astype(np.int64)
    prods = kernels.mul_many(v.law, gs, hs)
    assert all(int(prod) == v.multiply(int(g), int(h))
               for g, h, prod in zip(gs, hs, prods))
    pm = kernels.power_map(v.law, 5)
    assert all(int(pm[g]) == v.power(g, 5) for g in range(v.order))
    cm = kernels.conj_map(v.law, v.y)
    assert all(int(cm[g]) == v.conjugate(g, v.y) for g in range(v.order))

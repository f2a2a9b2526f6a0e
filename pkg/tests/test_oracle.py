"""Brute-force ground truth: cyclic subgroup enumeration, eta, eta*,
structure reports and conjugacy classes."""

import numpy as np
import pytest

from eta_meta import oracle
from eta_meta.engine import (
    full_subgroup,
    make_direct_product,
    make_metacyclic,
    quotient_view,
    subgroup_closure,
)
from eta_meta.formulas import g_p
from eta_meta.params import validate


def view_of(raw):
    return make_metacyclic(validate(raw))


@pytest.fixture(scope="module")
def klein():
    return make_direct_product(2, 1, 1)


@pytest.fixture(scope="module")
def q8():
    return view_of((2, 2, 1, 1, 0, "-"))


class TestCyclicSubgroups:
    def test_klein(self, klein):
        subs = oracle.cyclic_subgroups(klein)
        assert len(subs) == 4  # trivial + three of order 2

    def test_c8(self):
        c8 = make_direct_product(2, 3, 0)
        assert len(oracle.cyclic_subgroups(c8)) == 4  # the chain 1<C2<C4<C8

    def test_q8(self, q8):
        subs = oracle.cyclic_subgroups(q8)
        assert len(subs) == 5
        assert sorted(len(s) for s in subs) == [1, 2, 4, 4, 4]


class TestMaximalCyclicSubgroups:
    def test_klein(self, klein):
        subs = oracle.maximal_cyclic_subgroups(klein)
        assert len(subs) == 3 and all(len(s) == 2 for s in subs)

    def test_q8(self, q8):
        subs = oracle.maximal_cyclic_subgroups(q8)
        assert len(subs) == 3 and all(len(s) == 4 for s in subs)
        center = q8.power(q8.x, 2)
        assert all(center in s for s in subs)

    def test_cyclic_group_has_one(self):
        c27 = make_direct_product(3, 3, 0)
        subs = oracle.maximal_cyclic_subgroups(c27)
        assert len(subs) == 1 and len(next(iter(subs))) == 27

    @pytest.mark.parametrize("raw", [
        (2, 3, 2, 0, 0, "-"), (2, 3, 2, 0, 1, "-"), (3, 2, 2, 1, 1, "+"),
        (2, 4, 1, 0, 1, "-"),
    ])
    def test_chain_equals_containment(self, raw):
        v = view_of(raw)
        assert (oracle.maximal_cyclic_subgroups(v, method="chain")
                == oracle.maximal_cyclic_subgroups(v, method="containment"))


class TestEta:
    def test_eta3_family(self):
        assert oracle.eta(view_of((2, 4, 1, 0, 0, "-"))) == 3  # dihedral
        assert oracle.eta(view_of((2, 3, 1, 1, 0, "-"))) == 3  # quaternion
        assert oracle.eta(view_of((2, 4, 1, 0, 1, "-"))) == 3  # semidihedral

    def test_trivial_group(self):
        assert oracle.eta(make_direct_product(2, 0, 0)) == 1

    def test_direct_products_match_gp(self):
        for p in (2, 3, 5):
            for a in range(0, 7):
                for b in range(0, a + 1):
                    if p ** (a + b) > 2**9:
                        continue
                    assert oracle.eta(make_direct_product(p, a, b)) == g_p(p, a, b)

    def test_conjugator_modes_agree(self):
        for raw in [(2, 3, 2, 0, 1, "-"), (3, 2, 2, 0, 1, "+")]:
            v = view_of(raw)
            assert oracle.eta(v) == oracle.eta(v, conjugators="all")


class TestEtaStar:
    def test_full_subgroup(self):
        v = view_of((2, 3, 2, 0, 1, "-"))
        assert oracle.eta_star(v, full_subgroup(v)) == oracle.eta(v)

    def test_index_two_bookkeeping(self):
        v = view_of((2, 3, 2, 0, 0, "-"))
        m = subgroup_closure(v, [v.x, v.power(v.y, 2)])
        assert oracle.eta(v) == oracle.eta_star(v, m) + 1

        v = view_of((2, 3, 2, 0, 1, "-"))
        m = subgroup_closure(v, [v.x, v.power(v.y, 2)])
        assert oracle.eta(v) == oracle.eta_star(v, m)

    def test_requires_normal(self):
        from eta_meta.engine import NotNormal
        v = view_of((2, 3, 1, 0, 0, "-"))
        with pytest.raises(NotNormal):
            oracle.eta_star(v, subgroup_closure(v, [v.y]))


class TestPthPowers:
    def test_klein(self, klein):
        assert oracle.pth_power_set(klein) == frozenset({klein.identity})

    def test_q8(self, q8):
        assert oracle.pth_power_set(q8) == frozenset(
            {q8.identity, q8.power(q8.x, 2)})

    def test_order_27_cubes(self):
        # exhaustive cubing of the 27-element views: the cubes are <x^3>
        for raw in [(3, 2, 1, 0, 0, "+"), (3, 2, 1, 0, 1, "+")]:
            v = view_of(raw)
            cubes = {v.power(g, 3) for g in v.elements()}
            assert oracle.pth_power_set(v) == frozenset(cubes)
            assert cubes == {0, 3, 6}


class TestStructure:
    def test_dihedral_derived(self):
        v = view_of((2, 3, 1, 0, 0, "-"))  # dihedral of order 16
        report = oracle.structure(v, params=v.params)
        expect = subgroup_closure(v, [v.power(v.x, 2)])
        assert np.array_equal(report.derived.elements, expect.elements)
        assert len(report.derived) == 4

    def test_positive_center_size(self):
        v = view_of((3, 3, 2, 0, 1, "+"))
        report = oracle.structure(v, params=v.params)
        assert len(report.center) == 3 ** (3 + 2 - 2 * 1) == 27

    def test_abelian_views(self, klein):
        report = oracle.structure(klein)
        assert len(report.derived) == 1
        assert len(report.center) == klein.order
        assert report.is_powerful

    def test_pth_power_subgroup_positive(self):
        v = view_of((3, 3, 2, 1, 1, "+"))
        report = oracle.structure(v, params=v.params)
        assert report.is_powerful
        assert report.pth_powers == frozenset(
            int(c) for c in report.pth_power_subgroup.elements)


class TestAbelianInvariants:
    def test_abelianizations(self):
        v = view_of((3, 3, 2, 0, 1, "+"))
        q = quotient_view(v, oracle.structure(v).derived)
        assert oracle.abelian_invariants(q) == (2, 2)

        v = view_of((2, 4, 3, 2, 1, "+"))
        q = quotient_view(v, oracle.structure(v).derived)
        assert oracle.abelian_invariants(q) == (4, 2)

    def test_cyclic(self):
        assert oracle.abelian_invariants(make_direct_product(2, 3, 0)) == (3, 0)

    def test_rejects_nonabelian(self, q8):
        with pytest.raises(oracle.NotAbelian):
            oracle.abelian_invariants(q8)


class TestConjugacy:
    def test_central_elements_are_singletons(self, q8):
        center_elem = q8.power(q8.x, 2)
        assert oracle.conjugacy_class_of(q8, center_elem) == {center_elem}
        assert oracle.conjugacy_class_of(q8, q8.identity) == {q8.identity}

    def test_positive_class_is_derived_coset(self):
        v = view_of((3, 3, 2, 0, 1, "+"))
        derived = oracle.structure(v).derived
        for m in (0, 1, 5, 11):
            g = v.multiply(v.y, v.power(v.x, m))
            cls = oracle.conjugacy_class_of(v, g)
            coset = {v.multiply(g, int(s)) for s in derived.elements}
            assert cls == coset
            assert len(cls) == 3 ** v.params.delta

    def test_class_ids_partition(self):
        v = view_of((2, 3, 2, 0, 1, "-"))
        class_id = oracle.conjugacy_classes(v)
        sizes = np.bincount(class_id)
        assert sizes.sum() == v.order
        # class sizes divide the group order
        assert all(v.order % int(s) == 0 for s in sizes)


class TestQuotientWitness:
    def test_c4_mod_squares(self):
        c4 = make_direct_product(2, 2, 0)
        n = subgroup_closure(c4, [c4.power(c4.generators[0], 2)])
        holds, witness = oracle.quotient_eta_equality_witness(c4, n)
        assert holds and witness is None

    def test_negative_delta_ge2(self):
        v = view_of((2, 4, 3, 0, 2, "-"))
        n = subgroup_closure(v, [v.power(v.x, 2 ** (4 - 2 + 1))])
        holds, witness = oracle.quotient_eta_equality_witness(v, n)
        assert holds and witness is None

    def test_klein_drop(self, klein):
        n = subgroup_closure(klein, [klein.generators[0]])
        holds, witness = oracle.quotient_eta_equality_witness(klein, n)
        assert not holds and witness is not None

"""The acceptance suite: every headline claim, checked at desk scale.

Each criterion function returns (passed, detail); `run_all` executes them in
order and reports one line per criterion.  The same code backs the CLI
`check` subcommand and tests/test_acceptance.py.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np

from . import kernels, oracle
from .engine import make_direct_product, make_metacyclic, quotient_view, subgroup_closure
from .formulas import ALL_CASE_TAGS, g_p, quotient_params
from .params import NEGATIVE, POSITIVE, GroupParams, validate
from .verify import SweepGrid, enumerate_grid, sweep, verify_theorems


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str = ""


class _Sweeps:
    """Caches the expensive sweeps shared between criteria."""

    def __init__(self, max_exp: int = 12):
        self.max_exp = max_exp
        self._p2 = None

    @property
    def p2(self):
        if self._p2 is None:
            grid = SweepGrid(p=2, max_order_exponent=self.max_exp,
                             oracle_budget=2**self.max_exp)
            self._p2 = sweep(grid)
        return self._p2


def _fails(reports, pred) -> List:
    return [r for r in reports if not pred(r)]


def criterion_1_formula_oracle_p2(sw: _Sweeps):
    """Formula = oracle for every valid p=2 tuple up to the order cap."""
    bad = _fails(sw.p2, lambda r: r.match is True)
    detail = f"{len(sw.p2)} tuples"
    if bad:
        detail = f"first mismatch: {bad[0].params}"
    return not bad, detail


def criterion_2_formula_oracle_odd(max_exp: int):
    reports = []
    for p, exp in ((3, 7), (5, 5)):
        exp = min(exp, max_exp)
        grid = SweepGrid(p=p, max_order_exponent=exp, signs=(POSITIVE,),
                         oracle_budget=p**exp)
        reports.extend(sweep(grid))
    bad = _fails(reports, lambda r: r.match is True)
    detail = f"{len(reports)} tuples (includes the G/G' quotient comparison)"
    if bad:
        detail = f"first mismatch: {bad[0].params}"
    return not bad, detail


def criterion_3_eta3_family(max_exp: int):
    bad = []
    count = 0
    for eps, delta, lo in ((0, 0, 2), (1, 0, 2), (0, 1, 3)):
        for alpha in range(lo, max_exp):
            params = validate((2, alpha, 1, eps, delta, NEGATIVE))
            count += 1
            if oracle.eta(make_metacyclic(params)) != 3:
                bad.append(params)
    detail = f"{count} groups" if not bad else f"first failure: {bad[0]}"
    return not bad, detail


def criterion_4_abelian_formula():
    bad = []
    count = 0
    for p in (2, 3, 5):
        for a in range(0, 11):
            for b in range(0, a + 1):
                if p ** (a + b) > 2**10:
                    continue
                count += 1
                view = make_direct_product(p, a, b)
                if oracle.eta(view) != g_p(p, a, b):
                    bad.append((p, a, b))
    detail = f"{count} direct products" if not bad else f"first failure: {bad[0]}"
    return not bad, detail


def criterion_5_main_bound(sw: _Sweeps):
    bad = _fails(sw.p2, lambda r: r.bound_ok)
    if bad:
        return False, f"bound/equality misclassified at {bad[0].params}"
    for raw, expect in (((2, 5, 3, 0, 3, "-"), 6), ((2, 6, 4, 0, 4, "-"), 8)):
        params = validate(raw)
        if oracle.eta(make_metacyclic(params)) != expect:
            return False, f"spot value failed at {params}"
    return True, f"{len(sw.p2)} tuples + 2 spot values"


def _grid_tuples(p: int, max_order: int, signs=(POSITIVE, NEGATIVE)):
    exp = 0
    while p ** (exp + 1) <= max_order:
        exp += 1
    return enumerate_grid(SweepGrid(p=p, max_order_exponent=exp, signs=signs))


def criterion_6_quotient_theorems():
    count = 0
    for params in _grid_tuples(2, 2**10):
        count += 1
        checks = {c.name: c for c in verify_theorems(params, oracle_budget=2**10)}
        for name in ("quotient_monotone", "negative_quotient_equality"):
            c = checks.get(name)
            if c is not None and not c.passed:
                return False, f"{name} failed at {params}: {c.detail}"
        if params.delta >= 1:
            ok, detail = _quotient_params_agreement(params)
            if not ok:
                return False, f"quotient_params at {params}: {detail}"
    return True, f"{count} tuples"


def _quotient_params_agreement(params: GroupParams):
    q = quotient_params(params)
    view = make_metacyclic(params)
    nsub = subgroup_closure(
        view, [view.power(view.x, params.p ** (params.alpha - params.delta + 1))])
    quot = quotient_view(view, nsub)
    if quot.order != q.order:
        return False, f"order {quot.order} != {q.order}"
    measured = sorted(
        int(o) for o in kernels.element_orders(quot.law, params.p))
    predicted = sorted(
        int(o) for o in kernels.element_orders(make_metacyclic(q).law, q.p))
    if measured != predicted:
        return False, "element-order multisets differ"
    return True, ""


def criterion_7_structure(sw: _Sweeps):
    count = 0
    tuples = list(enumerate_grid(
        SweepGrid(p=2, max_order_exponent=sw.max_exp)))
    tuples += _grid_tuples(3, 3**7, signs=(POSITIVE,))
    tuples += _grid_tuples(5, 5**5, signs=(POSITIVE,))
    for params in tuples:
        count += 1
        view = make_metacyclic(params)
        try:
            report = oracle.structure(view, params=params)  # closed-form cross-check
        except AssertionError as exc:
            return False, str(exc)
        if params.sign == POSITIVE:
            if not report.is_powerful:
                return False, f"{params} not reported powerful"
            if set(report.pth_powers) != {int(c) for c in report.pth_power_subgroup.elements}:
                return False, f"{params}: G^p != set of p-th powers"
            zsize = params.p ** (params.alpha + params.beta - 2 * params.delta)
            if len(report.center) != zsize:
                return False, f"{params}: |Z(G)| = {len(report.center)} != {zsize}"
    return True, f"{count} tuples"


def criterion_8_conjugacy(max_order: int = 3**6):
    rng = random.Random(20260824)
    count = 0
    for p in (2, 3, 5):
        for params in _grid_tuples(p, max_order):
            count += 1
            view = make_metacyclic(params)
            class_id = oracle.conjugacy_classes(view)
            derived = oracle.structure(view).derived
            dset = np.asarray(derived.elements, dtype=np.int64)

            def class_equals_coset(g: int) -> bool:
                coset = set(int(c) for c in kernels.mul_many(
                    view.law, np.full(len(dset), g, dtype=np.int64), dset))
                cls = {int(c) for c in np.nonzero(class_id == class_id[g])[0]}
                return cls == coset

            if params.sign == POSITIVE:
                gp = oracle.pth_power_set(view)
                for g in range(view.order):
                    if g not in gp and not class_equals_coset(g):
                        return False, f"cl(g) != gG' at {params}, g={g}"
            for _ in range(5):
                l = rng.randrange(0, p ** params.beta)
                a = rng.randrange(1, p)
                m = rng.randrange(0, p ** params.alpha)
                b_exp = (p * l + a) % p ** params.beta
                g = view.multiply(view.power(view.y, b_exp), view.power(view.x, m))
                if not class_equals_coset(g):
                    return False, f"cl(y^(pl+a)x^m) != gG' at {params}"
    return True, f"{count} tuples"


def criterion_9_index2_counts():
    count = 0
    for params in _grid_tuples(2, 2**10, signs=(NEGATIVE,)):
        if params.delta > 1 or params.beta < 2:
            continue
        count += 1
        checks = {c.name: c for c in verify_theorems(params, oracle_budget=2**10)}
        c = checks["index2_abelian_count"]
        if not c.passed:
            return False, f"failed at {params}: {c.detail}"
        c = checks["m_maximality_exceptions"]
        if not c.passed:
            return False, f"maximality exceptions at {params}: {c.detail}"
    return True, f"{count} tuples"


def _associativity_exhaustive(view) -> bool:
    n = view.order
    codes = np.arange(n, dtype=np.int64)
    table = np.empty((n, n), dtype=np.int64)
    for g in range(n):
        table[g] = kernels.mul_many(view.law, np.full(n, g, dtype=np.int64), codes)
    for g in range(n):
        if not np.array_equal(table[table[g]], table[g][table]):
            return False
    ident = view.identity
    if not (np.array_equal(table[ident], codes) and np.array_equal(table[:, ident], codes)):
        return False
    invs = np.array([view.inverse(g) for g in range(n)], dtype=np.int64)
    return bool((table[codes, invs] == ident).all())


def _associativity_sampled(view, rng: random.Random, samples: int = 10**4) -> bool:
    n = view.order
    gs = np.array([rng.randrange(n) for _ in range(samples)], dtype=np.int64)
    hs = np.array([rng.randrange(n) for _ in range(samples)], dtype=np.int64)
    ks = np.array([rng.randrange(n) for _ in range(samples)], dtype=np.int64)
    law = view.law
    left = kernels.mul_many(law, kernels.mul_many(law, gs, hs), ks)
    right = kernels.mul_many(law, gs, kernels.mul_many(law, hs, ks))
    return bool((left == right).all())


def criterion_10_engine_soundness(max_exp: int = 12):
    rng = random.Random(715)
    small = 0
    for p in (2, 3, 5):
        for params in _grid_tuples(p, 2**8):
            small += 1
            if not _associativity_exhaustive(make_metacyclic(params)):
                return False, f"axioms failed for {params}"
        for a in range(0, 9):
            for b in range(0, a + 1):
                if p ** (a + b) > 2**8:
                    continue
                small += 1
                if not _associativity_exhaustive(make_direct_product(p, a, b)):
                    return False, f"axioms failed for C_{p}^{a} x C_{p}^{b}"
    large = 0
    for params in enumerate_grid(SweepGrid(p=2, max_order_exponent=max_exp)):
        if params.order <= 2**8:
            continue
        large += 1
        if not _associativity_sampled(make_metacyclic(params), rng):
            return False, f"sampled associativity failed for {params}"
    return True, f"{small} views exhaustive, {large} views sampled"


def branch_coverage(sw: _Sweeps):
    """Every dispatcher case fires somewhere in the p=2 grid."""
    seen = {r.case_tag for r in sw.p2}
    missing = [t for t in ALL_CASE_TAGS if t not in seen]
    return not missing, f"missing tags: {missing}" if missing else "all case tags hit"


def run_all(max_exp: int = 12,
            report: Optional[Callable[[CriterionResult], None]] = None
            ) -> List[CriterionResult]:
    sw = _Sweeps(max_exp=max_exp)
    steps = [
        (1, "formula-oracle equivalence, p=2", lambda: criterion_1_formula_oracle_p2(sw)),
        (2, "formula-oracle equivalence, odd p", lambda: criterion_2_formula_oracle_odd(max_exp)),
        (3, "eta=3 family", lambda: criterion_3_eta3_family(max_exp)),
        (4, "abelian direct-product formula", criterion_4_abelian_formula),
        (5, "main lower bound + equality", lambda: criterion_5_main_bound(sw)),
        (6, "quotient theorems", criterion_6_quotient_theorems),
        (7, "structure closed forms", lambda: criterion_7_structure(sw)),
        (8, "conjugacy class cosets", criterion_8_conjugacy),
        (9, "index-2 subgroup counts", criterion_9_index2_counts),
        (10, "engine soundness", lambda: criterion_10_engine_soundness(max_exp)),
    ]
    results = []
    for number, name, fn in steps:
        passed, detail = fn()
        res = CriterionResult(number, name, passed, detail)
        results.append(res)
        if report is not None:
            report(res)
    return results

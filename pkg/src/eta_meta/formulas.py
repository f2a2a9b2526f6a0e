"""Closed-form values of eta, the count of conjugacy classes of maximal
cyclic subgroups, over the whole parameter space.

The dispatcher covers every valid tuple exactly once; `case_tag` records
which case fired so sweeps can audit branch coverage.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .params import NEGATIVE, POSITIVE, GroupParams, classify

ETA3_FAMILY = "eta3_family"
POS_AB_I = "positive_via_abelianization_i"
POS_AB_II = "positive_via_abelianization_ii"
NEG_EPS0_BETA2 = "neg_eps0_beta2"
NEG_EPS0_LARGE = "neg_eps0_large"
NEG_EPS1_BETA2 = "neg_eps1_beta2"
NEG_EPS1_ALPHA2 = "neg_eps1_alpha2"
NEG_EPS1_LARGE_AGEB = "neg_eps1_large_ageb"
NEG_EPS1_LARGE_ALTB = "neg_eps1_large_altb"
NEG_DELTA_GE2_BETA2 = "neg_delta_ge2_beta2"
NEG_DELTA_GE2 = "neg_delta_ge2"

ALL_CASE_TAGS = (
    ETA3_FAMILY, POS_AB_I, POS_AB_II,
    NEG_EPS0_BETA2, NEG_EPS0_LARGE,
    NEG_EPS1_BETA2, NEG_EPS1_ALPHA2, NEG_EPS1_LARGE_AGEB, NEG_EPS1_LARGE_ALTB,
    NEG_DELTA_GE2_BETA2, NEG_DELTA_GE2,
)


class NegativeTypeUnsupported(ValueError):
    """Abelianization shape is only closed-form for positive type."""


class DeltaZeroUndefined(ValueError):
    """Quotient parameters need delta >= 1."""


@dataclass(frozen=True)
class EtaFormulaResult:
    eta: int
    case_tag: str
    abelianization: Optional[Tuple[int, int]] = None


@dataclass(frozen=True)
class EtaBound:
    n_minus_2: int
    bound_applies: bool
    equality_expected: bool


def g_p(p: int, a: int, b: int) -> int:
    """eta of C_{p^a} x C_{p^b}.

    For a, b >= 1 this is p^(l-1)*((k-l)(p-1) + p + 1) with k = max(a,b),
    l = min(a,b).  Degenerate products (min(a,b) = 0) are cyclic, where the
    answer is 1; the formula is extended accordingly.
    """
    if a < 0 or b < 0:
        raise ValueError("exponents must be nonnegative")
    k, l = max(a, b), min(a, b)
    if l == 0:
        return 1
    return p ** (l - 1) * ((k - l) * (p - 1) + p + 1)


def abelianization_type(params: GroupParams) -> Tuple[int, int]:
    """Cyclic-factor exponents (a, b) of G/G' for positive type."""
    if params.sign != POSITIVE:
        raise NegativeTypeUnsupported(
            "no closed form for negative-type abelianization; use the oracle")
    a, b, e, d = params.alpha, params.beta, params.epsilon, params.delta
    if d >= e or a >= b + e:
        return (a - d, b)
    return (a - e, b + e - d)


def quotient_params(params: GroupParams) -> GroupParams:
    """Parameters of G / <x^(p^(alpha-delta+1))>.

    For delta = 1 the subgroup is trivial and the parameters are unchanged;
    for delta >= 2 the quotient is G_p(alpha-delta+1, beta, eps*, 1, sign)
    with eps* = epsilon - delta + 1 when epsilon >= delta - 1, else 0.
    """
    if params.delta == 0:
        raise DeltaZeroUndefined("quotient subgroup is undefined for delta = 0")
    if params.delta == 1:
        return params
    e_star = params.epsilon - params.delta + 1
    if e_star < 0:
        e_star = 0
    return GroupParams(params.p, params.alpha - params.delta + 1, params.beta,
                       e_star, 1, params.sign)


def _exact_half(n: int) -> int:
    if n % 2:
        raise AssertionError(f"expected an even intermediate value, got {n}")
    return n // 2


def eta_formula(params: GroupParams) -> EtaFormulaResult:
    """Dispatch the closed-form eta over the (canonicalized) parameters."""
    c = classify(params)
    q = c.canonical_params
    a, b, e, d = q.alpha, q.beta, q.epsilon, q.delta

    if q.sign == POSITIVE:
        ab = abelianization_type(q)
        tag = POS_AB_I if (d >= e or a >= b + e) else POS_AB_II
        return EtaFormulaResult(g_p(q.p, *ab), tag, abelianization=ab)

    if b == 1:
        return EtaFormulaResult(3, ETA3_FAMILY)

    if d >= 2:
        if b == 2:
            # delta <= beta forces delta = 2 here
            return EtaFormulaResult(a + 1, NEG_DELTA_GE2_BETA2)
        return EtaFormulaResult(
            _exact_half(g_p(2, a - d + 1, b - 1)) + 2, NEG_DELTA_GE2)

    if e == 0:
        if b == 2:
            return EtaFormulaResult(a + 3 if d == 0 else a + 2, NEG_EPS0_BETA2)
        bump = 3 if d == 0 else 2
        return EtaFormulaResult(
            _exact_half(g_p(2, a, b - 1)) + bump, NEG_EPS0_LARGE)

    # epsilon = 1; canonicalization has already rewritten delta 1 -> 0
    assert d == 0, f"uncanonicalized tuple reached dispatcher: {params}"
    if b == 2:
        return EtaFormulaResult(a + 2, NEG_EPS1_BETA2)
    if a == 2:
        return EtaFormulaResult(b + 2, NEG_EPS1_ALPHA2)
    if a >= b:
        return EtaFormulaResult(
            _exact_half(g_p(2, a, b - 1)) + 3, NEG_EPS1_LARGE_AGEB)
    return EtaFormulaResult(
        _exact_half(g_p(2, a - 1, b)) + 3, NEG_EPS1_LARGE_ALTB)


def eta_lower_bound(params: GroupParams) -> EtaBound:
    """The eta >= alpha + beta - 2 bound and its equality classification.

    The bound only applies outside the dihedral / generalized quaternion /
    semidihedral family and to noncyclic groups (the positive-type tuples
    with delta = 0 and epsilon = alpha present cyclic groups, where eta = 1).
    Equality occurs exactly for negative type with delta >= 2, beta = delta
    and either beta = 3, or beta >= 4 with alpha - beta = 2; all other
    tuples in scope satisfy eta >= alpha + beta.
    """
    c = classify(params)
    presents_cyclic = (params.sign == POSITIVE and params.delta == 0
                       and params.epsilon == params.alpha)
    equality = (
        params.sign == NEGATIVE
        and params.delta >= 2
        and params.beta == params.delta
        and (params.beta == 3 or (params.beta >= 4 and params.alpha - params.beta == 2))
    )
    return EtaBound(
        n_minus_2=params.alpha + params.beta - 2,
        bound_applies=c.maximal_class_family is None and not presents_cyclic,
        equality_expected=equality,
    )

"""Parameter model for metacyclic p-groups.

A group is pinned down by (p, alpha, beta, epsilon, delta, sign) with
presentation

    x^(p^alpha) = 1,   y^(p^beta) = x^(p^(alpha - epsilon)),   x^y = x^r

where r = p^(alpha - delta) + 1 for sign '+' and p^(alpha - delta) - 1 for
sign '-'.  Negative sign only exists for p = 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

POSITIVE = "+"
NEGATIVE = "-"

DIHEDRAL = "dihedral"
GENERALIZED_QUATERNION = "generalized_quaternion"
SEMIDIHEDRAL = "semidihedral"


class ParamError(ValueError):
    """Base class for parameter rejections."""


class NonPrimeP(ParamError):
    pass


class NegativeTypeRequiresP2(ParamError):
    pass


class ConstraintViolated(ParamError):
    pass


class OverflowBudgetExceeded(ParamError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class GroupParams:
    p: int
    alpha: int
    beta: int
    epsilon: int
    delta: int
    sign: str

    @property
    def r(self) -> int:
        """Conjugation exponent, reduced mod p^alpha."""
        base = self.p ** (self.alpha - self.delta)
        r = base + 1 if self.sign == POSITIVE else base - 1
        return r % self.p**self.alpha

    @property
    def order(self) -> int:
        return self.p ** (self.alpha + self.beta)

    def as_tuple(self) -> tuple:
        return (self.p, self.alpha, self.beta, self.epsilon, self.delta, self.sign)

    def __str__(self) -> str:
        return "G_%d(%d,%d,%d,%d,%s)" % self.as_tuple()


@dataclass(frozen=True)
class Classification:
    group_type: str
    is_abelian: bool
    maximal_class_family: Optional[str]
    canonical_params: GroupParams
    group_order_exponent: int


def validate(raw) -> GroupParams:
    """Check a (p, alpha, beta, epsilon, delta, sign) tuple and build GroupParams.

    Raises NonPrimeP, NegativeTypeRequiresP2 or ConstraintViolated (with the
    violated constraint named) when the tuple describes no group.
    """
    p, alpha, beta, epsilon, delta, sign = raw
    for name, v in (("p", p), ("alpha", alpha), ("beta", beta),
                    ("epsilon", epsilon), ("delta", delta)):
        if not isinstance(v, int) or isinstance(v, bool):
            raise ConstraintViolated(f"{name} must be an integer, got {v!r}")
    if sign not in (POSITIVE, NEGATIVE):
        raise ConstraintViolated(f"sign must be '+' or '-', got {sign!r}")
    if not _is_prime(p):
        raise NonPrimeP(f"p = {p} is not prime")
    if sign == NEGATIVE and p != 2:
        raise NegativeTypeRequiresP2(f"negative type needs p = 2, got p = {p}")
    if alpha < 1 or beta < 1:
        raise ConstraintViolated(f"alpha, beta must be positive (alpha={alpha}, beta={beta})")
    if epsilon < 0 or delta < 0:
        raise ConstraintViolated(f"delta, epsilon must be nonnegative (epsilon={epsilon}, delta={delta})")
    if delta > min(alpha - 1, beta):
        raise ConstraintViolated(
            f"delta <= min(alpha-1, beta) violated: delta={delta}, alpha={alpha}, beta={beta}")
    if delta + epsilon > alpha:
        raise ConstraintViolated(
            f"delta + epsilon <= alpha violated: {delta}+{epsilon} > {alpha}")
    if p == 2 and alpha - delta <= 1:
        raise ConstraintViolated(
            f"alpha - delta > 1 required for p = 2: alpha={alpha}, delta={delta}")
    if sign == NEGATIVE:
        if epsilon not in (0, 1):
            raise ConstraintViolated(
                f"negative type allows epsilon in {{0,1}}, got {epsilon}")
        if epsilon == 0 and (alpha < delta + 2 or beta < delta):
            raise ConstraintViolated(
                f"negative type, epsilon=0 needs alpha >= delta+2 and beta >= delta "
                f"(alpha={alpha}, beta={beta}, delta={delta})")
        if epsilon == 1 and beta < delta + 1:
            raise ConstraintViolated(
                f"negative type, epsilon=1 needs beta >= delta+1 (beta={beta}, delta={delta})")
    return GroupParams(p, alpha, beta, epsilon, delta, sign)


def classify(params: GroupParams) -> Classification:
    """Type flags plus the canonical form of the parameters.

    The only rewrite is (alpha, beta, 1, 1, -) -> (alpha, beta, 1, 0, -),
    which gives an isomorphic group whenever alpha >= 3 and beta >= 2.
    """
    family = None
    if params.sign == NEGATIVE and params.beta == 1:
        family = {
            (0, 0): DIHEDRAL,
            (1, 0): GENERALIZED_QUATERNION,
            (0, 1): SEMIDIHEDRAL,
        }[(params.epsilon, params.delta)]
    canonical = params
    if (params.sign == NEGATIVE and params.epsilon == 1 and params.delta == 1
            and params.alpha >= 3 and params.beta >= 2):
        canonical = GroupParams(params.p, params.alpha, params.beta, 1, 0, NEGATIVE)
    return Classification(
        group_type=params.sign,
        is_abelian=(params.sign == POSITIVE and params.delta == 0),
        maximal_class_family=family,
        canonical_params=canonical,
        group_order_exponent=params.alpha + params.beta,
    )


def group_order(params: GroupParams, budget: Optional[int] = None) -> int:
    """p^(alpha+beta); raises when a materializable order was requested and the
    budget is exceeded."""
    n = params.order
    if budget is not None and n > budget:
        raise OverflowBudgetExceeded(f"|G| = {n} exceeds enumeration budget {budget}")
    return n

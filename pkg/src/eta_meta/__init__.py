"""Counting conjugacy classes of maximal cyclic subgroups of metacyclic
p-groups: closed-form case formulas cross-checked against a brute-force
oracle."""

from .engine import (
    BudgetExceeded,
    ForeignHandle,
    GroupElement,
    NotNormal,
    SubgroupElements,
    make_direct_product,
    make_metacyclic,
    quotient_view,
    subgroup_closure,
    subgroup_view,
)
from .formulas import (
    EtaFormulaResult,
    abelianization_type,
    eta_formula,
    eta_lower_bound,
    g_p,
    quotient_params,
)
from .kernels import BACKEND
from .oracle import (
    abelian_invariants,
    cyclic_subgroups,
    eta,
    eta_star,
    maximal_cyclic_subgroups,
    pth_power_set,
    structure,
)
from .params import Classification, GroupParams, classify, group_order, validate
from .verify import EtaReport, SweepGrid, sweep, verify_theorems, verify_tuple

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BudgetExceeded",
    "Classification",
    "EtaFormulaResult",
    "EtaReport",
    "ForeignHandle",
    "GroupElement",
    "GroupParams",
    "NotNormal",
    "SubgroupElements",
    "SweepGrid",
    "abelian_invariants",
    "abelianization_type",
    "classify",
    "cyclic_subgroups",
    "eta",
    "eta_formula",
    "eta_lower_bound",
    "eta_star",
    "g_p",
    "group_order",
    "make_direct_product",
    "make_metacyclic",
    "maximal_cyclic_subgroups",
    "pth_power_set",
    "quotient_params",
    "quotient_view",
    "structure",
    "subgroup_closure",
    "subgroup_view",
    "sweep",
    "validate",
    "verify_theorems",
    "verify_tuple",
]

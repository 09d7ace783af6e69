"""First cohomology of unitary highest-weight representations of U(inf) and U_p(H)."""

from .branching import branch, branch_count, fixed_space_dim, has_fixed_vector, interlaces
from .classifier import GroupId, GroupKind, Rule, Verdict, classify, extends_to, parse_group
from .errors import (
    CapExceededError,
    CompatibilityError,
    ContractViolation,
    DegeneratePatternError,
    HwclError,
    ParseError,
)
from .oracles import branching_identity_check, count_ssyt, schur_eval, weyl_dim
from .weights import (
    FiniteWeight,
    Partition,
    Weight,
    conjugate,
    dual_weight,
    parse_tuple,
    parse_weight,
    split_signs,
)

__version__ = "0.1.0"

__all__ = [
    "Weight",
    "Partition",
    "FiniteWeight",
    "parse_weight",
    "parse_tuple",
    "conjugate",
    "split_signs",
    "dual_weight",
    "interlaces",
    "branch",
    "branch_count",
    "fixed_space_dim",
    "has_fixed_vector",
    "GroupId",
    "GroupKind",
    "Rule",
    "Verdict",
    "parse_group",
    "extends_to",
    "classify",
    "weyl_dim",
    "count_ssyt",
    "schur_eval",
    "branching_identity_check",
    "HwclError",
    "ParseError",
    "CapExceededError",
    "ContractViolation",
    "DegeneratePatternError",
    "CompatibilityError",
]

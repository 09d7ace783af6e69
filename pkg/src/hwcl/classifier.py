"""Decide whether H^1(G, pi_lambda, H_lambda) vanishes.

Groups are U(inf), the Schatten unitary groups U_p(H) for 1 <= p < inf,
the compact-perturbation group U_inf(H) and the full unitary group U(H).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import ParseError
from .weights import Weight, parse_weight

__all__ = [
    "GroupKind",
    "GroupId",
    "Rule",
    "Verdict",
    "parse_group",
    "extends_to",
    "classify",
]


class GroupKind(str, enum.Enum):
    UINF = "uinf"
    UP = "up"
    UINFTY_COMPACT = "uinfty-compact"
    FULL = "full"


@dataclass(frozen=True)
class GroupId:
    kind: GroupKind
    p: float | None = None

    def __post_init__(self):
        if self.kind is GroupKind.UP:
            if self.p is None or not (1.0 <= self.p < math.inf):
                raise ValueError(f"U_p needs 1 <= p < inf, got {self.p}")
        elif self.p is not None:
            raise ValueError(f"{self.kind.value} takes no exponent")

    @classmethod
    def uinf(cls) -> "GroupId":
        return cls(GroupKind.UINF)

    @classmethod
    def up(cls, p: float) -> "GroupId":
        return cls(GroupKind.UP, float(p))

    @classmethod
    def uinfty_compact(cls) -> "GroupId":
        return cls(GroupKind.UINFTY_COMPACT)

    @classmethod
    def full(cls) -> "GroupId":
        return cls(GroupKind.FULL)

    def __str__(self) -> str:
        if self.kind is GroupKind.UP:
            return f"up:{self.p:g}"
        return self.kind.value


def parse_group(text: str) -> GroupId:
    """Parse ``uinf``, ``up:<p>``, ``uinfty-compact`` or ``full``."""
    t = text.strip().lower()
    if t.startswith("up:"):
        try:
            p = float(t[3:])
        except ValueError:
            raise ParseError(f"bad exponent in {text!r}") from None
        if math.isinf(p):
            # U_p for p = inf is the compact-perturbation group
            return GroupId.uinfty_compact()
        if not p >= 1.0:
            raise ParseError(f"U_p needs p >= 1, got {text!r}")
        return GroupId.up(p)
    try:
        kind = GroupKind(t)
    except ValueError:
        raise ParseError(
            f"unknown group {text!r}; expected uinf, up:<p>, uinfty-compact or full"
        ) from None
    if kind is GroupKind.UP:
        raise ParseError("U_p needs an exponent, e.g. up:2")
    return GroupId(kind)


class Rule(str, enum.Enum):
    ZERO_WEIGHT = "ZeroWeight"
    SIGN_COUNT = "SignCount"
    FINITELY_SUPPORTED_NONZERO = "FinitelySupportedNonzero"
    SIZE_AT_MOST_ONE = "SizeAtMostOne"
    SIZE_AT_LEAST_TWO = "SizeAtLeastTwo"
    BOUNDED_GROUP = "BoundedGroup"
    DOES_NOT_EXTEND = "DoesNotExtend"
    OPEN_PROBLEM = "OpenProblem"


_CITATIONS = {
    Rule.ZERO_WEIGHT:
        "trivial representation of a direct limit of compact groups: "
        "every cocycle is conditional and H^G = H^{G_n}, so H^1 = 0",
    Rule.SIGN_COUNT:
        "U(inf), lambda != 0: H^1 = 0 iff #{j: lambda_j <= 0} < inf "
        "or #{j: lambda_j >= 0} < inf (branching to U(n)-fixed vectors)",
    Rule.FINITELY_SUPPORTED_NONZERO:
        "U(inf), finitely supported lambda != 0: both sign counts are infinite, "
        "so U(n)-fixed vectors exist for every n and H^1 != 0",
    Rule.SIZE_AT_MOST_ONE:
        "U_p(H), 1 <= p < inf, finitely supported lambda: H^1 = 0 iff |lambda| <= 1 "
        "(natural and dual representations)",
    Rule.SIZE_AT_LEAST_TWO:
        "U_p(H), 1 <= p < inf, finitely supported lambda with |lambda| >= 2: "
        "sum_n n^(-1/2) (g e_n - e_n) is an unbounded cocycle, H^1 != 0",
    Rule.BOUNDED_GROUP:
        "U_inf(H) and U(H) are bounded groups; every cocycle is bounded, "
        "hence a coboundary, so H^1 = 0",
    Rule.DOES_NOT_EXTEND:
        "pi_lambda extends to U_1(H) iff lambda is bounded and to U_p(H), p > 1, "
        "U_inf(H), U(H) iff lambda is finitely supported",
    Rule.OPEN_PROBLEM:
        "U_1(H), bounded lambda with infinite support: not decided; "
        "U(inf)-cocycles need not extend",
}

_DENSITY_NOTE = "; U(inf) is dense in U_1(H), so vanishing transfers"


@dataclass(frozen=True)
class Verdict:
    group: GroupId
    weight: Weight
    extends: bool
    vanishes: bool | None
    rule: Rule
    citation: str

    def __post_init__(self):
        if (self.vanishes is not None) != self.extends and self.rule is not Rule.OPEN_PROBLEM:
            raise ValueError("vanishes must be present iff the representation extends")

    def to_dict(self) -> dict:
        return {
            "group": str(self.group),
            "weight": str(self.weight),
            "extends": self.extends,
            "vanishes": self.vanishes,
            "rule": self.rule.value,
            "citation": self.citation,
        }


def extends_to(w: Weight, g: GroupId) -> bool:
    """Whether pi_w (a U(inf) representation) extends continuously to ``g``."""
    if g.kind is GroupKind.UINF:
        return True
    if g.kind is GroupKind.UP and g.p == 1.0:
        # eventually constant weights are bounded
        return True
    return w.finitely_supported


def _uinf_vanishes(w: Weight) -> tuple[bool, Rule]:
    if w.is_zero:
        return True, Rule.ZERO_WEIGHT
    # tail > 0: only finitely many entries are <= 0; tail < 0 symmetrically
    if w.tail != 0:
        return True, Rule.SIGN_COUNT
    return False, Rule.FINITELY_SUPPORTED_NONZERO


def classify(w: Weight, g: GroupId) -> Verdict:
    if isinstance(w, str):
        w = parse_weight(w)
    if not extends_to(w, g):
        return Verdict(g, w, False, None, Rule.DOES_NOT_EXTEND,
                       _CITATIONS[Rule.DOES_NOT_EXTEND])

    if g.kind in (GroupKind.UINFTY_COMPACT, GroupKind.FULL):
        return Verdict(g, w, True, True, Rule.BOUNDED_GROUP, _CITATIONS[Rule.BOUNDED_GROUP])

    if g.kind is GroupKind.UINF:
        vanishes, rule = _uinf_vanishes(w)
        return Verdict(g, w, True, vanishes, rule, _CITATIONS[rule])

    # U_p(H), 1 <= p < inf
    if w.finitely_supported:
        if w.is_zero:
            return Verdict(g, w, True, True, Rule.ZERO_WEIGHT, _CITATIONS[Rule.ZERO_WEIGHT])
        size = w.to_finite().size
        if size <= 1:
            return Verdict(g, w, True, True, Rule.SIZE_AT_MOST_ONE,
                           _CITATIONS[Rule.SIZE_AT_MOST_ONE])
        return Verdict(g, w, True, False, Rule.SIZE_AT_LEAST_TWO,
                       _CITATIONS[Rule.SIZE_AT_LEAST_TWO])

    # p == 1 and bounded weight with infinite support
    vanishes, rule = _uinf_vanishes(w)
    if vanishes:
        return Verdict(g, w, True, True, rule, _CITATIONS[rule] + _DENSITY_NOTE)
    # unreachable for eventually constant weights (tail != 0 always vanishes
    # on U(inf)); kept so the open case is never answered by inference
    return Verdict(g, w, True, None, Rule.OPEN_PROBLEM, _CITATIONS[Rule.OPEN_PROBLEM])

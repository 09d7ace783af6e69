"""Symmetric-function oracles for characters of U(n).

These are deliberately independent of the tensor constructions in
:mod:`hwcl.tensor_rep`: characters come from the bialternant formula,
dimensions from the Weyl product formula and from brute-force tableau
enumeration.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .branching import branch, sorted_desc

__all__ = [
    "weyl_dim",
    "hook_content_dim",
    "count_ssyt",
    "schur_eval",
    "random_circle_point",
    "branching_identity_check",
]

DISTINCT_RTOL = 1e-12


def _require_sorted(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if list(lam) != sorted(lam, reverse=True):
        raise ValueError(f"weight must be sorted descending: {lam}")
    return lam


def weyl_dim(lam: Sequence[int]) -> int:
    """Dimension of the U(n) irreducible with highest weight ``lam`` (n = len).

    >>> weyl_dim((3, 2, 2, 1))
    15
    """
    lam = _require_sorted(lam)
    n = len(lam)
    d = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            d *= Fraction(lam[i] - lam[j] + j - i, j - i)
    assert d.denominator == 1
    return int(d)


def hook_content_dim(parts: Sequence[int], n: int) -> int:
    """``prod (n + c) / hook`` over the boxes of a partition."""
    parts = [p for p in parts if p > 0]
    conj = [sum(1 for p in parts if p > j) for j in range(parts[0])] if parts else []
    num, den = 1, 1
    for i, row in enumerate(parts):
        for j in range(row):
            num *= n + j - i
            den *= (row - j - 1) + (conj[j] - i - 1) + 1
    return num // den


def count_ssyt(parts: Sequence[int], n: int) -> int:
    """Number of semistandard tableaux of the given shape, entries in 1..n.

    Plain backtracking over the cells in row-major order.  Exponential; only
    meant for tiny shapes.
    """
    parts = [p for p in parts if p > 0]
    cells = [(i, j) for i, row in enumerate(parts) for j in range(row)]
    filling: dict[tuple[int, int], int] = {}

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        total = 0
        for v in range(lo, n + 1):
            filling[(i, j)] = v
            total += rec(idx + 1)
        filling.pop((i, j), None)
        return total

    return rec(0)


def _check_distinct(x: np.ndarray) -> None:
    scale = max(1.0, float(np.max(np.abs(x)))) if x.size else 1.0
    for i in range(len(x)):
        for j in range(i + 1, len(x)):
            if abs(x[i] - x[j]) <= DISTINCT_RTOL * scale:
                raise ValueError(
                    "evaluation point has (nearly) coincident coordinates; "
                    "use weyl_dim for x = (1, ..., 1)")


def schur_eval(lam: Sequence[int], x: Sequence[complex]) -> complex:
    """Character of the U(n) irreducible ``lam`` at ``diag(x)``.

    Computed as ``det(x_i^(lam_j + n - j)) / det(x_i^(n - j))``.  Negative
    entries are handled by factoring out ``det^(lam_n)``.
    """
    lam = _require_sorted(lam)
    x = np.asarray(x, dtype=complex)
    n = len(lam)
    if x.shape != (n,):
        raise ValueError(f"need {n} coordinates, got {x.shape}")
    if n == 0:
        return 1.0 + 0j
    _check_distinct(x)
    shift = lam[-1]
    mu = [l - shift for l in lam]
    exps_num = np.array([mu[j] + n - 1 - j for j in range(n)])
    exps_den = np.arange(n - 1, -1, -1)
    num = np.linalg.det(x[:, None] ** exps_num[None, :])
    den = np.linalg.det(x[:, None] ** exps_den[None, :])
    twist = np.prod(x) ** shift if shift >= 0 else np.prod(1.0 / x) ** (-shift)
    return complex(twist * num / den)


def random_circle_point(n: int, rng: np.random.Generator, min_gap: float = 0.05,
                        avoid_one: bool = True) -> np.ndarray:
    """``n`` unit-circle points with pairwise angular gap >= ``min_gap``.

    With ``avoid_one`` the point 1 (angle 0) also keeps that distance, so
    the result can be extended by a coordinate equal to 1.
    """
    for _ in range(10_000):
        theta = rng.uniform(0.0, 2 * np.pi, size=n)
        ang = np.sort(np.concatenate([theta, [0.0]]) if avoid_one else theta)
        gaps = np.diff(np.concatenate([ang, [ang[0] + 2 * np.pi]])) if len(ang) > 1 else [np.inf]
        if np.min(gaps) >= min_gap:
            return np.exp(1j * theta)
    raise RuntimeError(f"could not sample {n} separated points")


def branching_identity_check(lam: Sequence[int], trials: int = 10, seed: int = 0,
                             rtol: float = 1e-9, etas=None) -> bool:
    """Check ``chi_lam(x, 1) == sum_{eta < lam} chi_eta(x)`` at random points.

    ``etas`` defaults to :func:`hwcl.branching.branch`; passing another list
    lets tests confirm the check rejects wrong decompositions.
    """
    lam = sorted_desc(lam)
    if len(lam) < 2:
        raise ValueError("branching identity needs len(lam) >= 2")
    if etas is None:
        etas = branch(lam)
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        x = random_circle_point(len(lam) - 1, rng)
        lhs = schur_eval(lam, np.concatenate([x, [1.0]]))
        rhs = sum(schur_eval(sorted_desc(eta), x) for eta in etas)
        if abs(lhs - rhs) > rtol * max(1.0, abs(lhs), abs(rhs)):
            return False
    return True

"""U(n+1) -> U(n) branching via interlacing tuples, and fixed-vector counts.

All functions accept tuples in any order; entries are sorted descending
before use, so a tuple and any permutation of it name the same
representation.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import prod
from typing import Sequence

__all__ = [
    "MAX_COUNT",
    "sorted_desc",
    "interlaces",
    "branch",
    "branch_count",
    "fixed_space_dim",
    "has_fixed_vector",
    "property_p",
]

MAX_COUNT = 2**63 - 1


def sorted_desc(lam: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted((int(x) for x in lam), reverse=True))


def _checked(count: int, what: str) -> int:
    if count > MAX_COUNT:
        raise OverflowError(f"{what} exceeds the 64-bit range: {count}")
    return count


def interlaces(eta: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff ``lam_1 >= eta_1 >= lam_2 >= ... >= eta_n >= lam_{n+1}``
    after sorting both tuples descending."""
    if len(eta) + 1 != len(lam):
        raise ValueError(
            f"interlacing needs len(eta) + 1 == len(lam), got {len(eta)} and {len(lam)}")
    eta, lam = sorted_desc(eta), sorted_desc(lam)
    return all(lam[i] >= eta[i] >= lam[i + 1] for i in range(len(eta)))


def branch(lam: Sequence[int]) -> list[tuple[int, ...]]:
    """All ``eta`` interlacing ``lam``, in lexicographically descending order.

    These are exactly the highest weights of the U(n) constituents of the
    U(n+1) representation with highest weight ``lam``, each of multiplicity one.
    """
    if len(lam) < 1:
        raise ValueError("branch needs a tuple of length >= 1")
    lam = sorted_desc(lam)
    ranges = [range(lam[i], lam[i + 1] - 1, -1) for i in range(len(lam) - 1)]
    return [tuple(eta) for eta in itertools.product(*ranges)]


def branch_count(lam: Sequence[int]) -> int:
    """Number of interlacing tuples, ``prod_i (lam_i - lam_{i+1} + 1)``."""
    if len(lam) < 1:
        raise ValueError("branch_count needs a tuple of length >= 1")
    lam = sorted_desc(lam)
    return _checked(prod(lam[i] - lam[i + 1] + 1 for i in range(len(lam) - 1)),
                    "branch count")


@lru_cache(maxsize=None)
def _chains_to_zero(lam: tuple[int, ...], n: int) -> int:
    # lam is sorted descending, len(lam) >= n
    if len(lam) == n:
        return 1 if all(x == 0 for x in lam) else 0
    # no pruning: this count is the brute-force side checked against has_fixed_vector
    return sum(_chains_to_zero(eta, n) for eta in branch(lam))


def fixed_space_dim(lam: Sequence[int], n: int) -> int:
    """Dimension of the U(n)-fixed vectors in the U(k) representation ``lam``.

    Counted as the number of interlacing chains
    ``lam = eta^(k) >= eta^(k-1) >= ... >= eta^(n) = (0, ..., 0)``, where U(n)
    sits in U(k) as the upper-left block.
    """
    if not 1 <= n <= len(lam):
        raise ValueError(f"need 1 <= n <= len(lam), got n={n}, len={len(lam)}")
    return _checked(_chains_to_zero(sorted_desc(lam), n), "fixed-space dimension")


def property_p(lam: Sequence[int], n: int) -> bool:
    """``#{j: lam_j >= 0} >= n`` and ``#{j: lam_j <= 0} >= n``."""
    return (sum(1 for x in lam if x >= 0) >= n
            and sum(1 for x in lam if x <= 0) >= n)


def has_fixed_vector(lam: Sequence[int], n: int) -> bool:
    """Closed-form sign-count criterion for nonzero U(n)-fixed vectors."""
    if not 1 <= n <= len(lam):
        raise ValueError(f"need 1 <= n <= len(lam), got n={n}, len={len(lam)}")
    return property_p(lam, n)

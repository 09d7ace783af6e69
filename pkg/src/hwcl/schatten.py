r"""Schatten norms and the summability estimate behind U_p cocycles.

For ``p > 2`` and ``a`` in ``l^q`` with ``q = 2p / (p - 2)`` the sum
``sum_n |a_n|^2 ||(g - 1) e_n||^2 = ||(g - 1) A||_2^2`` is finite for every
``g`` in ``U_p(H)``, by Hoelder's inequality for Schatten norms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.stats import unitary_group

from .cocycles import Coefficients, DiagonalElement

__all__ = [
    "schatten_norm",
    "hoelder_check",
    "q_exponent",
    "weighted_tail",
    "WeightedTail",
    "random_up_element",
    "sequence_norm",
]


def _check_exponent(p: float) -> float:
    p = float(p)
    if not p >= 1.0:
        raise ValueError(f"Schatten exponent must be >= 1, got {p}")
    return p


def schatten_norm(A, p: float) -> float:
    r"""Schatten ``p``-norm of a matrix.

    .. math::
      \| A \|_p = \Big(\sum_i \sigma_i^p\Big)^{1/p}, \qquad
      \| A \|_\infty = \max_i \sigma_i

    Parameters
    ----------
    A : array_like
      Input matrix
    p : float
      Exponent in ``[1, inf]``

    Returns
    -------
    nrm : float
    """
    p = _check_exponent(p)
    s = np.linalg.svd(np.atleast_2d(np.asarray(A, dtype=complex)), compute_uv=False)
    if s.size == 0:
        return 0.0
    if math.isinf(p):
        return float(s[0])
    # scale first so large p does not overflow
    top = s[0]
    if top == 0:
        return 0.0
    return float(top * np.sum((s / top) ** p) ** (1.0 / p))


def sequence_norm(a, q: float) -> float:
    """``l^q`` norm of a finite sequence."""
    a = np.abs(np.asarray(a))
    if a.size == 0:
        return 0.0
    if math.isinf(q):
        return float(a.max())
    return float(np.sum(a**q) ** (1.0 / q))


def _inv(x: float) -> float:
    return 0.0 if math.isinf(x) else 1.0 / x


def hoelder_check(B, C, r: float, s: float, t: float) -> float:
    """Margin ``||B||_s ||C||_t - ||BC||_r`` of the generalized Hoelder inequality.

    Requires ``1/r <= 1/s + 1/t``; the margin is then nonnegative up to
    rounding.
    """
    r, s, t = (_check_exponent(x) for x in (r, s, t))
    if _inv(r) > _inv(s) + _inv(t) + 1e-15:
        raise ValueError(f"need 1/r <= 1/s + 1/t, got r={r}, s={s}, t={t}")
    B = np.asarray(B, dtype=complex)
    C = np.asarray(C, dtype=complex)
    return schatten_norm(B, s) * schatten_norm(C, t) - schatten_norm(B @ C, r)


def q_exponent(p: float) -> float:
    """``2p / (p - 2)`` for ``2 < p < inf``; ``inf`` for ``1 <= p <= 2``."""
    p = _check_exponent(p)
    if p <= 2.0:
        return math.inf
    if math.isinf(p):
        return 2.0
    return 2.0 * p / (p - 2.0)


@dataclass
class WeightedTail:
    partials: np.ndarray
    cauchy_tail: float

    @property
    def total(self) -> float:
        return float(self.partials[-1]) if self.partials.size else 0.0


def column_defects(g, N: int) -> np.ndarray:
    """``||(g - 1) e_n||^2`` for n = 1..N."""
    if isinstance(g, DiagonalElement):
        return 4.0 * np.sin(g.angles(N) / 2.0) ** 2
    g = np.asarray(g, dtype=complex)
    d = g - np.eye(g.shape[0])
    col = np.sum(np.abs(d) ** 2, axis=0)
    out = np.zeros(N)
    m = min(N, col.size)
    out[:m] = col[:m]
    return out


def weighted_tail(g, a: Coefficients | Callable, N: int) -> WeightedTail:
    """Partial sums of ``sum_n |a_n|^2 ||(g - 1) e_n||^2`` and the tail ``S_N - S_{N/2}``.

    ``g`` is a :class:`DiagonalElement` or a unitary matrix (identity beyond
    its size).
    """
    coeffs = a(N) if isinstance(a, Coefficients) else np.asarray(a(np.arange(1, N + 1)))
    partials = np.cumsum(np.abs(coeffs) ** 2 * column_defects(g, N))
    half = N // 2
    tail = float(partials[-1] - (partials[half - 1] if half >= 1 else 0.0))
    return WeightedTail(partials, tail)


def random_up_element(n: int, p: float, decay: float, seed: int) -> np.ndarray:
    """Sample ``g = exp(iX)`` with X Hermitian, eigenvalues ``+-(j+1)^-decay``.

    Eigenvectors are Haar distributed.  ``decay > 1/p`` mimics an element of
    U_p(H): the eigenvalues of ``g - 1`` then stay p-summable as n grows.
    """
    if n > 256:
        raise ValueError(f"n = {n} exceeds the sampler cap of 256")
    _check_exponent(p)
    rng = np.random.default_rng(seed)
    j = np.arange(1, n + 1, dtype=float)
    mags = np.zeros(n) if math.isinf(decay) else (j + 1.0) ** (-float(decay))
    signs = rng.choice([-1.0, 1.0], size=n)
    if n == 1:
        q = np.ones((1, 1), dtype=complex)
    else:
        q = unitary_group.rvs(n, random_state=rng)
    return (q * np.exp(1j * signs * mags)) @ q.conj().T

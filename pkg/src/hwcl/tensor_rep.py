"""Finite-rank realizations of pi_lambda inside tensor powers of C^n.

For a partition ``lam`` with ``m = |lam|`` boxes the Young symmetrizer
``P_lam = sum_{r in R, c in C} sgn(c) rho(c r)`` acts on ``(C^n)^{(x) m}`` and
its image carries the U(n) irreducible with highest weight ``lam``.  Mixed
sign weights are realized inside ``conj(H_{lam^-}) (x) H_{lam^+}`` as the
component of largest Casimir eigenvalue.

Tensors are stored as flat vectors in C order, so the factor at position
``j`` (0-based) is axis ``j`` of ``vec.reshape((n,) * m)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial, prod, sqrt
from typing import Sequence

import numpy as np

from .errors import CapExceededError, ContractViolation
from .oracles import weyl_dim
from .weights import FiniteWeight, Partition, conjugate, split_signs

__all__ = [
    "Caps",
    "DEFAULT_CAPS",
    "TableauData",
    "RepRealization",
    "build_tableau",
    "perm_sign",
    "perm_action",
    "permute_tensor",
    "apply_tensor_power",
    "young_projector",
    "orthonormal_image",
    "realization",
    "realize",
    "character",
    "basis_vector",
    "basis_vector_entries",
    "casimir_eigenvalue",
]

UNITARY_TOL = 1e-10
RANK_RTOL = 1e-8


@dataclass(frozen=True)
class Caps:
    max_boxes: int = 6
    max_matrix_dim: int = 4096
    max_vector_dim: int = 2**20


DEFAULT_CAPS = Caps()


@dataclass(frozen=True)
class TableauData:
    """Column-major standard filling of a Young diagram and its symmetry groups.

    Labels are 0-based internally: ``columns[c]`` lists the labels of column
    ``c`` from top to bottom.  Permutations are tuples ``sigma`` with
    ``sigma[j]`` the image of label ``j``.
    """

    shape: Partition
    columns: tuple[tuple[int, ...], ...]
    rows: tuple[tuple[int, ...], ...]
    row_group: tuple[tuple[int, ...], ...]
    col_group: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return self.shape.size

    @property
    def f_c(self) -> int:
        return prod(factorial(len(c)) for c in self.columns)

    @property
    def f_r(self) -> int:
        return prod(factorial(len(r)) for r in self.rows)

    def row_of(self, label: int) -> int:
        for i, r in enumerate(self.rows):
            if label in r:
                return i
        raise KeyError(label)


def _block_permutations(blocks: Sequence[Sequence[int]], m: int) -> tuple[tuple[int, ...], ...]:
    per_block = [list(itertools.permutations(b)) for b in blocks]
    out = []
    for choice in itertools.product(*per_block):
        sigma = list(range(m))
        for block, image in zip(blocks, choice):
            for src, dst in zip(block, image):
                sigma[src] = dst
        out.append(tuple(sigma))
    return tuple(out)


def build_tableau(lam: Partition, caps: Caps = DEFAULT_CAPS) -> TableauData:
    """Fill ``lam`` column by column with 1..|lam| and enumerate R and C.

    >>> t = build_tableau(Partition((3, 2, 2, 1)), Caps(max_boxes=8))
    >>> [[x + 1 for x in col] for col in t.columns]
    [[1, 2, 3, 4], [5, 6, 7], [8]]
    """
    if not isinstance(lam, Partition):
        lam = Partition.make(lam)
    if lam.size > caps.max_boxes:
        raise CapExceededError(
            f"|lambda| = {lam.size} exceeds the cap of {caps.max_boxes} boxes")
    conj = conjugate(lam)
    columns, label = [], 0
    for height in conj.parts:
        columns.append(tuple(range(label, label + height)))
        label += height
    rows = tuple(tuple(col[i] for col in columns if len(col) > i) for i in range(lam.length))
    m = lam.size
    return TableauData(
        shape=lam,
        columns=tuple(columns),
        rows=rows,
        row_group=_block_permutations(rows, m),
        col_group=_block_permutations(columns, m),
    )


def perm_sign(sigma: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(sigma)
    for start in range(len(sigma)):
        if seen[start]:
            continue
        length, j = 0, start
        while not seen[j]:
            seen[j] = True
            j = sigma[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _compose(sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    """``(sigma tau)(j) = sigma(tau(j))``."""
    return tuple(sigma[t] for t in tau)


def _inverse(sigma: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for j, s in enumerate(sigma):
        inv[s] = j
    return tuple(inv)


def permute_tensor(vec: np.ndarray, sigma: Sequence[int], n: int) -> np.ndarray:
    """``rho(sigma)`` applied to a flat tensor (or to each column of a 2-D array).

    ``rho(sigma)(v_1 (x) ... (x) v_m) = v_{sigma^-1(1)} (x) ... (x) v_{sigma^-1(m)}``,
    i.e. the factor at position ``j`` moves to position ``sigma(j)``.
    """
    m = len(sigma)
    extra = vec.shape[1:]
    t = vec.reshape((n,) * m + extra)
    axes = list(_inverse(sigma)) + list(range(m, m + len(extra)))
    return np.transpose(t, axes).reshape(vec.shape)


def _image_indices(sigma: tuple[int, ...], n: int) -> np.ndarray:
    m = len(sigma)
    digits = np.indices((n,) * m).reshape(m, -1)  # digits[j, b] = index at position j
    out = np.empty_like(digits)
    for j in range(m):
        out[sigma[j]] = digits[j]
    return np.ravel_multi_index(tuple(out), (n,) * m)


def _check_matrix_cap(n: int, m: int, caps: Caps) -> int:
    dim = n**m
    if dim > caps.max_matrix_dim:
        raise CapExceededError(
            f"n^m = {n}^{m} = {dim} exceeds the matrix cap {caps.max_matrix_dim}")
    return dim


def perm_action(sigma: Sequence[int], n: int, caps: Caps = DEFAULT_CAPS) -> np.ndarray:
    """Permutation matrix of ``rho(sigma)`` on ``(C^n)^{(x) m}``."""
    sigma = tuple(int(s) for s in sigma)
    dim = _check_matrix_cap(n, len(sigma), caps)
    mat = np.zeros((dim, dim), dtype=complex)
    mat[_image_indices(sigma, n), np.arange(dim)] = 1.0
    return mat


def apply_tensor_power(g: np.ndarray, x: np.ndarray, m: int) -> np.ndarray:
    """``g^{(x) m}`` applied to a flat tensor or to each column of a 2-D array."""
    n = g.shape[0]
    extra = x.shape[1:]
    t = x.reshape((n,) * m + extra)
    for axis in range(m):
        t = np.moveaxis(np.tensordot(g, t, axes=([1], [axis])), 0, axis)
    return t.reshape(x.shape)


def young_projector(lam: Partition, n: int, caps: Caps = DEFAULT_CAPS):
    """Return ``(P_lam, P_C, P_R)`` as dense matrices on ``(C^n)^{(x) |lam|}``.

    ``P_lam`` is summed term by term over ``R x C``; it is not an orthogonal
    projection.  ``P_C`` and ``P_R`` are the normalized column antisymmetrizer
    and row symmetrizer.
    """
    tab = build_tableau(lam, caps)
    m = tab.size
    dim = _check_matrix_cap(n, m, caps)
    cols = np.arange(dim)
    p_lam = np.zeros((dim, dim), dtype=complex)
    p_c = np.zeros((dim, dim), dtype=complex)
    p_r = np.zeros((dim, dim), dtype=complex)
    for c in tab.col_group:
        sgn = perm_sign(c)
        np.add.at(p_c, (_image_indices(c, n), cols), sgn)
        for r in tab.row_group:
            np.add.at(p_lam, (_image_indices(_compose(c, r), n), cols), sgn)
    for r in tab.row_group:
        np.add.at(p_r, (_image_indices(r, n), cols), 1.0)
    return p_lam, p_c / tab.f_c, p_r / tab.f_r


def orthonormal_image(mat: np.ndarray, rtol: float = RANK_RTOL) -> np.ndarray:
    """Orthonormal basis of ``range(mat)`` from its SVD.

    Columns follow descending singular values; each column is rotated so
    its largest-modulus entry is real and positive.
    """
    u, s, _ = np.linalg.svd(mat)
    if s.size == 0 or s[0] == 0:
        return np.zeros((mat.shape[0], 0), dtype=complex)
    rank = int(np.sum(s > rtol * s[0]))
    basis = u[:, :rank].astype(complex)
    return _fix_phases(basis)


def _fix_phases(basis: np.ndarray) -> np.ndarray:
    for j in range(basis.shape[1]):
        col = basis[:, j]
        k = int(np.argmax(np.abs(col) - 1e-12 * np.arange(col.size)))
        basis[:, j] = col * (abs(col[k]) / col[k])
    return basis


def casimir_eigenvalue(mu: Sequence[int]) -> int:
    """Eigenvalue of ``sum_{k,l} E_kl E_lk`` on the U(n) irreducible ``mu``."""
    n = len(mu)
    return sum(mu[k] * (mu[k] + n - 1 - 2 * k) for k in range(n))


@dataclass(frozen=True)
class RepRealization:
    """Matrix model of pi_w restricted to U(n).

    ``isometry`` has orthonormal columns spanning the representation space
    inside ``ambient``-dimensional tensor space.  For mixed weights the
    ambient space is ``conj(H_{w^-}) (x) H_{w^+}`` in the realization bases of
    the two factors, and ``plus``/``minus`` hold those factor realizations.
    """

    weight: FiniteWeight
    n: int
    isometry: np.ndarray
    plus: "RepRealization | None" = field(default=None, repr=False)
    minus: "RepRealization | None" = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return self.isometry.shape[1]

    @property
    def tensor_degree(self) -> int:
        return self.weight.size

    def ambient_action(self, g: np.ndarray) -> np.ndarray:
        """Action of ``g`` on the ambient space (before compression)."""
        if self.plus is None and self.minus is None:
            m = self.tensor_degree
            return apply_tensor_power(g, np.eye(self.n**m, dtype=complex), m)
        rp = self.plus.matrix(g) if self.plus is not None else np.ones((1, 1))
        rm = self.minus.matrix(g) if self.minus is not None else np.ones((1, 1))
        return np.kron(np.conj(rm), rp)

    def matrix(self, g: np.ndarray) -> np.ndarray:
        if self.plus is None and self.minus is None:
            m = self.tensor_degree
            if m == 0:
                return np.ones((1, 1), dtype=complex)
            v = self.isometry
            return v.conj().T @ apply_tensor_power(g, v, m)
        v = self.isometry
        return v.conj().T @ self.ambient_action(g) @ v


def _pure_realization(lam: Partition, n: int, caps: Caps) -> RepRealization:
    w = FiniteWeight.make(lam.parts)
    if lam.size == 0:
        return RepRealization(w, n, np.ones((1, 1), dtype=complex))
    if n < lam.length:
        raise ValueError(f"U({n}) has no representation with {lam.length} rows")
    p_lam, _, _ = young_projector(lam, n, caps)
    iso = orthonormal_image(p_lam)
    expected = weyl_dim(lam.padded(n))
    if iso.shape[1] != expected:
        raise ContractViolation(
            f"rank(P_lambda) = {iso.shape[1]} but weyl_dim = {expected} for {lam.parts}, n={n}")
    return RepRealization(w, n, iso)


def _derived_generators(real: RepRealization, conj_factor: bool):
    """Matrices of ``d pi(E_kl)`` on the realization space, for all k, l."""
    n = real.n
    m = real.tensor_degree
    v = real.isometry
    gens = {}
    for k in range(n):
        for l in range(n):
            e = np.zeros((n, n), dtype=complex)
            e[k, l] = 1.0
            if m == 0:
                gens[k, l] = np.zeros((1, 1), dtype=complex)
                continue
            t = v.reshape((n,) * m + (v.shape[1],))
            acc = np.zeros_like(t)
            for axis in range(m):
                acc += np.moveaxis(np.tensordot(e, t, axes=([1], [axis])), 0, axis)
            gens[k, l] = v.conj().T @ acc.reshape(v.shape)
    if conj_factor:
        # X in u(n) acts by conj(d pi(X)) = -d pi(X)^T, which is complex linear
        gens = {key: -mat.T for key, mat in gens.items()}
    return gens


@lru_cache(maxsize=128)
def _cached_realization(entries: tuple[int, ...], n: int, caps: Caps) -> RepRealization:
    w = FiniteWeight(entries)
    plus, minus = split_signs(w)
    if minus.size == 0:
        return _pure_realization(plus, n, caps)
    if plus.size == 0 and minus.size > 0:
        rm = _pure_realization(minus, n, caps)
        return RepRealization(w, n, np.eye(rm.dim, dtype=complex), plus=None, minus=rm)
    mu = w.highest_weight(n)
    rp = _pure_realization(plus, n, caps)
    rm = _pure_realization(minus, n, caps)
    gp = _derived_generators(rp, conj_factor=False)
    gm = _derived_generators(rm, conj_factor=True)
    ip, im = np.eye(rp.dim), np.eye(rm.dim)
    dim = rp.dim * rm.dim
    if dim > caps.max_matrix_dim:
        raise CapExceededError(f"tensor product dimension {dim} exceeds the matrix cap")
    d = {key: np.kron(gm[key], ip) + np.kron(im, gp[key]) for key in gp}
    cas = sum(d[k, l] @ d[l, k] for k in range(n) for l in range(n))
    cas = (cas + cas.conj().T) / 2
    evals, evecs = np.linalg.eigh(cas)
    target = casimir_eigenvalue(mu)
    sel = np.abs(evals - target) < 1e-6 * max(1.0, abs(target))
    iso = _fix_phases(evecs[:, sel].astype(complex))
    expected = weyl_dim(mu)
    if iso.shape[1] != expected:
        raise ContractViolation(
            f"Casimir eigenspace has dimension {iso.shape[1]}, expected {expected} for {mu}")
    return RepRealization(w, n, iso, plus=rp, minus=rm)


def realization(w: FiniteWeight | Sequence[int], n: int,
                caps: Caps = DEFAULT_CAPS) -> RepRealization:
    """Build (and cache) the matrix model of pi_w on U(n).

    Pure weights need ``n >= len(w^+)``; mixed weights need
    ``n >= len(w^+) + len(w^-)`` so that the U(n) highest weight
    ``(w^+, 0, ..., -reversed(w^-))`` exists.
    """
    if not isinstance(w, FiniteWeight):
        w = FiniteWeight.make(w)
    plus, minus = split_signs(w)
    if plus.size and minus.size:
        if n < plus.length + minus.length:
            raise ValueError(
                f"mixed weight {w.entries} needs n >= {plus.length + minus.length}, got {n}")
    elif n < max(plus.length, minus.length):
        raise ValueError(f"weight {w.entries} needs n >= {max(plus.length, minus.length)}")
    return _cached_realization(w.entries, n, caps)


def _check_unitary(g: np.ndarray, n: int) -> np.ndarray:
    g = np.asarray(g, dtype=complex)
    if g.shape != (n, n):
        raise ValueError(f"expected a {n}x{n} matrix, got {g.shape}")
    defect = np.linalg.norm(g.conj().T @ g - np.eye(n), 2)
    if defect > UNITARY_TOL:
        raise ContractViolation(f"matrix is not unitary (defect {defect:.3g})")
    return g


def realize(w: FiniteWeight | Sequence[int], n: int, g: np.ndarray,
            caps: Caps = DEFAULT_CAPS) -> np.ndarray:
    """Matrix of ``pi_w(g)`` for ``g`` in U(n), in the realization basis."""
    g = _check_unitary(g, n)
    return realization(w, n, caps).matrix(g)


def character(w: FiniteWeight | Sequence[int], n: int, x: Sequence[complex],
              caps: Caps = DEFAULT_CAPS) -> complex:
    """Trace of ``realize(w, n, diag(x))`` for ``x`` on the unit circle."""
    x = np.asarray(x, dtype=complex)
    return complex(np.trace(realize(w, n, np.diag(x), caps)))


def basis_vector_entries(k: int, lam: Partition,
                         caps: Caps = DEFAULT_CAPS) -> dict[tuple[int, ...], float]:
    """Nonzero entries of ``e_k^(lam)`` keyed by 0-based multi-index.

    ``e_k^(lam) = sqrt(f_C) * P_C(simple tensor)`` where the simple tensor
    carries ``e_{k+i}`` (1-based) on every box of row ``i``; column
    antisymmetrization turns each column into a wedge.  There are exactly
    ``f_C`` entries, each ``+-1/sqrt(f_C)``.
    """
    if not isinstance(lam, Partition):
        lam = Partition.make(lam)
    if k < 1:
        raise ValueError("k starts at 1")
    tab = build_tableau(lam, caps)
    m = tab.size
    index = [0] * m
    for i, row in enumerate(tab.rows):
        for label in row:
            index[label] = k + i  # 0-based slot of e_{k+i+1}
    scale = 1.0 / sqrt(tab.f_c)
    out: dict[tuple[int, ...], float] = {}
    for c in tab.col_group:
        # rho(c) moves the factor at position j to position c(j)
        moved = [0] * m
        for j in range(m):
            moved[c[j]] = index[j]
        key = tuple(moved)
        out[key] = out.get(key, 0.0) + perm_sign(c) * scale
    return out


def basis_vector(k: int, lam: Partition, N: int, caps: Caps = DEFAULT_CAPS) -> np.ndarray:
    """Dense ``e_k^(lam)`` in ``(C^N)^{(x) |lam|}``; see :func:`basis_vector_entries`."""
    if not isinstance(lam, Partition):
        lam = Partition.make(lam)
    if k < 1:
        raise ValueError("k starts at 1")
    height = lam.length
    if k + height > N:
        raise ValueError(f"need k + len(lam) <= N, got k={k}, len={height}, N={N}")
    m = lam.size
    if N**m > caps.max_vector_dim:
        raise CapExceededError(f"N^m = {N**m} exceeds the vector cap {caps.max_vector_dim}")
    out = np.zeros(N**m, dtype=complex)
    for key, val in basis_vector_entries(k, lam, caps).items():
        out[np.ravel_multi_index(key, (N,) * m)] += val
    return out

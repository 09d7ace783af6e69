"""1-cocycles: coboundaries, conditional cocycles and explicit unbounded witnesses.

Two models are provided for the witness cocycles
``beta(g) = sum_k a_k (pi(g) e_k - e_k)``:

* an exact *diagonal-phase model*: for a diagonal group element every
  ``e_k`` is an eigenvector, so ``||beta(g)||^2 = sum_k |a_k|^2 |phi_k - 1|^2``
  is a finite sum with no truncation error;
* a *matrix model* built from the explicit vectors of :mod:`hwcl.tensor_rep`,
  valid for arbitrary (non-diagonal) unitaries in a finite ambient space.

Witness vectors for a mixed weight ``lam`` are ``f_k^* (x) e_k`` with
``e_k = e_k^(lam^+)`` and ``f_k = e_{k + len(lam^+)}^(lam^-)``: the dual factor
is shifted past the rows used by ``lam^+`` so both factors see different
basis vectors.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy.special import digamma, polygamma

from .errors import CapExceededError, CompatibilityError, DegeneratePatternError
from .tensor_rep import Caps, DEFAULT_CAPS, apply_tensor_power, basis_vector
from .weights import FiniteWeight, Partition, split_signs

__all__ = [
    "DiagonalElement",
    "Coefficients",
    "CocycleWitness",
    "ConditionalData",
    "Decomposition",
    "CriterionResult",
    "GrowthReport",
    "coboundary",
    "verify_cocycle",
    "conditional_decompose",
    "coboundary_criterion",
    "diagonal_phase",
    "witness_norm",
    "witness_estimate",
    "witness_vector",
    "growth_curve",
    "conjugation_cocycle_class",
    "matrix_model_cocycle",
    "pattern_element",
    "default_ks",
    "tensor_action",
    "ConjugationResult",
]

IDENTITY_TOL = 1e-10
COCYCLE_TOL = 1e-9
TAIL_TOL = 1e-6


# ---------------------------------------------------------------------------
# group elements and coefficient sequences


@dataclass(frozen=True)
class DiagonalElement:
    """``diag(e^{i theta_1}, e^{i theta_2}, ..., 1, 1, ...)``."""

    phases: tuple[float, ...] = ()

    @classmethod
    def make(cls, phases: Iterable[float]) -> "DiagonalElement":
        return cls(tuple(float(t) for t in phases))

    @property
    def support(self) -> int:
        return len(self.phases)

    def angles(self, size: int) -> np.ndarray:
        """``theta_1..theta_size`` (zero beyond the support)."""
        out = np.zeros(size)
        k = min(size, self.support)
        out[:k] = self.phases[:k]
        return out

    def u(self, j: int) -> complex:
        """1-based diagonal entry."""
        return complex(np.exp(1j * self.phases[j - 1])) if 1 <= j <= self.support else 1.0 + 0j

    def matrix(self, n: int) -> np.ndarray:
        if n < self.support:
            raise ValueError(f"support {self.support} does not fit in U({n})")
        return np.diag(np.exp(1j * self.angles(n)))


def pattern_element(theta: float, pattern: str, k: int) -> DiagonalElement:
    """Phases on the first ``k`` coordinates: ``theta`` or ``(-1)^j theta``."""
    j = np.arange(1, k + 1)
    if pattern == "constant":
        return DiagonalElement.make(np.full(k, theta))
    if pattern == "alternating":
        return DiagonalElement.make(theta * (-1.0) ** j)
    raise ValueError(f"unknown pattern {pattern!r}; expected constant or alternating")


@dataclass(frozen=True)
class Coefficients:
    """Coefficient rule ``k -> a_k`` (k >= 1).

    ``kind`` is one of ``inv-sqrt`` (k^-1/2), ``inv`` (1/k), ``alternating``
    ((-1)^k) or ``custom``; custom lists are extended by zeros.
    """

    kind: str = "inv-sqrt"
    values: tuple[complex, ...] = ()

    KINDS = ("inv-sqrt", "inv", "alternating", "custom")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown coefficient rule {self.kind!r}; expected one of {self.KINDS}")

    @classmethod
    def custom(cls, values: Iterable[complex]) -> "Coefficients":
        return cls("custom", tuple(complex(v) for v in values))

    def __call__(self, size: int) -> np.ndarray:
        """``a_1 .. a_size``."""
        k = np.arange(1, size + 1, dtype=float)
        if self.kind == "inv-sqrt":
            return (1.0 / np.sqrt(k)).astype(complex)
        if self.kind == "inv":
            return (1.0 / k).astype(complex)
        if self.kind == "alternating":
            return ((-1.0) ** k).astype(complex)
        out = np.zeros(size, dtype=complex)
        m = min(size, len(self.values))
        out[:m] = self.values[:m]
        return out

    def abs2_partial(self, m: int, parity: int | None = None) -> float | None:
        """Closed form of ``sum_{k <= m} |a_k|^2``, optionally over one parity.

        ``parity`` 0 sums even k, 1 odd k.  Returns None for custom rules.
        """
        if m <= 0:
            return 0.0
        if self.kind == "custom":
            return None

        def harmonic(x):
            return float(digamma(x + 1) + np.euler_gamma) if x > 0 else 0.0

        def zeta2(x):
            return float(math.pi**2 / 6 - polygamma(1, x + 1)) if x > 0 else 0.0

        if self.kind == "alternating":
            if parity is None:
                return float(m)
            return float(m // 2 if parity == 0 else (m + 1) // 2)
        base = harmonic if self.kind == "inv-sqrt" else zeta2
        scale = 0.5 if self.kind == "inv-sqrt" else 0.25
        if parity is None:
            return base(m)
        even = scale * base(m // 2)
        return even if parity == 0 else base(m) - even


@dataclass(frozen=True)
class CocycleWitness:
    """``beta(g) = sum_k a_k (pi_lam(g) w_k - w_k)`` over the witness vectors."""

    weight: FiniteWeight
    coefficients: Coefficients = field(default_factory=Coefficients)

    def __post_init__(self):
        if not isinstance(self.weight, FiniteWeight):
            object.__setattr__(self, "weight", FiniteWeight.make(self.weight))
        if self.weight.size < 1:
            raise ValueError("witness weight needs |lambda| >= 1")

    @property
    def plus(self) -> Partition:
        return split_signs(self.weight)[0]

    @property
    def minus(self) -> Partition:
        return split_signs(self.weight)[1]

    def slots(self) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
        """``(offset, multiplicity)`` of the coordinate indices seen by ``w_k``.

        Coordinate ``k + offset`` enters ``w_k`` with that multiplicity,
        as a power of ``u`` for the plus part and of ``conj(u)`` for the minus
        part.
        """
        plus, minus = self.plus, self.minus
        pos = [(i + 1, p) for i, p in enumerate(plus.parts)]
        neg = [(plus.length + i + 1, q) for i, q in enumerate(minus.parts)]
        return pos, neg

    @property
    def span(self) -> int:
        return self.plus.length + self.minus.length


# ---------------------------------------------------------------------------
# coboundaries and the cocycle identity


def coboundary(v: np.ndarray, pi: Callable[[np.ndarray], np.ndarray], g) -> np.ndarray:
    """``pi(g) v - v``."""
    v = np.asarray(v, dtype=complex)
    mat = pi(g)
    if mat.shape[1] != v.shape[0]:
        raise ValueError(f"representation acts on dim {mat.shape[1]}, vector has {v.shape[0]}")
    return mat @ v - v


def verify_cocycle(beta: Callable, pi: Callable, samples: Iterable[tuple]) -> float:
    """``max ||beta(gh) - beta(g) - pi(g) beta(h)||`` over sample pairs.

    Group elements must support ``@`` (matrices) or provide ``compose``.
    """
    worst = 0.0
    for g, h in samples:
        gh = g.compose(h) if hasattr(g, "compose") else g @ h
        defect = beta(gh) - beta(g) - pi(g) @ beta(h)
        worst = max(worst, float(np.linalg.norm(defect)))
    return worst


# ---------------------------------------------------------------------------
# conditional cocycles


@dataclass
class ConditionalData:
    """Vectors ``v_1..v_N`` with declared fixed spaces ``H_1 >= H_2 >= ...``.

    ``fixed_spaces[n-1]`` is a matrix whose orthonormal columns span
    ``H_n``; ``H_0`` is the whole space.
    """

    v: list[np.ndarray]
    fixed_spaces: list[np.ndarray]

    def __post_init__(self):
        if len(self.v) != len(self.fixed_spaces):
            raise ValueError("need one fixed space per vector")


@dataclass
class Decomposition:
    w: list[np.ndarray]
    max_overlap: float


def _proj_defect(basis: np.ndarray, x: np.ndarray) -> float:
    """``||x - P x||`` for P the orthogonal projection onto span(basis)."""
    if basis.shape[1] == 0:
        return float(np.linalg.norm(x))
    return float(np.linalg.norm(x - basis @ (basis.conj().T @ x)))


def conditional_decompose(data: ConditionalData, tol: float = IDENTITY_TOL) -> Decomposition:
    """Split ``v_n = w_1 + ... + w_n`` with ``w_k = v_k - v_{k-1}``.

    Raises :class:`CompatibilityError` if some ``v_n`` is not orthogonal to
    ``H_n`` or ``v_n - v_m`` leaves ``H_m`` for ``m < n``.
    """
    vs = [np.asarray(x, dtype=complex) for x in data.v]
    hs = [np.asarray(h, dtype=complex) for h in data.fixed_spaces]
    for n, (vn, hn) in enumerate(zip(vs, hs), start=1):
        if hn.shape[1] and float(np.linalg.norm(hn.conj().T @ vn)) > tol:
            raise CompatibilityError(f"v_{n} is not orthogonal to H_{n}", n, n)
    for n in range(1, len(vs) + 1):
        for m in range(1, n):
            if _proj_defect(hs[m - 1], vs[n - 1] - vs[m - 1]) > tol:
                raise CompatibilityError(f"v_{n} - v_{m} is not in H_{m}", m, n)
    ws, prev = [], np.zeros_like(vs[0]) if vs else None
    for vn in vs:
        ws.append(vn - prev)
        prev = vn
    overlap = 0.0
    for i in range(len(ws)):
        for j in range(i + 1, len(ws)):
            overlap = max(overlap, abs(np.vdot(ws[i], ws[j])))
    if overlap > tol:
        raise CompatibilityError(f"w_k are not mutually orthogonal (overlap {overlap:.3g})")
    return Decomposition(ws, overlap)


@dataclass
class CriterionResult:
    """Outcome of the square-summability test on ``||w_k||``.

    ``status`` is ``square-summable`` (a coboundary), ``divergent`` or
    ``inconclusive``; ``partial_sums[m-1] = sum_{k <= m} ||w_k||^2``.
    """

    status: str
    partial_sums: np.ndarray
    tail: float
    previous_tail: float

    @property
    def is_coboundary(self) -> bool | None:
        if self.status == "inconclusive":
            return None
        return self.status == "square-summable"

    @property
    def limit(self) -> float:
        return float(self.partial_sums[-1]) if self.partial_sums.size else 0.0


def coboundary_criterion(w, N: int = 10**6, tol: float = TAIL_TOL,
                         bound: float = 5.0, ratio: float = 0.9) -> CriterionResult:
    """Decide square-summability of ``(||w_k||)`` from its first ``N`` terms.

    ``w`` is a sequence of vectors, a sequence of norms, or a callable
    mapping a 1-based index array to norms.  Square-summable if the tail
    ``S_N - S_{N/2}`` is below ``tol``; divergent if ``S_N > bound`` and the
    tail has not shrunk relative to the previous halving
    (``tail >= ratio * (S_{N/2} - S_{N/4})``); inconclusive otherwise.
    """
    if callable(w):
        norms = np.abs(np.asarray(w(np.arange(1, N + 1, dtype=float))))
    elif isinstance(w, np.ndarray) and w.ndim == 1:
        norms = np.abs(w)
    else:
        norms = np.array([np.linalg.norm(x) for x in w], dtype=float)
    norms = norms.astype(float)
    partial = np.cumsum(norms**2)
    if partial.size == 0:
        return CriterionResult("square-summable", partial, 0.0, 0.0)
    n = partial.size

    def s(m):
        return float(partial[m - 1]) if m >= 1 else 0.0

    tail = s(n) - s(n // 2)
    prev = s(n // 2) - s(n // 4)
    if tail < tol:
        status = "square-summable"
    elif s(n) > bound and tail >= ratio * prev:
        status = "divergent"
    else:
        status = "inconclusive"
    return CriterionResult(status, partial, tail, prev)


# ---------------------------------------------------------------------------
# diagonal-phase model


def _angle_sums(witness: CocycleWitness, theta: np.ndarray, ks: np.ndarray) -> np.ndarray:
    """Total phase angle of ``w_k`` under ``diag(e^{i theta})`` for each k."""
    pos, neg = witness.slots()
    total = np.zeros(ks.shape, dtype=float)
    for off, mult in pos:
        idx = ks + off
        total += mult * np.where(idx <= theta.size, theta[np.minimum(idx, theta.size) - 1], 0.0)
    for off, mult in neg:
        idx = ks + off
        total -= mult * np.where(idx <= theta.size, theta[np.minimum(idx, theta.size) - 1], 0.0)
    return total


def diagonal_phase(lam: FiniteWeight | Sequence[int], g: DiagonalElement, k: int) -> complex:
    """Eigenvalue of the diagonal element ``g`` on the witness vector ``w_k``.

    ``prod_i u_{k+i}^{lam+_i} * prod_i conj(u_{k+l+i})^{lam-_i}`` with
    ``l = len(lam^+)``.
    """
    witness = CocycleWitness(lam)
    theta = np.asarray(g.phases, dtype=float)
    if theta.size == 0:
        return 1.0 + 0j
    alpha = _angle_sums(witness, theta, np.array([k]))[0]
    return complex(np.exp(1j * alpha))


def _term_sq(witness: CocycleWitness, g: DiagonalElement, horizon: int | None):
    # w_k is fixed once k >= support, so the sum is finite
    upto = max(g.support - 1, 0) if horizon is None else horizon
    if upto == 0:
        return np.zeros(0)
    ks = np.arange(1, upto + 1)
    alpha = _angle_sums(witness, np.asarray(g.phases, dtype=float), ks)
    a = witness.coefficients(upto)
    return np.abs(a) ** 2 * 4.0 * np.sin(alpha / 2.0) ** 2


def witness_norm(witness: CocycleWitness, g: DiagonalElement, horizon: int | None = None) -> float:
    """Exact ``||beta(g)||`` in the diagonal model (optionally only k <= horizon)."""
    return math.sqrt(float(np.sum(_term_sq(witness, g, horizon))))


def witness_estimate(witness: CocycleWitness, g: DiagonalElement) -> float:
    """Upper bound ``|lam| * sum_slots sum_k |a_k|^2 |u_slot - 1|^2`` for ``||beta(g)||^2``."""
    upto = max(g.support - 1, 0)
    if upto == 0:
        return 0.0
    ks = np.arange(1, upto + 1)
    theta = np.asarray(g.phases, dtype=float)
    a2 = np.abs(witness.coefficients(upto)) ** 2
    pos, neg = witness.slots()
    total = 0.0
    for off, mult in pos + neg:
        idx = ks + off
        ang = np.where(idx <= theta.size, theta[np.minimum(idx, theta.size) - 1], 0.0)
        total += mult * float(np.sum(a2 * 4.0 * np.sin(ang / 2.0) ** 2))
    return witness.weight.size * total


def witness_vector(lam: FiniteWeight | Sequence[int], k: int, N: int,
                   caps: Caps = DEFAULT_CAPS) -> np.ndarray:
    """Explicit ``w_k`` in ``conj((C^N)^{(x)|lam^-|}) (x) (C^N)^{(x)|lam^+|}``."""
    witness = CocycleWitness(lam)
    plus, minus = witness.plus, witness.minus
    e = basis_vector(k, plus, N, caps) if plus.size else np.ones(1, dtype=complex)
    if not minus.size:
        return e
    f = basis_vector(k + plus.length, minus, N, caps)
    return np.kron(np.conj(f), e)


def tensor_action(lam: FiniteWeight | Sequence[int], g: np.ndarray, vec: np.ndarray) -> np.ndarray:
    """Ambient action of ``g`` on a vector laid out as in :func:`witness_vector`."""
    witness = CocycleWitness(lam)
    mp, mm = witness.plus.size, witness.minus.size
    n = g.shape[0]
    if not mm:
        return apply_tensor_power(g, vec, mp)
    t = vec.reshape(n**mm, n**mp)
    t = apply_tensor_power(np.conj(g), t, mm) if mm else t
    t = apply_tensor_power(g, t.T, mp).T if mp else t
    return t.reshape(-1)


# ---------------------------------------------------------------------------
# growth along families of diagonal elements


@dataclass
class GrowthReport:
    ks: list[int]
    norms: list[float]
    reference: list[float | None]
    verdict: str
    slope: float
    threshold: float

    @property
    def norms_sq(self) -> list[float]:
        return [x * x for x in self.norms]

    def rows(self):
        for k, nrm, ref in zip(self.ks, self.norms, self.reference):
            yield {"k": k, "norm": nrm, "norm_sq": nrm * nrm, "reference": ref}

    def to_dict(self) -> dict:
        return {
            "ks": self.ks,
            "norms": self.norms,
            "norms_sq": self.norms_sq,
            "reference": self.reference,
            "verdict": self.verdict,
            "slope": self.slope,
            "threshold": self.threshold,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["k", "norm", "norm_sq", "reference"],
                                lineterminator="\n")
        writer.writeheader()
        for row in self.rows():
            writer.writerow({key: ("" if val is None else repr(val)) for key, val in row.items()})
        return buf.getvalue()


def _bulk_term(witness: CocycleWitness, theta: float, pattern: str, parity: int) -> float:
    """``|phi - 1|^2`` for a witness vector lying entirely inside the pattern support."""
    pos, neg = witness.slots()
    k = 2 + parity  # any k with the given parity works in the bulk
    alpha = 0.0
    for off, mult in pos:
        alpha += mult * (theta if pattern == "constant" else theta * (-1.0) ** (k + off))
    for off, mult in neg:
        alpha -= mult * (theta if pattern == "constant" else theta * (-1.0) ** (k + off))
    return 4.0 * math.sin(alpha / 2.0) ** 2


def _reference_sq(witness: CocycleWitness, theta: float, pattern: str, k: int) -> float | None:
    """``||beta(g_k)||^2`` from closed-form coefficient sums plus boundary terms."""
    span = witness.span
    bulk_end = k - span  # w_j lies inside the support iff j + span <= k
    total = 0.0
    for parity in (0, 1):
        part = witness.coefficients.abs2_partial(bulk_end, parity)
        if part is None:
            return None
        total += _bulk_term(witness, theta, pattern, parity) * part
    # boundary: k - span < j < k straddle the edge of the support
    g = pattern_element(theta, pattern, k)
    lo = max(bulk_end + 1, 1)
    if lo <= k - 1:
        js = np.arange(lo, k)
        alpha = _angle_sums(witness, np.asarray(g.phases), js)
        a = witness.coefficients(k - 1)[js - 1]
        total += float(np.sum(np.abs(a) ** 2 * 4.0 * np.sin(alpha / 2.0) ** 2))
    return total


def default_ks(kmax: int, points: int = 25) -> list[int]:
    kmin = min(10, kmax)
    grid = np.unique(np.round(np.geomspace(kmin, kmax, points)).astype(int))
    return [int(k) for k in grid]


def growth_curve(witness: CocycleWitness, theta: float, pattern: str,
                 ks: Sequence[int], margin: float = 0.5) -> GrowthReport:
    """Sample ``||beta(g_k)||`` along ``g_k`` = pattern phases on k coordinates.

    The verdict fits the slope of ``||beta||^2`` against ``ln k`` over the
    last decade of ``ks``.  It is ``divergent-trend`` when the slope exceeds
    ``margin`` times the slope produced by ``a_k = k^{-1/2}`` (the borderline
    non-square-summable sequence) with the same phases, and ``bounded-trend``
    otherwise.
    """
    ks = [int(k) for k in ks]
    if not ks or any(b <= a for a, b in zip(ks, ks[1:])):
        raise ValueError("ks must be a non-empty increasing list")
    bulk = 0.5 * (_bulk_term(witness, theta, pattern, 0) + _bulk_term(witness, theta, pattern, 1))
    if bulk < 1e-12:
        hint = (" (balanced weight: constant phases cancel; try --pattern alternating)"
                if witness.plus.size == witness.minus.size else "")
        raise DegeneratePatternError(
            f"pattern {pattern!r} with theta={theta} acts trivially on every witness vector"
            + hint)
    norms, refs = [], []
    for k in ks:
        g = pattern_element(theta, pattern, k)
        norms.append(witness_norm(witness, g))
        refs.append(_reference_sq(witness, theta, pattern, k))
    sq = np.array(norms) ** 2
    ks_arr = np.array(ks, dtype=float)
    window = ks_arr >= ks_arr[-1] / 10.0
    if window.sum() >= 2:
        slope = float(np.polyfit(np.log(ks_arr[window]), sq[window], 1)[0])
    else:
        slope = 0.0
    threshold = margin * bulk
    verdict = "divergent-trend" if slope > threshold else "bounded-trend"
    return GrowthReport(ks, [float(x) for x in norms], refs, verdict, slope, threshold)


# ---------------------------------------------------------------------------
# conjugation cocycles A -> pi(g) A pi(g)^-1 - A for diagonal A


@dataclass
class ConjugationResult:
    coboundary: bool | None
    constant: complex | None
    criterion: CriterionResult


def conjugation_cocycle_class(a: Coefficients | Callable, N: int = 10**6,
                              same_rep: bool = False, tol: float = TAIL_TOL) -> ConjugationResult:
    """Is ``g -> pi_lam(g) A pi_mu(g)^-1 - A`` a coboundary, ``A = diag(a_n)``?

    Distinct representations: iff ``a`` is square summable.  Same
    representation: iff ``a - c`` is square summable for a constant ``c``,
    estimated as the mean of ``a_n`` over ``N/2 < n <= N``.
    """
    values = np.asarray(a(N) if isinstance(a, Coefficients) else a(np.arange(1, N + 1)),
                        dtype=complex)
    const = None
    if same_rep:
        const = complex(np.mean(values[N // 2:]))
        values = values - const
    crit = coboundary_criterion(np.abs(values), tol=tol)
    return ConjugationResult(crit.is_coboundary, const, crit)


# ---------------------------------------------------------------------------
# matrix model


def matrix_model_cocycle(witness: CocycleWitness, n: int, N: int, g: np.ndarray,
                         caps: Caps = DEFAULT_CAPS) -> np.ndarray:
    """``sum_{k <= N} a_k (g^{(x)m} e_k - e_k)`` in ``(C^n)^{(x) m}``.

    ``g`` may be smaller than ``n x n``; it is then embedded as
    ``diag(g, 1, ..., 1)`` (U(r) inside U(n)).  Only positive weights.
    """
    if witness.minus.size:
        raise ValueError("matrix model needs a weight without negative entries")
    lam = witness.plus
    if N + lam.length > n:
        raise ValueError(f"need N + len(lam) <= n, got N={N}, len={lam.length}, n={n}")
    g = np.asarray(g, dtype=complex)
    r = g.shape[0]
    if r > n:
        raise ValueError(f"group element of size {r} does not fit in U({n})")
    if r < n:
        big = np.eye(n, dtype=complex)
        big[:r, :r] = g
        g = big
    m = lam.size
    if n**m > caps.max_vector_dim:
        raise CapExceededError(f"n^m = {n**m} exceeds the vector cap {caps.max_vector_dim}")
    a = witness.coefficients(N)
    out = np.zeros(n**m, dtype=complex)
    for k in range(1, N + 1):
        e = basis_vector(k, lam, n, caps)
        out += a[k - 1] * (apply_tensor_power(g, e, m) - e)
    return out

import itertools
import math

import numpy as np
import pytest

from conftest import haar
from hwcl.branching import branch
from hwcl.errors import CapExceededError, ContractViolation
from hwcl.oracles import random_circle_point, schur_eval, weyl_dim
from hwcl.tensor_rep import (
    _cached_realization,
    Caps,
    apply_tensor_power,
    basis_vector,
    basis_vector_entries,
    build_tableau,
    character,
    orthonormal_image,
    perm_action,
    perm_sign,
    permute_tensor,
    realization,
    realize,
    young_projector,
)
from hwcl.weights import FiniteWeight, Partition


def partitions_up_to(size):
    out = []

    def rec(remaining, cap, acc):
        if acc:
            out.append(tuple(acc))
        for p in range(min(remaining, cap), 0, -1):
            rec(remaining - p, p, acc + [p])

    rec(size, size, [])
    return out


def weights_up_to(size, n):
    """Finite weights (plus part then minus part) with |w| <= size fitting U(n)."""
    out = []
    for plus in [()] + partitions_up_to(size):
        for minus in [()] + partitions_up_to(size - sum(plus)):
            if len(plus) + len(minus) <= n and (plus or minus):
                out.append(plus + tuple(-x for x in minus))
    return out


def test_tableau_3221():
    with pytest.raises(CapExceededError):
        build_tableau(Partition((3, 2, 2, 1)))
    t = build_tableau(Partition((3, 2, 2, 1)), Caps(max_boxes=8))
    assert [[x + 1 for x in c] for c in t.columns] == [[1, 2, 3, 4], [5, 6, 7], [8]]
    assert (t.f_c, t.f_r) == (144, 24)
    assert math.isqrt(t.f_c) == 12
    assert len(t.col_group) == t.f_c and len(t.row_group) == t.f_r


@pytest.mark.parametrize("parts, fc, fr", [((1,), 1, 1), ((2,), 1, 2), ((1, 1), 2, 1)])
def test_tableau_small(parts, fc, fr):
    t = build_tableau(Partition(parts))
    assert (t.f_c, t.f_r) == (fc, fr)
    assert sorted(itertools.chain(*t.columns)) == list(range(sum(parts)))


def test_tableau_cap():
    with pytest.raises(CapExceededError):
        build_tableau(Partition((4, 3)))
    assert build_tableau(Partition((4, 3)), Caps(max_boxes=7)).f_r == 144


def test_perm_action_examples():
    assert np.allclose(perm_action((0, 1, 2), 2), np.eye(8))
    swap = perm_action((1, 0), 2)
    e = np.eye(2)
    assert np.allclose(swap @ np.kron(e[0], e[1]), np.kron(e[1], e[0]))
    assert np.allclose(swap @ np.kron(e[1], e[1]), np.kron(e[1], e[1]))


def test_perm_action_moves_factor_j_to_sigma_j(rng):
    vs = [rng.standard_normal(3) for _ in range(3)]
    sigma = (1, 2, 0)
    out = perm_action(sigma, 3) @ np.kron(np.kron(vs[0], vs[1]), vs[2])
    # factor 0 -> slot 1, 1 -> slot 2, 2 -> slot 0
    assert np.allclose(out, np.kron(np.kron(vs[2], vs[0]), vs[1]))


def test_perm_action_homomorphism(rng):
    perms = list(itertools.permutations(range(3)))
    for _ in range(10):
        s, t = (perms[i] for i in rng.integers(len(perms), size=2))
        st = tuple(s[x] for x in t)
        assert np.allclose(perm_action(s, 2) @ perm_action(t, 2), perm_action(st, 2))
        p = perm_action(s, 2)
        assert np.allclose(p.conj().T @ p, np.eye(8))


def test_permute_tensor_matches_matrix(rng):
    v = rng.standard_normal(27) + 1j * rng.standard_normal(27)
    for s in itertools.permutations(range(3)):
        assert np.allclose(permute_tensor(v, s, 3), perm_action(s, 3) @ v)


def test_perm_sign():
    assert perm_sign((0, 1, 2)) == 1
    assert perm_sign((1, 0, 2)) == -1
    assert perm_sign((1, 2, 0)) == 1


@pytest.mark.parametrize("parts, n, rank", [((1, 1), 2, 1), ((2,), 2, 3), ((2, 1), 2, 2),
                                            ((2, 1), 3, 8)])
def test_projector_rank_examples(parts, n, rank):
    p, _, _ = young_projector(Partition(parts), n)
    assert orthonormal_image(p).shape[1] == rank


def test_projector_structure(rng):
    for parts in partitions_up_to(4):
        lam = Partition(parts)
        for n in range(max(lam.length, 1), 4):
            p, pc, pr = young_projector(lam, n)
            t = build_tableau(lam)
            dim = p.shape[0]
            for q in (pc, pr):
                assert np.linalg.norm(q - q.conj().T, 2) <= 1e-10
                assert np.linalg.norm(q @ q - q, 2) <= 1e-10
            assert np.linalg.norm(p - t.f_c * t.f_r * pc @ pr, 2) <= 1e-10
            g = haar(n, rng)
            gm = apply_tensor_power(g, np.eye(dim, dtype=complex), lam.size)
            assert np.linalg.norm(gm @ p - p @ gm, 2) <= 1e-9
            s = np.linalg.svd(p, compute_uv=False)
            assert int(np.sum(s > 1e-8 * s[0])) == weyl_dim(lam.padded(n))


def test_young_projector_not_orthogonal():
    p, _, _ = young_projector(Partition((2, 1)), 2)
    assert np.linalg.norm(p - p.conj().T) > 1e-3


def test_projector_cap():
    with pytest.raises(CapExceededError):
        young_projector(Partition((3, 2)), 6)


def test_realize_examples(rng):
    g = haar(3, rng)
    assert np.allclose(realize((1,), 3, g), g)
    assert np.allclose(realize((-1,), 3, g), np.conj(g))
    g2 = haar(2, rng)
    r = realize((1, 1), 2, g2)
    assert r.shape == (1, 1) and np.isclose(r[0, 0], np.linalg.det(g2))


def test_realize_rejects_nonunitary():
    with pytest.raises(ContractViolation):
        realize((1,), 2, np.array([[2, 0], [0, 1]]))
    with pytest.raises(ValueError):
        realize((1,), 2, np.eye(3))
    with pytest.raises(ValueError):
        realize((1, 1, 1), 2, np.eye(2))
    with pytest.raises(ValueError):
        realize((1, -1), 1, np.eye(1))


def test_realize_zero_weight(rng):
    assert np.allclose(realize((), 2, haar(2, rng)), np.ones((1, 1)))


def test_character_examples(rng):
    a, b = random_circle_point(2, rng)
    assert np.isclose(character((1, 1), 2, (a, b)), a * b)
    assert np.isclose(character((2,), 2, (a, b)), a * a + a * b + b * b)
    assert np.isclose(character((1, -1), 2, (a, b)), abs(a + b) ** 2 - 1)


GRID = [(w, n) for n in (1, 2, 3) for w in weights_up_to(4, n)]


@pytest.mark.parametrize("w, n", GRID, ids=[f"{w}-n{n}" for w, n in GRID])
def test_realization_contracts(w, n):
    rng = np.random.default_rng(abs(hash((w, n))) % 2**32)
    fw = FiniteWeight.make(w)
    real = realization(fw, n)
    hw = fw.highest_weight(n)
    assert real.dim == weyl_dim(hw)
    iso = real.isometry
    assert np.linalg.norm(iso.conj().T @ iso - np.eye(real.dim), 2) <= 1e-10
    for _ in range(10):
        g, h = haar(n, rng), haar(n, rng)
        rg, rh = realize(fw, n, g), realize(fw, n, h)
        assert np.linalg.norm(rg @ rh - realize(fw, n, g @ h), 2) <= 1e-9
        assert np.linalg.norm(rg.conj().T @ rg - np.eye(real.dim), 2) <= 1e-9
        x = random_circle_point(n, rng)
        ref = schur_eval(hw, x)
        assert abs(character(fw, n, x) - ref) <= 1e-8 * max(1.0, abs(ref))


def test_realization_is_deterministic():
    a = realization((2, 1), 3).isometry
    _cached_realization.cache_clear()
    b = realization((2, 1), 3).isometry
    assert np.array_equal(a, b)


def test_branching_realized(rng):
    lam = (2, 1)
    for _ in range(5):
        x = random_circle_point(2, rng)
        lhs = character(lam, 3, np.concatenate([x, [1.0]]))
        rhs = sum(schur_eval(eta, x) for eta in branch((2, 1, 0)))
        assert abs(lhs - rhs) <= 1e-9 * abs(lhs) + 1e-12
        # block-diagonal U(2) + 1: the restricted trace is the same sum
        g = np.eye(3, dtype=complex)
        g[:2, :2] = haar(2, rng)
        ev = np.linalg.eigvals(g[:2, :2])
        tr = np.trace(realize(lam, 3, g))
        assert abs(tr - sum(schur_eval(eta, ev) for eta in branch((2, 1, 0)))) <= 1e-9


@pytest.mark.parametrize("k, parts, N, expected", [
    (3, (1,), 5, [((3,), 1.0)]),
    (1, (1, 1), 4, [((1, 2), 1 / math.sqrt(2)), ((2, 1), -1 / math.sqrt(2))]),
])
def test_basis_vector_examples(k, parts, N, expected):
    v = basis_vector(k, Partition(parts), N)
    ref = np.zeros_like(v)
    for idx, val in expected:
        ref[np.ravel_multi_index(idx, (N,) * len(idx))] = val
    assert np.allclose(v, ref)


def test_basis_vector_range():
    with pytest.raises(ValueError):
        basis_vector(4, Partition((1, 1)), 5)
    with pytest.raises(ValueError):
        basis_vector(0, Partition((1,)), 5)


def _apply_symmetrizer(lam, v, N):
    """``P_lam v`` by summing permuted copies (no dense matrices)."""
    t = build_tableau(lam)
    out = np.zeros_like(v)
    for c in t.col_group:
        for r in t.row_group:
            cr = tuple(c[x] for x in r)
            out += perm_sign(c) * permute_tensor(v, cr, N)
    return out


def _hook_product(lam):
    conj = [sum(1 for p in lam.parts if p > j) for j in range(lam.parts[0])]
    return math.prod(lam.parts[i] - j + conj[j] - i - 1
                     for i in range(lam.length) for j in range(lam.parts[i]))


@pytest.mark.parametrize("parts", partitions_up_to(4))
def test_basis_family(parts):
    lam = Partition(parts)
    N = 5 + lam.length
    vs = np.array([basis_vector(k, lam, N) for k in range(1, 6)]).T
    assert np.linalg.norm(vs.conj().T @ vs - np.eye(5)) <= 1e-12
    h = _hook_product(lam)  # P_lam^2 = h P_lam, so im(P_lam) is the h-eigenspace
    t = build_tableau(lam)
    for j in range(5):
        v = vs[:, j]
        assert np.linalg.norm(_apply_symmetrizer(lam, v, N) - h * v) <= 1e-10
        pc_v = sum(perm_sign(c) * permute_tensor(v, c, N) for c in t.col_group) / t.f_c
        assert np.linalg.norm(pc_v - v) <= 1e-12


def test_symmetrizer_eigenvalue_matches_dense():
    lam = Partition((2, 1))
    p, _, _ = young_projector(lam, 3)
    assert np.linalg.norm(p @ p - _hook_product(lam) * p) <= 1e-10


def test_basis_vector_generator_is_row_symmetric():
    # the simple tensor behind e_k has equal vectors along every row
    lam = Partition((2, 1))
    t = build_tableau(lam)
    _, _, pr = young_projector(lam, 4)
    simple = np.zeros(64)
    idx = [0] * 3
    for i, row in enumerate(t.rows):
        for label in row:
            idx[label] = 1 + i
    simple[np.ravel_multi_index(tuple(idx), (4,) * 3)] = 1
    assert np.allclose(pr @ simple, simple)


def test_orthogonal_pair_21():
    lam = Partition((2, 1))
    assert abs(np.vdot(basis_vector(1, lam, 6), basis_vector(2, lam, 6))) <= 1e-14


@pytest.mark.parametrize("parts", partitions_up_to(4))
def test_sparse_entries_match_dense(parts):
    lam = Partition(parts)
    N = 3 + lam.length
    dense = basis_vector(3, lam, N)
    entries = basis_vector_entries(3, lam)
    assert len(entries) == build_tableau(lam).f_c
    ref = np.zeros_like(dense)
    for key, val in entries.items():
        ref[np.ravel_multi_index(key, (N,) * lam.size)] = val
    assert np.array_equal(dense, ref)

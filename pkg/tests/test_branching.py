import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import sorted_tuples
from hwcl.branching import (
    branch,
    branch_count,
    fixed_space_dim,
    has_fixed_vector,
    interlaces,
    property_p,
)
from hwcl.oracles import weyl_dim


@pytest.mark.parametrize("eta, lam, expected", [
    ((2, 1), (2, 1, 0), True),
    ((0,), (1, 1), False),
    ((1, 0), (1, 0, -1), True),
    ((1, 2), (0, 2, 1), True),
    ((3,), (2, 0), False),
])
def test_interlaces_examples(eta, lam, expected):
    assert interlaces(eta, lam) is expected


def test_interlaces_length_mismatch():
    with pytest.raises(ValueError):
        interlaces((1, 0), (1, 0))


@pytest.mark.parametrize("lam, expected", [
    ((1, 0), [(1,), (0,)]),
    ((1, 1), [(1,)]),
    ((2, 0), [(2,), (1,), (0,)]),
])
def test_branch_examples(lam, expected):
    assert branch(lam) == expected


@pytest.mark.parametrize("lam, count", [((1, 0), 2), ((2, 0), 3), ((3, 2, 2, 1), 4)])
def test_branch_count_examples(lam, count):
    assert branch_count(lam) == count
    assert len(branch(lam)) == count


@pytest.mark.parametrize("lam, n, dim", [((1, 0, -1), 1, 4), ((1, 1), 1, 0), ((0, 0, 0), 2, 1)])
def test_fixed_space_dim_examples(lam, n, dim):
    assert fixed_space_dim(lam, n) == dim


@pytest.mark.parametrize("lam, n, expected", [((1, 0, -1), 1, True), ((1, 1), 1, False),
                                              ((0, 0), 2, True)])
def test_has_fixed_vector_examples(lam, n, expected):
    assert has_fixed_vector(lam, n) is expected


def test_fixed_space_dim_preconditions():
    with pytest.raises(ValueError):
        fixed_space_dim((1, 0), 3)
    with pytest.raises(ValueError):
        fixed_space_dim((1, 0), 0)


def test_branch_count_overflow():
    with pytest.raises(OverflowError):
        branch_count((10**7, 0, -10**7, -2 * 10**7))


def test_branch_against_brute_force():
    for lam in sorted_tuples(-3, 3, 6):
        etas = branch(lam)
        assert len(set(etas)) == len(etas)
        assert branch_count(lam) == len(etas)
        assert etas == sorted(etas, reverse=True)
        if len(lam) <= 4:
            candidates = [eta for eta in itertools.product(range(3, -4, -1), repeat=len(lam) - 1)
                          if list(eta) == sorted(eta, reverse=True) and interlaces(eta, lam)]
            assert sorted(candidates, reverse=True) == etas


def test_dimension_additivity():
    for lam in sorted_tuples(-2, 2, 5, min_len=2):
        assert sum(weyl_dim(eta) for eta in branch(lam)) == weyl_dim(lam)


def test_criterion_equivalence():
    for lam in sorted_tuples(-2, 2, 5):
        for n in range(1, len(lam) + 1):
            assert (fixed_space_dim(lam, n) > 0) == has_fixed_vector(lam, n), (lam, n)


def test_property_interlacing_inheritable():
    for lam in sorted_tuples(-2, 2, 5, min_len=2):
        for n in range(1, len(lam)):
            assert property_p(lam, n) == any(property_p(eta, n) for eta in branch(lam)), (lam, n)


@given(st.lists(st.integers(-3, 3), min_size=2, max_size=5), st.randoms())
def test_interlaces_permutation_invariant(lam, rnd):
    lam = tuple(lam)
    for eta in branch(lam):
        e, l = list(eta), list(lam)
        rnd.shuffle(e)
        rnd.shuffle(l)
        assert interlaces(e, l)


def test_fixed_dim_of_zero_is_one():
    for k in range(1, 6):
        for n in range(1, k + 1):
            assert fixed_space_dim((0,) * k, n) == 1

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hwcl.errors import ParseError
from hwcl.weights import (
    FiniteWeight,
    Partition,
    Weight,
    conjugate,
    dual_weight,
    parse_tuple,
    parse_weight,
    split_signs,
)

partitions = st.lists(st.integers(1, 6), max_size=6).map(
    lambda xs: Partition.make(sorted(xs, reverse=True)))
weights = st.builds(Weight.make, st.lists(st.integers(-5, 5), max_size=6), st.integers(-3, 3))


@pytest.mark.parametrize("text, prefix, tail", [
    ("1,0,-2;0", (1, 0, -2), 0),
    ("-5;1", (-5,), 1),
    ("1,1;1", (), 1),
    ("", (), 0),
    ("2, 1 ,0", (2, 1), 0),
    ("0,0;0", (), 0),
])
def test_parse_weight(text, prefix, tail):
    w = parse_weight(text)
    assert (w.prefix, w.tail) == (prefix, tail)


@pytest.mark.parametrize("bad", ["a,1", "1;;0", "1;x", "1.5", "1,,2", ";"])
def test_parse_weight_rejects(bad):
    with pytest.raises(ParseError):
        parse_weight(bad)


def test_parse_tuple_keeps_zeros():
    assert parse_tuple("1,0,-1") == (1, 0, -1)
    assert parse_tuple("2,0;0") == (2, 0)
    with pytest.raises(ParseError):
        parse_tuple("1;2")


def test_weight_indexing_and_text():
    w = Weight.make([3, -1], 2)
    assert [w[j] for j in range(1, 6)] == [3, -1, 2, 2, 2]
    assert w.truncate(4) == (3, -1, 2, 2)
    assert str(w) == "3,-1;2"
    assert parse_weight(str(w)) == w
    with pytest.raises(IndexError):
        w[0]


def test_weight_canonical_form_enforced():
    with pytest.raises(ValueError):
        Weight((1, 1), 1)
    assert Weight.make([1, 1], 1) == Weight((), 1)


@pytest.mark.parametrize("parts, conj", [
    ((3, 2, 2, 1), (4, 3, 1)),
    ((), ()),
    ((5,), (1, 1, 1, 1, 1)),
])
def test_conjugate_examples(parts, conj):
    assert conjugate(Partition.make(parts)).parts == conj


def test_partition_rejects_bad_parts():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


@pytest.mark.parametrize("entries, plus, minus", [
    ((1, -1), (1,), (1,)),
    ((2, -3, 1), (2, 1), (3,)),
    ((1,), (1,), ()),
])
def test_split_signs_examples(entries, plus, minus):
    p, m = split_signs(FiniteWeight.make(entries))
    assert (p.parts, m.parts) == (plus, minus)


@pytest.mark.parametrize("w, d", [
    (Weight.make([1], 0), Weight.make([-1], 0)),
    (Weight.make([], 0), Weight.make([], 0)),
    (Weight.make([-5], 1), Weight.make([5], -1)),
])
def test_dual_weight_examples(w, d):
    assert dual_weight(w) == d


def test_highest_weight():
    w = FiniteWeight.make([2, -1, 0, 1])
    assert w.highest_weight(4) == (2, 1, 0, -1)
    assert w.highest_weight(3) == (2, 1, -1)
    with pytest.raises(ValueError):
        w.highest_weight(2)


@given(partitions)
def test_conjugate_involution(p):
    assert conjugate(conjugate(p)) == p
    assert conjugate(p).size == p.size
    assert conjugate(p).length == (p.parts[0] if p.parts else 0)


@given(weights)
def test_dual_involution(w):
    assert dual_weight(dual_weight(w)) == w


@given(st.lists(st.integers(-4, 4), max_size=7))
def test_split_signs_sizes(xs):
    w = FiniteWeight.make(xs)
    p, m = split_signs(w)
    assert p.size + m.size == sum(abs(x) for x in xs)

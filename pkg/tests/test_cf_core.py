from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from markovcf.cf_core import (
    ContinuedFraction,
    DomainError,
    Marker,
    SegmentedCF,
    StructureError,
    continuant,
    evaluate,
    graft_numerator,
    numerator,
    replace_at,
    replacement_difference,
    replacement_split,
    reverse,
    strip_zero_pairs,
    tail_identity_terms,
)


def fraction_value(entries):
    """Reference evaluator: fold exact fractions from the back."""
    v = Fraction(entries[-1])
    for a in reversed(entries[:-1]):
        v = a + 1 / v
    return v


def fraction_numerator(entries):
    return fraction_value(entries).numerator if entries else 1


positive = st.lists(st.integers(1, 9), min_size=1, max_size=10)
segment = st.one_of(st.just((0, 0)), positive.map(tuple))


@pytest.mark.parametrize(
    "entries, expected",
    [
        ([2, 2, 2, 1, 1, 2, 2, 2], 433),
        ([], 1),
        ([2, 1, 1, 2], 13),
        ([0, 0, 2, 2], 5),
        ([7], 7),
    ],
)
def test_numerator_examples(entries, expected):
    assert numerator(entries) == expected


def test_reference_agrees_on_examples():
    assert fraction_numerator([2, 1, 1, 2]) == 13
    assert fraction_numerator([2, 2, 2, 1, 1, 2, 2, 2]) == 433


@pytest.mark.parametrize("bad", [[0], [2, 0, 3], [0, 0, 0], [1, 0], [-1, 2]])
def test_invalid_zero_placement(bad):
    with pytest.raises(StructureError):
        ContinuedFraction(tuple(bad))
    with pytest.raises(StructureError):
        numerator(bad)


def test_strict_flag():
    assert ContinuedFraction((2, 1)).strict
    assert not ContinuedFraction((2, 0, 0, 1)).strict
    assert ContinuedFraction(()).strict


def test_evaluate_examples():
    assert evaluate([2, 2]) == Fraction(5, 2)
    assert evaluate([0, 0, 2]) == Fraction(2, 1)
    v = evaluate([2, 2, 2, 1, 1, 2, 2, 2])
    assert v == fraction_value([2, 2, 2, 1, 1, 2, 2, 2])
    assert (v.numerator, v.denominator) == (433, numerator([2, 2, 1, 1, 2, 2, 2]))


def test_evaluate_empty_after_stripping():
    with pytest.raises(DomainError):
        evaluate([])
    with pytest.raises(DomainError):
        evaluate([0, 0])


def test_reverse_examples():
    assert reverse([2, 1]).entries == (1, 2)
    assert numerator([2, 1]) == numerator([1, 2]) == 3
    assert reverse([]).entries == ()
    pal = [2, 2, 2, 1, 1, 2, 2, 2]
    assert list(reverse(pal)) == pal


@pytest.mark.parametrize(
    "entries, stripped",
    [([2, 0, 0, 3], (2, 3)), ([0, 0, 1, 1], (1, 1)), ([2, 1, 1, 0, 0], (2, 1, 1))],
)
def test_strip_zero_pairs(entries, stripped):
    out = strip_zero_pairs(entries)
    assert out.entries == stripped and out.strict
    assert numerator(out) == numerator(entries)


def test_graft_examples():
    assert graft_numerator([2, 1, 1, 2], 2) == 3 * 3 + 2 * 2 == 13
    assert graft_numerator([2, 2], 1) == 2 * 2 + 1 * 1 == 5
    with pytest.raises(DomainError):
        graft_numerator([4], 1)
    with pytest.raises(DomainError):
        graft_numerator([4, 1], 0)


def test_tail_identity_examples():
    assert tail_identity_terms([2]) == (5, 3, 2, 1)
    assert tail_identity_terms([2, 2]) == (12, 7, 5, 2)
    n2, *_ = tail_identity_terms([1, 1])
    assert n2 == numerator([1, 1, 2]) == numerator([1, 1, 1, 1])
    with pytest.raises(DomainError):
        tail_identity_terms([])


def test_replace_at():
    seg = SegmentedCF(((2,), (2,)), (Marker.TWO,))
    flipped = replace_at(seg, 0)
    assert flipped.alphas == (Marker.ONEONE,)
    assert flipped.flatten() == (2, 1, 1, 2)
    assert replace_at(flipped, 0) == seg
    assert numerator(flipped.flatten()) - numerator(seg.flatten()) == replacement_difference((2,), (2,))
    with pytest.raises(DomainError):
        replace_at(seg, 1)


def test_replacement_difference_examples():
    assert replacement_difference((2,), (2,)) == 1 == 13 - 12
    assert replacement_difference((0, 0), (2,)) == 0
    direct = fraction_numerator([2, 2, 1, 1, 1, 1]) - fraction_numerator([2, 2, 2, 1, 1])
    assert replacement_difference((2, 2), (1, 1)) == 2 == direct
    with pytest.raises(StructureError):
        replacement_difference((), (2,))


def test_segmented_validation():
    with pytest.raises(StructureError):
        SegmentedCF(((2,), (2,)), ())
    with pytest.raises(StructureError):
        SegmentedCF(((2, 0),), ())


def test_replacement_split():
    mus = [(3,), (0, 0), (4, 5)]
    s = replacement_split(mus, 1)
    assert s.delta == (3,) and s.epsilon == (0, 0, 1, 1, 4, 5)
    s = replacement_split(mus, 2)
    assert s.delta == (3, 2, 0, 0) and s.epsilon == (4, 5)
    # delta^- ends in an isolated 0; its numerator drops the 2 with it
    assert s.term() == numerator([3]) * numerator([5])


# -- properties -----------------------------------------------------------


@given(positive)
def test_numerator_matches_fraction_oracle(a):
    assert numerator(a) == fraction_numerator(a)
    assert evaluate(a) == fraction_value(a)


@given(positive)
def test_head_and_tail_recursion(a):
    if len(a) >= 2:
        assert numerator(a) == a[0] * numerator(a[1:]) + numerator(a[2:])
        assert numerator(a) == a[-1] * numerator(a[:-1]) + numerator(a[:-2])


@given(st.lists(st.integers(1, 9), max_size=10))
def test_reversal_and_end_rewrites(a):
    assert numerator(reverse(a)) == numerator(a)
    assert numerator(a + [1, 1]) == numerator(a + [2])
    assert numerator([1, 1] + a) == numerator([2] + a)
    if a:
        assert fraction_value(a + [1, 1]) == fraction_value(a + [2])


@given(positive, st.data())
def test_zero_pairs_anywhere(a, data):
    i = data.draw(st.integers(0, len(a)))
    z = a[:i] + [0, 0] + a[i:]
    assert numerator(z) == numerator(a)
    assert strip_zero_pairs(z).entries == tuple(a)
    assert numerator(a + [0, 0]) == numerator([0, 0] + a[::-1])


@given(positive)
def test_grafting_every_split(a):
    for i in range(1, len(a)):
        assert graft_numerator(a, i) == numerator(a)


@given(positive)
def test_tail_identities(a):
    n2, n1, n0, nm = tail_identity_terms(a)
    assert n2 == n1 + n0
    assert 2 * n1 == n2 + nm


@given(segment, segment)
def test_replacement_difference_property(mu1, mu2):
    lhs = numerator(mu1 + (1, 1) + mu2) - numerator(mu1 + (2,) + mu2)
    assert lhs == replacement_difference(mu1, mu2)


def test_continuant_raw_sequences():
    assert continuant([0]) == 0
    assert continuant([3, 2, 0]) == 3


def test_monotone_in_each_entry():
    for n in range(1, 5):
        for a in product(range(1, 4), repeat=n):
            base = numerator(a)
            for i in range(n):
                b = list(a)
                b[i] += 1
                assert numerator(b) > base

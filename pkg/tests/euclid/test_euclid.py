from fractions import Fraction

import pytest
from hypothesis import given

from tests.strategies import coprime_pairs
from thetaflip.euclid import (
    ContinuedFraction,
    continued_fraction,
    euclid_complexity,
    euclid_subtractive_oracle,
    euclid_word,
    reciprocal_symmetry_scan,
)
from thetaflip.exceptions import InvalidRange, NonPositive, NotCoprime
from thetaflip.models import UniMatrix


@pytest.mark.parametrize(
    "p, q, expected",
    [
        (5, 2, (2, 2)),
        (289, 171, (1, 1, 2, 4, 2, 2, 2)),
        (3, 1, (3,)),
        (1, 1, (1,)),
        (3, 2, (1, 2)),
    ],
)
def test_continued_fraction(p, q, expected):
    expansion = continued_fraction(p, q)
    assert expansion.terms == expected
    assert expansion.value == Fraction(p, q)


def test_continued_fraction_str():
    assert str(continued_fraction(289, 171)) == "[1,1,2,4,2,2,2]"


@pytest.mark.parametrize(
    "p, q, error",
    [(2, 3, InvalidRange), (4, 2, NotCoprime), (0, 1, NonPositive)],
    ids=["q-above-p", "not-coprime", "zero"],
)
def test_continued_fraction_invalid(p, q, error):
    with pytest.raises(error):
        continued_fraction(p, q)


def test_continued_fraction_requires_terminal_term_at_least_two():
    with pytest.raises(ValueError, match="Last term must be at least 2"):
        ContinuedFraction((2, 1))


@pytest.mark.parametrize(
    "p, q, expected",
    [
        (5, 2, 4),
        (2, 5, 4),
        (289, 171, 14),
        (1, 1, 1),
        (1, 0, 0),
        (0, 1, 0),
        (7, 3, 5),
    ],
)
def test_euclid_complexity(p, q, expected):
    assert euclid_complexity(p, q) == expected


@pytest.mark.parametrize(
    "p, q, error",
    [(4, 2, NotCoprime), (-1, 2, NonPositive), (0, 0, NotCoprime)],
)
def test_euclid_complexity_invalid(p, q, error):
    with pytest.raises(error):
        euclid_complexity(p, q)


@pytest.mark.parametrize("p, q, expected", [(7, 3, 5), (2, 1, 2), (1, 0, 0)])
def test_euclid_subtractive_oracle(p, q, expected):
    assert euclid_subtractive_oracle(p, q) == expected


def test_euclid_subtractive_oracle_cutoff():
    with pytest.raises(InvalidRange, match="cutoff 10"):
        euclid_subtractive_oracle(11, 1, cutoff=10)


def test_euclid_complexity_matches_oracle_exhaustively():
    for p in range(1, 60):
        for q in range(0, 60):
            try:
                expected = euclid_subtractive_oracle(p, q)
            except NotCoprime:
                continue
            assert euclid_complexity(p, q) == expected


@given(coprime_pairs)
def test_euclid_complexity_first_subtraction(pair):
    p, q = pair
    assert euclid_complexity(p, q) == euclid_complexity(p - q, q) + 1


@pytest.mark.parametrize(
    "p, q, word, product",
    [
        (5, 2, "R1^2 R2^2", UniMatrix(5, 2, 2, 1)),
        (2, 1, "R1 R2", UniMatrix(2, 1, 1, 1)),
        (3, 1, "R1^2 R2", UniMatrix(3, 2, 1, 1)),
    ],
)
def test_euclid_word(p, q, word, product):
    result = euclid_word(p, q)
    assert str(result) == word
    assert result.product == product


@given(coprime_pairs)
def test_euclid_word_properties(pair):
    p, q = pair
    word = euclid_word(p, q)
    a, r, c, s = word.product.entries
    assert (a, c) == (p, q)
    assert a * s - r * c == 1
    assert 0 < r <= p
    assert 0 < s <= q
    assert word.exponent_sum == euclid_complexity(p, q)
    assert word.transposed == word.product.transpose()


@pytest.mark.parametrize("p, q", [(2, 2), (1, 1), (3, 0)])
def test_euclid_word_invalid(p, q):
    with pytest.raises(InvalidRange):
        euclid_word(p, q)


@pytest.mark.parametrize("p_max", [7, 60])
def test_reciprocal_symmetry_scan_is_empty(p_max):
    assert reciprocal_symmetry_scan(p_max) == []


def test_reciprocal_symmetry_spot_check():
    # 3·5 ≡ 1 (mod 7)
    assert euclid_complexity(7, 3) == euclid_complexity(7, 5) == 5


def test_reciprocal_symmetry_scan_requires_p_max_three():
    with pytest.raises(InvalidRange, match="at least 3"):
        reciprocal_symmetry_scan(2)

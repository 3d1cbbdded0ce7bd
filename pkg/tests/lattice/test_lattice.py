import pytest
from hypothesis import given
from sympy import Matrix

from tests.strategies import gl2_matrices, lattice_vectors, small_entries
from thetaflip.exceptions import InvalidMatrix, InvalidRational, NotCoprime
from thetaflip.lattice import (
    completing_matrix,
    cross_det,
    extended_gcd,
    floor_quadratic,
    q_norm,
    smith_invariants,
)
from thetaflip.models import ExtRational, LatticeVector, UniMatrix
from thetaflip.utilities import (
    convert_to_matrix,
    convert_to_rational,
    parse_matrix,
    parse_rational,
)


@pytest.mark.parametrize(
    "vector, expected",
    [
        (LatticeVector(1, 0), 1),
        (LatticeVector(1, -1), 1),
        (LatticeVector(2, 1), 7),
        (LatticeVector(171, -289), 63343),
        (LatticeVector(0, 0), 0),
    ],
)
def test_q_norm(vector, expected):
    assert q_norm(vector) == expected


@pytest.mark.parametrize(
    "first, second, expected",
    [
        (LatticeVector(1, 0), LatticeVector(0, 1), 1),
        (LatticeVector(2, 1), LatticeVector(1, 1), 1),
        (LatticeVector(1, 1), LatticeVector(2, 2), 0),
        (LatticeVector(0, 1), LatticeVector(1, 0), -1),
    ],
)
def test_cross_det(first, second, expected):
    assert cross_det(first, second) == expected


@pytest.mark.parametrize(
    "entries, expected",
    [
        ((0, 0, 0, 0), (0, 0)),
        ((1, 1, 1, 0), (1, 1)),
        ((0, 1, 0, 0), (1, 0)),
        ((0, 5, 0, 0), (5, 0)),
        ((-2, 0, 0, -2), (2, 2)),
        ((4, 0, 0, 6), (2, 12)),
    ],
    ids=[
        "zero",
        "unimodular",
        "rank-one",
        "rank-one-content-5",
        "twice-identity",
        "diag",
    ],
)
def test_smith_invariants(entries, expected):
    assert smith_invariants(entries) == expected


@pytest.mark.parametrize("a, b", [(240, 46), (46, 240), (-7, 3), (5, 0), (0, 9)])
def test_extended_gcd(a, b):
    g, x, y = extended_gcd(a, b)
    assert g >= 0
    assert a * x + b * y == g
    if a or b:
        assert a % g == 0 and b % g == 0


@pytest.mark.parametrize(
    "vector",
    [
        LatticeVector(5, 2),
        LatticeVector(0, 1),
        LatticeVector(-3, 7),
        LatticeVector(1, 0),
    ],
)
def test_completing_matrix(vector):
    matrix = completing_matrix(vector)
    assert matrix.det == 1
    assert matrix.columns[0] == vector


def test_completing_matrix_rejects_non_primitive():
    with pytest.raises(NotCoprime):
        completing_matrix(LatticeVector(2, 4))


@pytest.mark.parametrize(
    "rational, radical, discriminant, denominator, expected",
    [
        (1, 1, 5, 2, 1),
        (1, -1, 5, 2, -1),
        (0, 1, 4, 1, 2),
        (0, -1, 4, 1, -2),
        (1, 1, 5, -2, -2),
        (3, 0, 5, 2, 1),
    ],
    ids=[
        "golden",
        "conjugate",
        "square",
        "negative-square",
        "negative-den",
        "rational",
    ],
)
def test_floor_quadratic(rational, radical, discriminant, denominator, expected):
    assert floor_quadratic(rational, radical, discriminant, denominator) == expected


@pytest.mark.parametrize(
    "text, expected",
    [
        ("5/2", ExtRational(5, 2)),
        ("10/4", ExtRational(5, 2)),
        ("-3", ExtRational(-3)),
        (" 7 / -2 ", ExtRational(-7, 2)),
        ("inf", ExtRational.infinity()),
        ("∞", ExtRational.infinity()),
        ("1/0", ExtRational.infinity()),
    ],
)
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["", "1/2/3", "abc", "0/0", "1.5"])
def test_parse_rational_invalid(text):
    with pytest.raises(InvalidRational):
        parse_rational(text)


def test_convert_to_rational_passthrough():
    value = ExtRational(1, 3)
    assert convert_to_rational(value) is value
    assert convert_to_rational(4) == ExtRational(4)


def test_convert_to_matrix_accepts_rows_and_flat():
    expected = UniMatrix(2, 1, 1, 1)
    assert convert_to_matrix([2, 1, 1, 1]) == expected
    assert convert_to_matrix([[2, 1], [1, 1]]) == expected


def test_convert_to_matrix_wrong_length():
    with pytest.raises(InvalidMatrix, match="Expected four entries, got 3"):
        convert_to_matrix([1, 0, 1])


def test_parse_matrix():
    expected = UniMatrix(171, 100, -289, -169)
    assert parse_matrix(["171", "100", "-289", "-169"]) == expected
    with pytest.raises(InvalidMatrix, match="must be integers"):
        parse_matrix(["1", "x", "0", "1"])


@given(lattice_vectors)
def test_q_norm_is_even(vector):
    assert q_norm(-vector) == q_norm(vector)
    assert q_norm(vector) >= 0


@given(gl2_matrices, lattice_vectors, lattice_vectors)
def test_cross_det_scales_by_determinant(matrix, first, second):
    assert cross_det(matrix @ first, matrix @ second) == matrix.det * cross_det(
        first, second
    )


@given(gl2_matrices, small_entries, gl2_matrices)
def test_smith_invariants_ignore_unimodular_factors(left, entries, right):
    product = Matrix(2, 2, left.entries) * Matrix(2, 2, entries)
    product = product * Matrix(2, 2, right.entries)
    transformed = tuple(int(value) for value in product)
    assert smith_invariants(transformed) == smith_invariants(entries)

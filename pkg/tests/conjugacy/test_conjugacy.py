import pytest
from hypothesis import given, settings

from tests.strategies import sl2_matrices
from thetaflip.conjugacy import (
    classify,
    complexity_profile,
    conjugacy_key,
    elliptic_form_check,
    is_minimal,
    klein_hull_check,
    klein_hull_report,
    mainstream,
    minimal_matrices,
    minimize,
    operator_complexity,
    parity,
    power_law_check,
)
from thetaflip.enums import OperatorKind
from thetaflip.exceptions import (
    InvalidRange,
    NotElliptic,
    NotHyperbolic,
    NotSL2,
    PeriodicOperator,
)
from thetaflip.flip_tree import distance, matrix_complexity
from thetaflip.hexagon import apply_matrix, standard_hexagon
from thetaflip.lattice import (
    IDENTITY,
    JORDAN_T,
    MINUS_IDENTITY,
    ROTATION_R,
    ROTATION_S,
    SWAP_C,
)
from thetaflip.models import LatticeVector, UniMatrix


def test_classify_hyperbolic(hyperbolic_example):
    operator = classify(hyperbolic_example)
    assert operator.kind is OperatorKind.HYPERBOLIC
    assert not operator.is_periodic
    assert str(operator) == "hyperbolic"


@pytest.mark.parametrize(
    "matrix, sign, n",
    [
        (JORDAN_T, 1, 1),
        (UniMatrix(171, 100, -289, -169), 1, 1),
        (UniMatrix(1, 0, 1, 1), 1, -1),
        (UniMatrix(1, 5, 0, 1), 1, 5),
        (UniMatrix(-1, -3, 0, -1), -1, 3),
    ],
    ids=["jordan", "conjugate-example", "lower-jordan", "fifth-power", "negative"],
)
def test_classify_parabolic(matrix, sign, n):
    operator = classify(matrix)
    assert operator.kind is OperatorKind.PARABOLIC
    assert (operator.sign, operator.n) == (sign, n)


def test_parabolic_str():
    assert str(classify(JORDAN_T)) == "parabolic(+, n=1)"


@pytest.mark.parametrize(
    "matrix, period",
    [
        (IDENTITY, 1),
        (MINUS_IDENTITY, 2),
        (UniMatrix(-1, -1, 1, 0), 3),
        (ROTATION_S, 4),
        (ROTATION_R, 6),
    ],
)
def test_classify_elliptic(matrix, period):
    operator = classify(matrix)
    assert operator.is_periodic
    assert operator.period == period
    assert matrix**period == IDENTITY


def test_classify_rejects_orientation_reversing():
    with pytest.raises(NotSL2):
        classify(SWAP_C)


def test_is_minimal(hyperbolic_example, conjugate_example):
    assert is_minimal(hyperbolic_example)
    assert is_minimal(JORDAN_T)
    assert not is_minimal(conjugate_example)


def test_minimize_conjugate_example(conjugate_example):
    result = minimize(conjugate_example)
    assert result.operator_complexity == 1
    assert is_minimal(result.minimal)
    assert result.minimal == conjugate_example.conjugate_by(result.conjugator)
    assert classify(result.minimal) == classify(JORDAN_T)


def test_minimize_leaves_minimal_matrices(hyperbolic_example):
    result = minimize(hyperbolic_example)
    assert result.conjugator == IDENTITY
    assert result.minimal == hyperbolic_example
    assert result.operator_complexity == 2
    assert result.minimal_hexagon == standard_hexagon()


def test_minimize_identity():
    assert minimize(IDENTITY).operator_complexity == 0


@pytest.mark.parametrize(
    "matrix, expected",
    [(ROTATION_S, 1), (MINUS_IDENTITY, 0), (ROTATION_R, 0), (JORDAN_T, 1)],
)
def test_operator_complexity(matrix, expected):
    assert operator_complexity(matrix) == expected


@given(sl2_matrices, sl2_matrices)
@settings(max_examples=50, deadline=None)
def test_operator_complexity_is_a_class_invariant(matrix, basis):
    conjugate = matrix.conjugate_by(basis)
    assert operator_complexity(conjugate) == operator_complexity(matrix)
    assert conjugacy_key(conjugate) == conjugacy_key(matrix)


@given(sl2_matrices)
@settings(max_examples=50, deadline=None)
def test_minimize_reaches_operator_complexity(matrix):
    result = minimize(matrix)
    assert is_minimal(result.minimal)
    assert result.operator_complexity <= matrix_complexity(matrix)
    hexagon = result.minimal_hexagon
    assert distance(hexagon, apply_matrix(matrix, hexagon)) == (
        result.operator_complexity
    )


def test_minimal_matrices_of_rotation_by_quarter_turn():
    assert minimal_matrices(ROTATION_S) == {
        UniMatrix(-1, -2, 1, 1),
        UniMatrix(-1, -1, 2, 1),
        UniMatrix(0, -1, 1, 0),
    }


def test_minimal_matrices_of_order_six_rotation():
    assert minimal_matrices(ROTATION_R) == {ROTATION_R}


def test_minimal_matrices_of_hyperbolic_example(hyperbolic_example):
    assert minimal_matrices(hyperbolic_example) == {
        UniMatrix(2, 1, 1, 1),
        UniMatrix(2, -1, -1, 1),
        UniMatrix(0, -1, 1, 3),
        UniMatrix(3, 1, -1, 0),
        UniMatrix(1, -1, -1, 2),
        UniMatrix(1, 1, 1, 2),
    }


def test_conjugacy_key(hyperbolic_example):
    assert conjugacy_key(hyperbolic_example) == conjugacy_key(UniMatrix(1, 1, 1, 2))
    assert conjugacy_key(JORDAN_T) != conjugacy_key(UniMatrix(1, 2, 0, 1))


def test_mainstream_of_hyperbolic_example(hyperbolic_example):
    standard = standard_hexagon()
    hexagons = mainstream(hyperbolic_example, 1)
    assert len(hexagons) == 7
    assert hexagons[0] == apply_matrix(hyperbolic_example.inverse(), standard)
    assert standard in hexagons
    assert apply_matrix(hyperbolic_example, standard) in hexagons
    assert len(mainstream(hyperbolic_example, 0)) == 3


def test_mainstream_is_a_flip_path(conjugate_example):
    hexagons = mainstream(conjugate_example, 2)
    assert len(hexagons) == 6
    for current, following in zip(hexagons, hexagons[1:]):
        assert distance(current, following) == 1


def test_mainstream_of_jordan_block_shares_its_eigenvector():
    hexagons = mainstream(JORDAN_T, 1)
    assert len(hexagons) == 4
    assert all(hexagon.has_vertex(LatticeVector(1, 0)) for hexagon in hexagons)


def test_mainstream_rejects_periodic():
    with pytest.raises(PeriodicOperator):
        mainstream(ROTATION_S, 1)


def test_mainstream_rejects_negative_window(hyperbolic_example):
    with pytest.raises(InvalidRange, match="nonnegative"):
        mainstream(hyperbolic_example, -1)


@pytest.mark.parametrize(
    "matrix, expected",
    [(JORDAN_T, 1), (ROTATION_S, 1), (JORDAN_T @ ROTATION_S, 0), (IDENTITY, 0)],
)
def test_parity(matrix, expected):
    assert parity(matrix) == expected


@given(sl2_matrices, sl2_matrices)
def test_parity_is_a_homomorphism(first, second):
    assert parity(first @ second) == (parity(first) + parity(second)) % 2


def test_power_law_of_minimal_matrix(hyperbolic_example):
    report = power_law_check(hyperbolic_example, 3)
    assert report.holds
    assert report.offset == 0
    assert len(report.rows) == 6


def test_power_law_of_non_minimal_matrix(conjugate_example):
    report = power_law_check(conjugate_example, 2)
    assert report.holds
    assert report.offset == 12
    assert not report.minimal


def test_power_law_rejects_periodic():
    with pytest.raises(PeriodicOperator):
        power_law_check(ROTATION_S, 2)


def test_complexity_profile_of_periodic_operator():
    assert complexity_profile(ROTATION_S, 4) == [1, 0, 1, 0]


@pytest.mark.parametrize(
    "matrix", [UniMatrix(2, 1, 1, 1), UniMatrix(5, 3, 3, 2), UniMatrix(-2, -1, -1, -1)]
)
def test_klein_hull_check(matrix):
    assert klein_hull_check(matrix)


def test_klein_hull_report_has_corners(hyperbolic_example):
    report = klein_hull_report(hyperbolic_example)
    assert report.corners
    assert not report.off_sail_leading_vertices
    assert not report.unmatched_sail_points


def test_klein_hull_box_defaults_to_the_leading_vertex_of_the_cube(hyperbolic_example):
    # A³W₀ has leading vertex (13,8)
    assert klein_hull_report(hyperbolic_example).bound == 337
    assert klein_hull_report(-hyperbolic_example).bound == 337
    assert klein_hull_report(hyperbolic_example, bound=50).bound == 50


def test_klein_hull_corners_are_fibonacci_pairs(hyperbolic_example):
    corners = klein_hull_report(hyperbolic_example).corners
    positive = {corner for corner in corners if corner.is_positive}
    assert {LatticeVector(1, 1), LatticeVector(2, 1), LatticeVector(3, 2)} <= {
        LatticeVector(abs(corner.x), abs(corner.y)) for corner in positive
    }


def test_klein_hull_rejects_parabolic():
    with pytest.raises(NotHyperbolic):
        klein_hull_check(JORDAN_T)


@pytest.mark.parametrize(
    "matrix", [ROTATION_S, ROTATION_R, UniMatrix(-1, -1, 1, 0), UniMatrix(1, 1, -1, 0)]
)
def test_elliptic_form_check(matrix):
    assert elliptic_form_check(matrix)


@pytest.mark.parametrize("matrix", [IDENTITY, MINUS_IDENTITY, JORDAN_T])
def test_elliptic_form_check_rejects(matrix):
    with pytest.raises(NotElliptic):
        elliptic_form_check(matrix)

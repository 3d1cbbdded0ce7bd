from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tests.strategies import sl2_matrices
from thetaflip.euclid import euclid_complexity
from thetaflip.exceptions import (
    EqualEndpoints,
    NotAdmissible,
    SideNotInTriangle,
    VertexOfTriangle,
)
from thetaflip.farey import (
    FareyTriangle,
    dc_operator_displacement,
    dc_rationals,
    dc_triangle_point,
    hexagon_to_triangle,
    is_farey_line,
    mediant_reflect,
    moebius_apply,
    rational_pair_key,
    rational_pairs_equivalent,
    separating_lines_oracle,
    triangle_to_hexagon,
)
from thetaflip.hexagon import apply_matrix
from thetaflip.lattice import IDENTITY, JORDAN_T, ROTATION_S
from thetaflip.models import ExtRational, UniMatrix

INFINITY = ExtRational.infinity()

fractions = st.builds(
    Fraction, st.integers(-40, 40), st.integers(1, 40)
).map(ExtRational.from_fraction)


@pytest.mark.parametrize(
    "first, second, expected",
    [
        (0, "inf", True),
        (1, "inf", True),
        ("1/2", "1/3", True),
        (1, 3, False),
        (0, "2/5", False),
    ],
)
def test_is_farey_line(first, second, expected):
    assert is_farey_line(first, second) is expected


def test_is_farey_line_rejects_equal_endpoints():
    with pytest.raises(EqualEndpoints):
        is_farey_line("1/2", "2/4")


def test_triangle_vertices_are_sorted_with_infinity_last():
    triangle = FareyTriangle.of("inf", 0, 1)
    assert triangle.vertices == (ExtRational(0), ExtRational(1), INFINITY)
    assert str(triangle) == "(0,1,inf)"


def test_triangle_rejects_non_neighbours():
    with pytest.raises(NotAdmissible, match="not Farey neighbours"):
        FareyTriangle.of(0, 1, 3)


@pytest.mark.parametrize(
    "side, expected",
    [
        ((0, 1), ("0", "1/2", "1")),
        ((1, "inf"), ("1", "2", "inf")),
        ((0, "inf"), ("-1", "0", "inf")),
    ],
)
def test_mediant_reflect(side, expected):
    reflected = mediant_reflect(FareyTriangle.of(0, 1, "inf"), side)
    assert reflected == FareyTriangle.of(*expected)


def test_mediant_reflect_is_an_involution():
    triangle = FareyTriangle.of(0, 1, "inf")
    once = mediant_reflect(triangle, (0, 1))
    assert mediant_reflect(once, (0, 1)) == triangle


def test_mediant_reflect_rejects_foreign_side():
    with pytest.raises(SideNotInTriangle):
        mediant_reflect(FareyTriangle.of(0, 1, "inf"), (0, "1/2"))


def test_base_triangle_is_the_standard_hexagon(standard):
    assert triangle_to_hexagon(FareyTriangle.base()) == standard
    assert hexagon_to_triangle(standard) == FareyTriangle.base()


def test_triangle_to_hexagon(make_hexagon):
    triangle = FareyTriangle.of(0, 1, "inf")
    assert triangle_to_hexagon(triangle) == make_hexagon((0, 1), (1, 1), (1, 0))


@pytest.mark.parametrize(
    "matrix, point, expected",
    [
        (IDENTITY, "5/2", ExtRational(5, 2)),
        (JORDAN_T, "inf", INFINITY),
        (JORDAN_T, "5/2", ExtRational(7, 2)),
        (ROTATION_S, 0, INFINITY),
        (ROTATION_S, 2, ExtRational(-1, 2)),
    ],
)
def test_moebius_apply(matrix, point, expected):
    assert moebius_apply(matrix, point) == expected


@given(sl2_matrices)
def test_moebius_action_matches_hexagon_action(matrix):
    triangle = FareyTriangle.base()
    image = FareyTriangle(
        tuple(moebius_apply(matrix, vertex) for vertex in triangle.vertices)
    )
    assert triangle_to_hexagon(image) == apply_matrix(
        matrix, triangle_to_hexagon(triangle)
    )


@pytest.mark.parametrize(
    "first, second, expected",
    [(0, 1, 0), (0, 2, 1), (0, "5/2", 3), ("inf", "5/2", 1), (0, "inf", 0)],
)
def test_separating_lines_oracle(first, second, expected):
    assert separating_lines_oracle(first, second) == expected


@pytest.mark.parametrize("p, q", [(5, 2), (7, 3), (13, 8), (2, 1), (1, 1)])
def test_dc_rationals_from_zero(p, q):
    assert dc_rationals(0, Fraction(p, q)) == euclid_complexity(p, q) - 1


@given(fractions, fractions)
def test_dc_rationals_counts_separating_lines(first, second):
    if first == second:
        return
    assert dc_rationals(first, second) == separating_lines_oracle(first, second)
    assert dc_rationals(first, second) == dc_rationals(second, first)


def test_dc_rationals_rejects_equal_endpoints():
    with pytest.raises(EqualEndpoints):
        dc_rationals("inf", "1/0")


@pytest.mark.parametrize(
    "triangle, point, expected",
    [
        (FareyTriangle.base(), "5/2", 4),
        (FareyTriangle.base(), 1, 1),
        (FareyTriangle.of(0, 1, "inf"), "1/2", 1),
    ],
)
def test_dc_triangle_point(triangle, point, expected):
    assert dc_triangle_point(triangle, point) == expected


def test_dc_triangle_point_rejects_vertices():
    with pytest.raises(VertexOfTriangle):
        dc_triangle_point(FareyTriangle.base(), 0)


@pytest.mark.parametrize(
    "first, second, expected",
    [(0, "inf", (1, 0)), (0, "2/5", (2, 1)), ("inf", 0, (1, 0))],
)
def test_rational_pair_key(first, second, expected):
    assert rational_pair_key(first, second) == expected


def test_rational_pairs_equivalent():
    assert rational_pairs_equivalent((0, "inf"), (1, "inf"))
    assert rational_pairs_equivalent(("1/2", "1/3"), (0, "inf"))
    assert not rational_pairs_equivalent((0, 1), (0, "2/5"))


@given(sl2_matrices, fractions, fractions)
def test_rational_pair_key_is_invariant(matrix, first, second):
    if first == second:
        return
    image = (moebius_apply(matrix, first), moebius_apply(matrix, second))
    assert rational_pair_key(*image) == rational_pair_key(first, second)


def test_dc_operator_displacement(hyperbolic_example, conjugate_example):
    base = FareyTriangle.base()
    assert dc_operator_displacement(hyperbolic_example, base) == 2
    assert dc_operator_displacement(conjugate_example, base) == 13
    assert dc_operator_displacement(UniMatrix(0, -1, 1, 1), base) == 0


@pytest.mark.parametrize(
    "first, second, reflections, expected",
    [
        ("inf", "2/5", False, (5, 2)),
        ("inf", "3/5", False, (5, 3)),
        ("inf", "2/5", True, (5, 2)),
        ("inf", "3/5", True, (5, 2)),
        (0, "inf", True, (1, 0)),
    ],
)
def test_rational_pair_key_with_reflections(first, second, reflections, expected):
    assert rational_pair_key(first, second, reflections) == expected


def test_reflections_identify_mirror_pairs():
    first, second = ("inf", "2/5"), ("inf", "3/5")
    assert not rational_pairs_equivalent(first, second)
    assert rational_pairs_equivalent(first, second, reflections=True)


@given(sl2_matrices, fractions, fractions)
def test_reflected_pair_key_is_invariant(matrix, first, second):
    if first == second:
        return
    mirrored = [ExtRational(-point.num, point.den) for point in (first, second)]
    image = [moebius_apply(matrix, point) for point in mirrored]
    assert rational_pair_key(*image, reflections=True) == rational_pair_key(
        first, second, reflections=True
    )

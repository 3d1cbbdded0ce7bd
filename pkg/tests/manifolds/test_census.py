import logging

import pytest

from thetaflip.exceptions import NotMinimalMatrix, ZeroComplexity
from thetaflip.lattice import IDENTITY, JORDAN_T, ROTATION_R
from thetaflip.manifolds import SpineCensus, SweptCell, flat_description, spine_census
from thetaflip.models import LatticeVector, UniMatrix


def test_census_of_jordan_block():
    census = spine_census(JORDAN_T)
    assert census.operator_complexity == 1
    assert (census.n_vertices, census.n_edges, census.n_cells) == (6, 12, 7)
    assert census.unsimplified_vertices == 7
    assert len(census.swept_cells) == 3
    assert census.fiber_adjacent_cells == 3
    assert census.pseudominimal
    assert census.jordan_dichotomy_agrees


def test_census_of_hyperbolic_example(hyperbolic_example, caplog):
    with caplog.at_level(logging.INFO, logger="thetaflip.manifolds.census"):
        census = spine_census(hyperbolic_example)
    assert (census.n_vertices, census.n_cells) == (7, 8)
    assert census.fiber_adjacent_cells == 4
    assert census.interior_lengths == []
    assert census.pseudominimal
    assert not census.jordan_dichotomy_agrees
    assert "4 fiber-adjacent cells" in caplog.text


def test_census_of_square():
    census = spine_census(UniMatrix(5, 3, 3, 2))
    assert census.operator_complexity == 4
    assert census.n_vertices == 9
    assert census.fiber_adjacent_cells == 6
    assert census.jordan_dichotomy_agrees


def test_census_of_cube():
    census = spine_census(UniMatrix(13, 8, 8, 5))
    assert census.operator_complexity == 6
    assert (census.n_vertices, census.n_cells) == (11, 12)
    assert census.interior_lengths == [6, 6]
    assert census.pseudominimal
    assert census.jordan_dichotomy_agrees


def test_census_euler_characteristic():
    # spine of a once-punctured closed manifold: V − E + F = 1
    census = spine_census(UniMatrix(13, 8, 8, 5))
    assert census.n_vertices - census.n_edges + census.n_cells == 1


def test_census_rejects_non_minimal(conjugate_example):
    with pytest.raises(NotMinimalMatrix):
        spine_census(conjugate_example)


@pytest.mark.parametrize("matrix", [IDENTITY, ROTATION_R])
def test_census_rejects_flat_bundles(matrix):
    with pytest.raises(ZeroComplexity, match="flat six-vertex spine"):
        spine_census(matrix)


def test_swept_cell_lengths():
    edge = LatticeVector(1, 1)
    interior = SweptCell(edge, 2, 5)
    assert interior.exact
    assert interior.boundary_length == 6
    assert interior.length_text == "6"
    fiber_adjacent = SweptCell(edge, None, 3)
    assert fiber_adjacent.touches_fiber
    assert fiber_adjacent.length_text == "≥4"


def test_census_dict_round_trip():
    census = spine_census(UniMatrix(13, 8, 8, 5))
    data = census.to_dict()
    assert data["n_vertices"] == 11
    assert SpineCensus.from_dict(data) == census


@pytest.mark.parametrize(
    "period, expected",
    [
        (1, "three orientable annuli and three edges"),
        (2, "three nonorientable annuli and one edge"),
        (3, "one orientable annulus and two edges"),
        (6, "one nonorientable annulus and one edge"),
    ],
)
def test_flat_description(period, expected):
    assert flat_description(period) == expected


def test_flat_description_of_quarter_turn_is_missing():
    with pytest.raises(KeyError):
        flat_description(4)

from typing import Callable

import pytest
from hypothesis import settings

from thetaflip.hexagon import Hexagon, standard_hexagon
from thetaflip.models import LatticeVector, UniMatrix

settings.register_profile("thetaflip", derandomize=True, deadline=None)
settings.load_profile("thetaflip")


@pytest.fixture
def make_matrix() -> Callable[..., UniMatrix]:
    def _make_matrix(a: int, b: int, c: int, d: int) -> UniMatrix:
        return UniMatrix(a, b, c, d)

    return _make_matrix


@pytest.fixture
def make_hexagon() -> Callable[..., Hexagon]:
    def _make_hexagon(*pairs: tuple[int, int]) -> Hexagon:
        return Hexagon.from_vectors(*(LatticeVector(*pair) for pair in pairs))

    return _make_hexagon


@pytest.fixture
def standard() -> Hexagon:
    return standard_hexagon()


@pytest.fixture
def conjugate_example() -> UniMatrix:
    """c(A) = 13, conjugate to the Jordan block [[1,1],[0,1]]."""
    return UniMatrix(171, 100, -289, -169)


@pytest.fixture
def hyperbolic_example() -> UniMatrix:
    return UniMatrix(2, 1, 1, 1)

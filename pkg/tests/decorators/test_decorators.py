import pytest

from thetaflip.conjugacy import classify, mainstream
from thetaflip.decorators import requires_sl2
from thetaflip.exceptions import NotSL2
from thetaflip.lattice import JORDAN_T, SWAP_C


def test_requires_sl2_checks_positional_matrices():
    with pytest.raises(NotSL2, match="classify requires det = \\+1"):
        classify(SWAP_C)


def test_requires_sl2_checks_keyword_matrices():
    with pytest.raises(NotSL2):
        classify(matrix=SWAP_C)
    with pytest.raises(NotSL2):
        mainstream(window=1, matrix=SWAP_C)


def test_requires_sl2_passes_sl2_matrices_through():
    @requires_sl2
    def target(*args, **kwargs):
        return args, kwargs

    assert target(JORDAN_T, other=JORDAN_T) == ((JORDAN_T,), {"other": JORDAN_T})

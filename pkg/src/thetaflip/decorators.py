from __future__ import annotations

from functools import wraps

from thetaflip.exceptions import NotSL2
from thetaflip.models import UniMatrix


def requires_sl2(func):
    """Reject any UniMatrix argument whose determinant is not +1."""

    @wraps(func)
    def wrapper(*args, **kwargs):
        for argument in (*args, *kwargs.values()):
            if isinstance(argument, UniMatrix) and argument.det != 1:
                raise NotSL2(
                    f"{func.__name__} requires det = +1,"
                    f" got {argument} with det {argument.det}"
                )
        return func(*args, **kwargs)

    return wrapper

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from thetaflip.exceptions import InvalidMatrix, InvalidRational
from thetaflip.models import ExtRational, UniMatrix

RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")
INFINITY_NAMES = frozenset({"inf", "infinity", "∞", "1/0"})


def parse_rational(text: str) -> ExtRational:
    """
    Parse "p/q", "n" or "inf" into an ExtRational.

    >>> str(parse_rational("10/4"))
    '5/2'
    """
    if text.strip().lower() in INFINITY_NAMES:
        return ExtRational.infinity()
    match = RATIONAL_PATTERN.match(text)
    if not match:
        raise InvalidRational(
            f"Invalid rational: {text!r}. Expected 'p/q', 'n' or 'inf'."
        )
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    return ExtRational(num, den)


def convert_to_rational(value: ExtRational | Fraction | int | str) -> ExtRational:
    """
    Convert a value representing a point of the extended rationals to ExtRational.
    """
    if isinstance(value, ExtRational):
        return value
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, (Fraction, int)):
        return ExtRational.from_fraction(value)
    raise InvalidRational(f"Cannot interpret {value!r} as a rational")


def convert_to_matrix(
    value: UniMatrix | Sequence[int] | Sequence[Sequence[int]],
) -> UniMatrix:
    """
    Convert four row-major integers, or a pair of rows, to a UniMatrix.
    """
    if isinstance(value, UniMatrix):
        return value
    try:
        flat = [
            int(entry) for row in value for entry in row  # type: ignore[union-attr]
        ]
    except TypeError:
        flat = [int(entry) for entry in value]  # type: ignore[arg-type]
    if len(flat) != 4:
        raise InvalidMatrix(f"Expected four entries, got {len(flat)}")
    return UniMatrix(*flat)


def parse_matrix(tokens: Sequence[str]) -> UniMatrix:
    """Parse four row-major integer tokens, e.g. ``["171", "100", "-289", "-169"]``."""
    try:
        entries = [int(token) for token in tokens]
    except ValueError as e:
        raise InvalidMatrix(f"Matrix entries must be integers: {list(tokens)}") from e
    return convert_to_matrix(entries)

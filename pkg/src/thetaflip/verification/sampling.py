"""
Seeded samples of SL(2,Z) matrices as words in S and T, and of rationals.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterator

from thetaflip.conjugacy import classify, minimize
from thetaflip.constants import DEFAULT_WORD_LENGTH
from thetaflip.enums import OperatorKind
from thetaflip.lattice import IDENTITY, JORDAN_T, ROTATION_S
from thetaflip.models import ExtRational, UniMatrix

GENERATORS = (ROTATION_S, ROTATION_S.inverse(), JORDAN_T, JORDAN_T.inverse())


def random_word(rng: random.Random, max_length: int = DEFAULT_WORD_LENGTH) -> UniMatrix:
    """A product of 1 .. max_length random letters S^{±1}, T^{±1}."""
    result = IDENTITY
    for _ in range(rng.randint(1, max_length)):
        result = result @ rng.choice(GENERATORS)
    return result


def random_matrices(
    seed: int, count: int, max_length: int = DEFAULT_WORD_LENGTH
) -> Iterator[UniMatrix]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_word(rng, max_length)


def random_non_periodic(
    seed: int, count: int, max_length: int = DEFAULT_WORD_LENGTH
) -> Iterator[UniMatrix]:
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        matrix = random_word(rng, max_length)
        if not classify(matrix).is_periodic:
            produced += 1
            yield matrix


def random_minimal_hyperbolic(
    seed: int, count: int, max_length: int = DEFAULT_WORD_LENGTH
) -> Iterator[UniMatrix]:
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        matrix = random_word(rng, max_length)
        if classify(matrix).kind is OperatorKind.HYPERBOLIC:
            produced += 1
            yield minimize(matrix).minimal


def random_rational(rng: random.Random, max_denominator: int) -> ExtRational:
    """∞ with probability 1/16, else a rational p/q with 1 ≤ q ≤ max_denominator."""
    if rng.randrange(16) == 0:
        return ExtRational.infinity()
    den = rng.randint(1, max_denominator)
    num = rng.randint(-3 * den, 3 * den)
    return ExtRational.from_fraction(Fraction(num, den))


def farey_sequence(max_denominator: int) -> list[ExtRational]:
    """Reduced rationals in [0, 1] with denominator at most ``max_denominator``."""
    points = {
        Fraction(num, den)
        for den in range(1, max_denominator + 1)
        for num in range(0, den + 1)
    }
    return [ExtRational.from_fraction(point) for point in sorted(points)]

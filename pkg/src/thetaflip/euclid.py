"""
Euclid complexity E(p, q): the number of subtractions the subtractive Euclid
algorithm needs to turn (p, q) into (0, 1), i.e. the sum of the partial
quotients of p/q.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from thetaflip.constants import SUBTRACTIVE_ORACLE_CUTOFF
from thetaflip.exceptions import InvalidRange, NonPositive, NotCoprime
from thetaflip.lattice import IDENTITY, ROW_R1, ROW_R2
from thetaflip.models import UniMatrix

logger = logging.getLogger(__name__)


def _check_pair(p: int, q: int) -> None:
    if p < 0 or q < 0:
        raise NonPositive(f"Expected nonnegative integers, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) = {gcd(p, q)}")


@dataclass(frozen=True)
class ContinuedFraction:
    """Regular continued fraction [n1; n2, ..., nk] with nk ≥ 2 when k ≥ 2."""

    terms: tuple[int, ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("A continued fraction needs at least one term")
        if any(term < 1 for term in self.terms):
            raise ValueError(f"Invalid continued fraction terms: {self.terms}")
        if len(self.terms) >= 2 and self.terms[-1] < 2:
            raise ValueError(f"Last term must be at least 2: {self.terms}")

    @property
    def value(self) -> Fraction:
        result = Fraction(self.terms[-1])
        for term in reversed(self.terms[:-1]):
            result = term + 1 / result
        return result

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        return "[" + ",".join(str(term) for term in self.terms) + "]"


def continued_fraction(p: int, q: int) -> ContinuedFraction:
    """
    Continued fraction of p/q for coprime p ≥ q ≥ 1.

    >>> str(continued_fraction(289, 171))
    '[1,1,2,4,2,2,2]'
    """
    if p < 1 or q < 1:
        raise NonPositive(f"Expected positive integers, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) = {gcd(p, q)}")
    if q > p:
        raise InvalidRange(f"Expected p ≥ q, got ({p}, {q})")
    terms = []
    while q:
        quotient, remainder = divmod(p, q)
        terms.append(quotient)
        p, q = q, remainder
    if len(terms) >= 2 and terms[-1] == 1:
        terms[-2:] = [terms[-2] + 1]
    return ContinuedFraction(tuple(terms))


def euclid_complexity(p: int, q: int) -> int:
    """
    E(p, q) on unordered coprime pairs; E(1, 0) = E(0, 1) = 0.
    """
    _check_pair(p, q)
    total = 0
    larger, smaller = max(p, q), min(p, q)
    while smaller:
        quotient, remainder = divmod(larger, smaller)
        total += quotient
        larger, smaller = smaller, remainder
    return total


def euclid_subtractive_oracle(
    p: int, q: int, cutoff: int = SUBTRACTIVE_ORACLE_CUTOFF
) -> int:
    """Count subtractions literally, one at a time, until the pair is {0, 1}."""
    _check_pair(p, q)
    if max(p, q) > cutoff:
        raise InvalidRange(
            f"max({p}, {q}) exceeds the subtractive oracle cutoff {cutoff}"
        )
    count = 0
    while {p, q} != {0, 1}:
        if p >= q:
            p -= q
        else:
            q -= p
        count += 1
    return count


@dataclass(frozen=True)
class EuclidWord:
    """
    A word R_{g1}^{e1} R_{g2}^{e2} ... in the row transformations
    R1 = [[1,1],[0,1]] and R2 = [[1,0],[1,1]], stored as (generator, exponent)
    pairs with adjacent generators distinct.
    """

    factors: tuple[tuple[int, int], ...]

    @property
    def product(self) -> UniMatrix:
        result = IDENTITY
        for generator, exponent in self.factors:
            result = result @ ((ROW_R1 if generator == 1 else ROW_R2) ** exponent)
        return result

    @property
    def transposed(self) -> UniMatrix:
        """The product of the transposed word, read right to left."""
        return self.product.transpose()

    @property
    def exponent_sum(self) -> int:
        return sum(exponent for _, exponent in self.factors)

    def __str__(self) -> str:
        return " ".join(
            f"R{generator}" if exponent == 1 else f"R{generator}^{exponent}"
            for generator, exponent in self.factors
        )


def euclid_word(p: int, q: int) -> EuclidWord:
    """
    The word R1^{n1} R2^{n2} R1^{n3} ... R_ε^{nk−1} R2 evaluating to
    [[p, r], [q, s]] with det 1 and 0 < r ≤ p, 0 < s ≤ q.
    """
    if p <= q or q < 1:
        raise InvalidRange(f"Expected p > q ≥ 1, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) = {gcd(p, q)}")
    terms = continued_fraction(p, q).terms
    raw = [(1 if index % 2 == 0 else 2, term) for index, term in enumerate(terms)]
    generator, last = raw[-1]
    raw[-1] = (generator, last - 1)
    raw.append((2, 1))
    factors: list[tuple[int, int]] = []
    for generator, exponent in raw:
        if exponent == 0:
            continue
        if factors and factors[-1][0] == generator:
            factors[-1] = (generator, factors[-1][1] + exponent)
        else:
            factors.append((generator, exponent))
    return EuclidWord(tuple(factors))


@dataclass(frozen=True)
class ReciprocityViolation:
    p: int
    q: int
    r: int
    complexity_q: int
    complexity_r: int


def reciprocal_symmetry_scan(p_max: int) -> list[ReciprocityViolation]:
    """
    Check E(p, q) = E(p, r) whenever 0 < q, r < p and qr ≡ ±1 (mod p), for all
    3 ≤ p ≤ p_max. The partner r produced by the Euclid word of (p, q) is
    checked as well. Returns every violation found.
    """
    if p_max < 3:
        raise InvalidRange(f"p_max must be at least 3, got {p_max}")
    violations = []
    for p in range(3, p_max + 1):
        complexities = {
            q: euclid_complexity(p, q) for q in range(1, p) if gcd(p, q) == 1
        }
        for q, complexity_q in complexities.items():
            inverse = pow(q, -1, p)
            partners = {inverse, p - inverse}
            # the Euclid word [[p, r], [q, s]] has qr ≡ -1 (mod p)
            word_partner = euclid_word(p, q).product.b
            if word_partner != p - inverse:
                violations.append(
                    ReciprocityViolation(
                        p,
                        q,
                        word_partner,
                        complexity_q,
                        complexities.get(word_partner, -1),
                    )
                )
            for r in partners:
                if complexities[r] != complexity_q:
                    violations.append(
                        ReciprocityViolation(p, q, r, complexity_q, complexities[r])
                    )
        logger.debug("reciprocity scan finished p=%d", p)
    return violations

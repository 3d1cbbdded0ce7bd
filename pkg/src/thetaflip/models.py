from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, overload

from thetaflip.exceptions import InvalidRational, NotUnimodular


@dataclass(frozen=True, order=True)
class LatticeVector:
    """
    An exact point of Z².

    Ordering is lexicographic on (x, y). A vector is *positive* (sign-normalized)
    when x > 0, or x = 0 and y > 0; positivity is compatible with addition.
    """

    x: int
    y: int

    def __add__(self, other: LatticeVector) -> LatticeVector:
        return LatticeVector(self.x + other.x, self.y + other.y)

    def __sub__(self, other: LatticeVector) -> LatticeVector:
        return LatticeVector(self.x - other.x, self.y - other.y)

    def __neg__(self) -> LatticeVector:
        return LatticeVector(-self.x, -self.y)

    def __mul__(self, scalar: int) -> LatticeVector:
        return LatticeVector(scalar * self.x, scalar * self.y)

    __rmul__ = __mul__

    def __iter__(self) -> Iterator[int]:
        yield self.x
        yield self.y

    def __str__(self) -> str:
        return f"({self.x},{self.y})"

    @property
    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    @property
    def is_positive(self) -> bool:
        return self.x > 0 or (self.x == 0 and self.y > 0)

    @property
    def is_primitive(self) -> bool:
        return gcd(self.x, self.y) == 1

    def normalized(self) -> LatticeVector:
        """Return whichever of ±self is positive. The zero vector is returned as is."""
        if self.is_zero or self.is_positive:
            return self
        return -self


@dataclass(frozen=True, order=True)
class UniMatrix:
    """
    A unimodular 2x2 integer matrix [[a, b], [c, d]] with det = ±1.

    Supports ``A @ B``, ``A @ v``, ``-A``, ``A ** n`` (negative n included) and
    ``A.inverse()``. Ordering is lexicographic on (a, b, c, d).
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c not in (1, -1):
            raise NotUnimodular(
                f"Matrix {self} has determinant {self.a * self.d - self.b * self.c}"
            )

    @classmethod
    def identity(cls) -> UniMatrix:
        return cls(1, 0, 0, 1)

    @classmethod
    def from_rows(cls, rows: tuple[tuple[int, int], tuple[int, int]]) -> UniMatrix:
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def from_columns(cls, first: LatticeVector, second: LatticeVector) -> UniMatrix:
        return cls(first.x, second.x, first.y, second.y)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    @property
    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a, self.b), (self.c, self.d)

    @property
    def columns(self) -> tuple[LatticeVector, LatticeVector]:
        return LatticeVector(self.a, self.c), LatticeVector(self.b, self.d)

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return self.a, self.b, self.c, self.d

    @property
    def is_identity(self) -> bool:
        return self.entries == (1, 0, 0, 1)

    @property
    def is_scalar(self) -> bool:
        """True for ±I."""
        return self.b == 0 and self.c == 0 and self.a == self.d

    @overload
    def __matmul__(self, other: UniMatrix) -> UniMatrix: ...

    @overload
    def __matmul__(self, other: LatticeVector) -> LatticeVector: ...

    def __matmul__(self, other):
        if isinstance(other, LatticeVector):
            return LatticeVector(
                self.a * other.x + self.b * other.y,
                self.c * other.x + self.d * other.y,
            )
        if isinstance(other, UniMatrix):
            return UniMatrix(
                self.a * other.a + self.b * other.c,
                self.a * other.b + self.b * other.d,
                self.c * other.a + self.d * other.c,
                self.c * other.b + self.d * other.d,
            )
        return NotImplemented

    def __neg__(self) -> UniMatrix:
        return UniMatrix(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> UniMatrix:
        det = self.det
        return UniMatrix(det * self.d, -det * self.b, -det * self.c, det * self.a)

    def transpose(self) -> UniMatrix:
        return UniMatrix(self.a, self.c, self.b, self.d)

    def conjugate_by(self, conjugator: UniMatrix) -> UniMatrix:
        """Return conjugator⁻¹ · self · conjugator."""
        return conjugator.inverse() @ self @ conjugator

    def __pow__(self, exponent: int) -> UniMatrix:
        base = self if exponent >= 0 else self.inverse()
        remaining = abs(exponent)
        result = UniMatrix.identity()
        while remaining:
            if remaining & 1:
                result = result @ base
            base = base @ base
            remaining >>= 1
        return result

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


@dataclass(frozen=True)
class ExtRational:
    """
    A reduced rational number or ∞, stored as num/den with den ≥ 0.

    ∞ has the single representation 1/0. Any input pair is reduced at
    construction, so equality is structural.
    """

    num: int
    den: int = 1

    def __post_init__(self):
        num, den = self.num, self.den
        if num == 0 and den == 0:
            raise InvalidRational("0/0 is not a point of the extended rationals")
        if den < 0:
            num, den = -num, -den
        if den == 0:
            num = 1
        divisor = gcd(num, den)
        object.__setattr__(self, "num", num // divisor)
        object.__setattr__(self, "den", den // divisor)

    @classmethod
    def infinity(cls) -> ExtRational:
        return cls(1, 0)

    @classmethod
    def from_vector(cls, vector: LatticeVector) -> ExtRational:
        return cls(vector.x, vector.y)

    @classmethod
    def from_fraction(cls, value: Fraction | int) -> ExtRational:
        value = Fraction(value)
        return cls(value.numerator, value.denominator)

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    @property
    def vector(self) -> LatticeVector:
        """The primitive lattice vector (num, den) representing this point."""
        return LatticeVector(self.num, self.den)

    def to_fraction(self) -> Fraction:
        if self.is_infinite:
            raise InvalidRational("∞ has no finite value")
        return Fraction(self.num, self.den)

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

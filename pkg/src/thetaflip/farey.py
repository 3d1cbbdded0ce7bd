"""
The Farey tessellation as combinatorics.

An ideal triangle (m/n, p/q, r/s) is the admissible hexagon with vertex pairs
±(m,n), ±(p,q), ±(r,s); mediant reflections are flips and Möbius maps are the
linear action. Points of the hyperbolic plane are never represented: a point
inside a triangle is the triangle itself.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from thetaflip.decorators import requires_sl2
from thetaflip.exceptions import (
    EqualEndpoints,
    NotAdmissible,
    SideNotInTriangle,
    VertexOfTriangle,
)
from thetaflip.flip_tree import distance, geodesic
from thetaflip.hexagon import Hexagon, apply_matrix, hexagon_from_pair
from thetaflip.lattice import completing_matrix, cross_det
from thetaflip.models import ExtRational, UniMatrix
from thetaflip.utilities import convert_to_rational

logger = logging.getLogger(__name__)

RationalLike = ExtRational | Fraction | int | str


def _sort_key(point: ExtRational) -> tuple[int, Fraction]:
    return (1, Fraction(0)) if point.is_infinite else (0, point.to_fraction())


@dataclass(frozen=True)
class FareyTriangle:
    """An ideal triangle of the Farey tessellation; vertices sorted with ∞ last."""

    vertices: tuple[ExtRational, ExtRational, ExtRational]

    def __post_init__(self):
        ordered = tuple(sorted(self.vertices, key=_sort_key))
        if len(set(ordered)) != 3:
            raise NotAdmissible(f"Triangle vertices must be distinct: {self}")
        for index, first in enumerate(ordered):
            for second in ordered[index + 1 :]:
                if abs(cross_det(first.vector, second.vector)) != 1:
                    raise NotAdmissible(
                        f"{first} and {second} are not Farey neighbours"
                    )
        object.__setattr__(self, "vertices", ordered)

    @classmethod
    def of(cls, *points: RationalLike) -> FareyTriangle:
        first, second, third = (convert_to_rational(point) for point in points)
        return cls((first, second, third))

    @classmethod
    def base(cls) -> FareyTriangle:
        """Δ₀ = (∞, −1, 0), the triangle of the standard hexagon."""
        return cls.of("inf", -1, 0)

    def __contains__(self, point: ExtRational) -> bool:
        return point in self.vertices

    def __str__(self) -> str:
        return "(" + ",".join(str(vertex) for vertex in self.vertices) + ")"


def is_farey_line(first: RationalLike, second: RationalLike) -> bool:
    first, second = convert_to_rational(first), convert_to_rational(second)
    if first == second:
        raise EqualEndpoints(f"Both endpoints are {first}")
    return abs(cross_det(first.vector, second.vector)) == 1


def triangle_to_hexagon(triangle: FareyTriangle) -> Hexagon:
    return Hexagon.from_vectors(*(vertex.vector for vertex in triangle.vertices))


def hexagon_to_triangle(hexagon: Hexagon) -> FareyTriangle:
    first, second, third = (ExtRational.from_vector(pair) for pair in hexagon.pairs)
    return FareyTriangle((first, second, third))


def mediant_reflect(
    triangle: FareyTriangle, side: Iterable[RationalLike]
) -> FareyTriangle:
    """Reflect across ``side``: the opposite vertex is replaced by the other mediant."""
    endpoints = {convert_to_rational(point) for point in side}
    if len(endpoints) != 2 or not endpoints <= set(triangle.vertices):
        names = sorted(map(str, endpoints))
        raise SideNotInTriangle(f"{names} is not a side of {triangle}")
    (opposite,) = set(triangle.vertices) - endpoints
    return hexagon_to_triangle(triangle_to_hexagon(triangle).flip(opposite.vector))


@requires_sl2
def moebius_apply(matrix: UniMatrix, point: RationalLike) -> ExtRational:
    """z ↦ (az + b)/(cz + d) on the extended rationals."""
    return ExtRational.from_vector(matrix @ convert_to_rational(point).vector)


def _to_infinity(point: ExtRational) -> UniMatrix:
    """An SL(2,Z) matrix sending ``point`` to ∞."""
    return completing_matrix(point.vector).inverse()


def separating_lines_oracle(first: RationalLike, second: RationalLike) -> int:
    """
    Count Farey lines whose endpoints strictly interleave with {first, second}.

    After moving ``first`` to ∞ these are the Stern–Brocot intervals strictly
    containing the image of ``second``; they form one nested chain.
    """
    first, second = convert_to_rational(first), convert_to_rational(second)
    if first == second:
        raise EqualEndpoints(f"Both endpoints are {first}")
    target = ExtRational.from_vector(_to_infinity(first) @ second.vector).to_fraction()
    if target.denominator == 1:
        return 0
    low = Fraction(target.numerator // target.denominator)
    high = low + 1
    count = 1
    while True:
        mediant = Fraction(
            low.numerator + high.numerator, low.denominator + high.denominator
        )
        if mediant == target:
            return count
        if target < mediant:
            high = mediant
        else:
            low = mediant
        count += 1


def fan_representative(point: ExtRational) -> Hexagon:
    """Some hexagon whose triangle has ``point`` as a vertex."""
    basis = completing_matrix(point.vector)
    first, second = basis.columns
    return hexagon_from_pair(first, second)


def dc_rationals(first: RationalLike, second: RationalLike) -> int:
    """
    Flip distance between the fans of two absolute points; equals the number
    of Farey lines separating them.
    """
    first, second = convert_to_rational(first), convert_to_rational(second)
    if first == second:
        raise EqualEndpoints(f"Both endpoints are {first}")
    path = list(geodesic(fan_representative(first), fan_representative(second)))
    leave = 0
    while leave + 1 < len(path) and path[leave + 1].has_vertex(first.vector):
        leave += 1
    enter = len(path) - 1
    while enter > 0 and path[enter - 1].has_vertex(second.vector):
        enter -= 1
    return max(0, enter - leave)


def dc_triangle_point(triangle: FareyTriangle, point: RationalLike) -> int:
    """Flip distance from a triangle to the nearest triangle of Fan(point)."""
    point = convert_to_rational(point)
    if point in triangle:
        raise VertexOfTriangle(f"{point} is a vertex of {triangle}")
    path = list(geodesic(triangle_to_hexagon(triangle), fan_representative(point)))
    enter = len(path) - 1
    while enter > 0 and path[enter - 1].has_vertex(point.vector):
        enter -= 1
    return enter


@requires_sl2
def dc_operator_displacement(matrix: UniMatrix, triangle: FareyTriangle) -> int:
    """d(t, A·t) in Γ; its minimum over all triangles is c(𝒜)."""
    hexagon = triangle_to_hexagon(triangle)
    return distance(hexagon, apply_matrix(matrix, hexagon))


def rational_pair_key(
    first: RationalLike, second: RationalLike, reflections: bool = False
) -> tuple[int, int]:
    """
    Complete SL(2,Z) invariant of an ordered pair of distinct absolute points:
    move ``first`` to ∞; the image u/v of ``second`` is then defined up to
    integer translation, so (v, u mod v) classifies the pair.

    With ``reflections`` the key classifies pairs up to GL(2,Z), which adds
    z ↦ −z and identifies u with −u mod v.
    """
    first, second = convert_to_rational(first), convert_to_rational(second)
    if first == second:
        raise EqualEndpoints(f"Both endpoints are {first}")
    image = ExtRational.from_vector(_to_infinity(first) @ second.vector)
    key = image.den, image.num % image.den
    if reflections:
        return min(key, (image.den, -image.num % image.den))
    return key


def rational_pairs_equivalent(
    first_pair: tuple[RationalLike, RationalLike],
    second_pair: tuple[RationalLike, RationalLike],
    ordered: bool = False,
    reflections: bool = False,
) -> bool:
    def key(pair: tuple[RationalLike, RationalLike]) -> tuple[int, int]:
        forward = rational_pair_key(pair[0], pair[1], reflections)
        if ordered:
            return forward
        return min(forward, rational_pair_key(pair[1], pair[0], reflections))

    return key(first_pair) == key(second_pair)

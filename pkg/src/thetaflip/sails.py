"""
Exact Klein sails of a hyperbolic operator.

The two eigenlines of a hyperbolic matrix cut the plane into four sectors.
The sail of a sector is the origin-facing part of the boundary of the convex
hull of the lattice points strictly inside it. Everything here is computed in
integers inside a square box |x|, |y| ≤ bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from thetaflip.exceptions import NotHyperbolic
from thetaflip.lattice import cross_det, floor_quadratic
from thetaflip.models import LatticeVector, UniMatrix


@dataclass(frozen=True)
class Eigenlines:
    """
    Slopes (rational + sign·√discriminant) / denominator of the two eigenlines,
    ``low_sign`` giving the smaller slope.
    """

    rational: int
    discriminant: int
    denominator: int
    low_sign: int

    @classmethod
    def of(cls, matrix: UniMatrix) -> Eigenlines:
        discriminant = matrix.trace**2 - 4
        if discriminant <= 0:
            raise NotHyperbolic(f"{matrix} has |trace| ≤ 2")
        # b ≠ 0 for hyperbolic matrices
        low_sign = -1 if matrix.b > 0 else 1
        return cls(matrix.d - matrix.a, discriminant, 2 * matrix.b, low_sign)

    def floor_on_column(self, x: int, sign: int) -> int:
        """floor(slope · x) for the eigenline of the given radical sign."""
        return floor_quadratic(
            self.rational * x, sign * x, self.discriminant, self.denominator
        )

    def floor_low(self, x: int) -> int:
        return self.floor_on_column(x, self.low_sign)

    def floor_high(self, x: int) -> int:
        return self.floor_on_column(x, -self.low_sign)


def _convex_hull(points: list[LatticeVector]) -> list[LatticeVector]:
    """Counterclockwise hull vertices without collinear points (monotone chain)."""
    ordered = sorted(set(points))
    if len(ordered) <= 2:
        return ordered

    def half(sequence: list[LatticeVector]) -> list[LatticeVector]:
        chain: list[LatticeVector] = []
        for point in sequence:
            while (
                len(chain) >= 2
                and cross_det(chain[-1] - chain[-2], point - chain[-2]) <= 0
            ):
                chain.pop()
            chain.append(point)
        return chain

    lower = half(ordered)
    upper = half(ordered[::-1])
    return lower[:-1] + upper[:-1]


def _origin_facing_edges(
    hull: list[LatticeVector],
) -> list[tuple[LatticeVector, LatticeVector]]:
    origin = LatticeVector(0, 0)
    edges = zip(hull, hull[1:] + hull[:1])
    return [
        (start, end)
        for start, end in edges
        if cross_det(end - start, origin - start) < 0
    ]


def _points_on_segment(start: LatticeVector, end: LatticeVector) -> list[LatticeVector]:
    delta = end - start
    steps = gcd(delta.x, delta.y)
    unit = LatticeVector(delta.x // steps, delta.y // steps)
    return [start + unit * index for index in range(steps + 1)]


@dataclass(frozen=True)
class Sails:
    bound: int
    points: frozenset[LatticeVector]
    corners: frozenset[LatticeVector]

    def contains(self, vector: LatticeVector) -> bool:
        return vector in self.points


def _sector_sail(columns: list[LatticeVector], bound: int) -> tuple[set, set]:
    inside = [point for point in columns if abs(point.y) <= bound]
    hull = _convex_hull(inside)
    points: set[LatticeVector] = set()
    corners: set[LatticeVector] = set()
    for start, end in _origin_facing_edges(hull):
        corners.update((start, end))
        points.update(_points_on_segment(start, end))
    return points, corners


def klein_sails(matrix: UniMatrix, bound: int) -> Sails:
    """Sail lattice points and corners of all four sectors inside the box."""
    lines = Eigenlines.of(matrix)
    # the sector between the eigenlines on the side x > 0
    between = []
    for x in range(1, bound + 1):
        lowest, highest = lines.floor_low(x) + 1, lines.floor_high(x)
        if lowest <= highest:
            between.extend((LatticeVector(x, lowest), LatticeVector(x, highest)))
    # the sector above both eigenlines, containing (0, 1)
    above = [LatticeVector(0, 1)]
    for x in range(1, bound + 1):
        above.append(LatticeVector(x, lines.floor_high(x) + 1))
        above.append(LatticeVector(-x, lines.floor_low(-x) + 1))
    points: set[LatticeVector] = set()
    corners: set[LatticeVector] = set()
    for sector in (between, above):
        sector_points, sector_corners = _sector_sail(sector, bound)
        for point in sector_points:
            points.update((point, -point))
        for corner in sector_corners:
            corners.update((corner, -corner))
    return Sails(bound, frozenset(points), frozenset(corners))

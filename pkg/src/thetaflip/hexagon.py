"""
Admissible hexagons of Z².

An admissible hexagon has vertices ±u, ±v, ±w with |det(u, w)| = 1 and
v = u + w. Its three vertex pairs are stored sign-normalized; since
positivity is compatible with addition the middle vertex ``v`` is always the
largest of the three, and the remaining two are kept as ``u < w``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator

from thetaflip.exceptions import NotAdmissible, NotUnimodularPair
from thetaflip.lattice import cross_det, q_norm
from thetaflip.models import LatticeVector, UniMatrix

logger = logging.getLogger(__name__)

STANDARD_LEADING_VERTEX = LatticeVector(1, 0)


@dataclass(frozen=True, order=True)
class Hexagon:
    """
    Canonical admissible hexagon: ``v = u + w``, ``u < w < v``, all positive.

    Build instances with :meth:`from_vectors`, which accepts the three vertex
    pairs in any order and with any signs.
    """

    u: LatticeVector
    w: LatticeVector
    v: LatticeVector

    def __post_init__(self):
        if not all(vector.is_positive for vector in (self.u, self.v, self.w)):
            raise NotAdmissible(f"Vertex pairs of {self} are not sign-normalized")
        if not self.u < self.w:
            raise NotAdmissible(f"Vertex pairs of {self} are not ordered")
        if self.u + self.w != self.v:
            raise NotAdmissible(f"Middle vertex of {self} is not the sum of the others")
        if abs(cross_det(self.u, self.w)) != 1:
            raise NotAdmissible(f"Vertex triangle of {self} does not have unit area")

    @classmethod
    def from_vectors(
        cls, first: LatticeVector, second: LatticeVector, third: LatticeVector
    ) -> Hexagon:
        if any(vector.is_zero for vector in (first, second, third)):
            raise NotAdmissible("Hexagon vertices must be nonzero")
        u, w, v = sorted(vector.normalized() for vector in (first, second, third))
        return cls(u, w, v)

    @property
    def pairs(self) -> tuple[LatticeVector, LatticeVector, LatticeVector]:
        """The three sign-normalized vertex pairs in lexicographic order."""
        return self.u, self.w, self.v

    def vertices(self) -> list[LatticeVector]:
        """The six vertices in counterclockwise cyclic order."""
        if cross_det(self.u, self.w) > 0:
            cycle = [self.u, self.v, self.w]
        else:
            cycle = [self.w, self.v, self.u]
        return cycle + [-vertex for vertex in cycle]

    def has_vertex(self, vector: LatticeVector) -> bool:
        return vector.normalized() in self.pairs

    def others(self, vertex: LatticeVector) -> tuple[LatticeVector, LatticeVector]:
        """The two vertex pairs other than ``±vertex``."""
        vertex = vertex.normalized()
        if vertex not in self.pairs:
            raise NotAdmissible(f"{vertex} is not a vertex of {self}")
        first, second = (pair for pair in self.pairs if pair != vertex)
        return first, second

    def flip(self, vertex: LatticeVector) -> Hexagon:
        """
        Replace the pair ±vertex = ±(σ ± μ) by the other combination ±(σ ∓ μ).
        """
        sigma, mu = self.others(vertex)
        vertex = vertex.normalized()
        replacement = (sigma + mu).normalized()
        if replacement == vertex:
            replacement = (sigma - mu).normalized()
        return Hexagon.from_vectors(sigma, mu, replacement)

    def replaced_vertex(self, neighbour: Hexagon) -> LatticeVector:
        """The vertex pair of ``self`` that a single flip to ``neighbour`` removes."""
        missing = [pair for pair in self.pairs if not neighbour.has_vertex(pair)]
        if len(missing) != 1:
            raise NotAdmissible(f"{self} and {neighbour} are not flip neighbours")
        return missing[0]

    def __iter__(self) -> Iterator[LatticeVector]:
        return iter(self.pairs)

    def __str__(self) -> str:
        return "[" + ",".join(str(pair) for pair in self.pairs) + "]"


def standard_hexagon() -> Hexagon:
    """W₀, with vertex pairs ±(1,0), ±(0,1), ±(1,−1)."""
    return Hexagon.from_vectors(
        LatticeVector(1, 0), LatticeVector(0, 1), LatticeVector(1, -1)
    )


def hexagon_from_pair(first: LatticeVector, second: LatticeVector) -> Hexagon:
    """The hexagon with vertex pairs ±X, ±(X+Z), ±Z for a unimodular pair (X, Z)."""
    if abs(cross_det(first, second)) != 1:
        raise NotUnimodularPair(
            f"det({first}, {second}) = {cross_det(first, second)}, expected ±1"
        )
    return Hexagon.from_vectors(first, first + second, second)


def is_admissible(candidate: Iterable[LatticeVector | tuple[int, int]]) -> bool:
    """True iff the three given vertex pairs form an admissible hexagon."""
    try:
        vectors = [
            vector if isinstance(vector, LatticeVector) else LatticeVector(*vector)
            for vector in candidate
        ]
        if len(vectors) != 3:
            return False
        Hexagon.from_vectors(*vectors)
    except (NotAdmissible, TypeError, ValueError):
        return False
    return True


def leading_vertex(hexagon: Hexagon) -> LatticeVector:
    """
    The vertex pair of largest q_norm; (1,0) for the standard hexagon.
    """
    if hexagon == standard_hexagon():
        return STANDARD_LEADING_VERTEX
    return max(hexagon.pairs, key=q_norm)


def flips(hexagon: Hexagon) -> tuple[Hexagon, Hexagon, Hexagon]:
    """The three flip neighbours, in the order of the replaced pairs (u, w, v)."""
    first, second, third = (hexagon.flip(pair) for pair in hexagon.pairs)
    return first, second, third


def apply_matrix(matrix: UniMatrix, hexagon: Hexagon) -> Hexagon:
    return Hexagon.from_vectors(*(matrix @ pair for pair in hexagon.pairs))


def adjacent_bases(hexagon: Hexagon) -> list[UniMatrix]:
    """
    All B in SL(2,Z) with B·W₀ = hexagon, i.e. the columns (X, Y) are
    vertices with det(X, Y) = 1 and X − Y a vertex. There are always six.
    """
    vertices = hexagon.vertices()
    bases = [
        UniMatrix.from_columns(first, second)
        for first in vertices
        for second in vertices
        if cross_det(first, second) == 1 and hexagon.has_vertex(first - second)
    ]
    return sorted(bases)


def standard_basis(hexagon: Hexagon) -> UniMatrix:
    """One fixed B in SL(2,Z) with B·W₀ = hexagon."""
    if cross_det(hexagon.u, hexagon.w) == 1:
        return UniMatrix.from_columns(hexagon.v, hexagon.w)
    return UniMatrix.from_columns(hexagon.u, -hexagon.w)


def standard_stabilizer() -> list[UniMatrix]:
    """The six matrices fixing W₀: ±I, ±R, ±R² for the order-6 rotation R."""
    return adjacent_bases(standard_hexagon())


def lattice_points_in(hexagon: Hexagon) -> list[LatticeVector]:
    """
    All lattice points of the closed hexagon, by exhaustive scan of its
    bounding box. Admissible hexagons contain only the origin and their vertices.
    """
    vertices = hexagon.vertices()
    x_bound = max(abs(vertex.x) for vertex in vertices)
    y_bound = max(abs(vertex.y) for vertex in vertices)
    edges = list(zip(vertices, vertices[1:] + vertices[:1]))
    points = []
    for x in range(-x_bound, x_bound + 1):
        for y in range(-y_bound, y_bound + 1):
            point = LatticeVector(x, y)
            if all(cross_det(end - start, point - start) >= 0 for start, end in edges):
                points.append(point)
    return points

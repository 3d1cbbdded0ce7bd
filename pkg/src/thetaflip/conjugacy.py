"""
Operator complexity c(𝒜): the least c(B⁻¹AB) over the conjugacy class of A.

A matrix is minimal when W₀ lies on the mainstream of its operator, the set of
hexagons W minimizing d(W, 𝒜W). Minimization moves W₀ onto the mainstream by
a single change of basis.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd, isqrt

from thetaflip.decorators import requires_sl2
from thetaflip.enums import OperatorKind
from thetaflip.exceptions import (
    InvalidRange,
    NotElliptic,
    NotHyperbolic,
    OracleMismatch,
    PeriodicOperator,
)
from thetaflip.flip_tree import geodesic, matrix_complexity
from thetaflip.hexagon import (
    Hexagon,
    adjacent_bases,
    apply_matrix,
    leading_vertex,
    standard_basis,
    standard_hexagon,
)
from thetaflip.lattice import IDENTITY, q_norm
from thetaflip.models import LatticeVector, UniMatrix
from thetaflip.sails import klein_sails

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OperatorClass:
    """
    Trace classification of an SL(2,Z) operator.

    ``period`` is set for elliptic operators (1 for I, 2 for −I, else 3, 4
    or 6); ``sign`` and ``n`` for parabolic ones, which are conjugate to
    sign·[[1, n], [0, 1]].
    """

    kind: OperatorKind
    period: int | None = None
    sign: int | None = None
    n: int | None = None

    @property
    def is_periodic(self) -> bool:
        return self.kind is OperatorKind.ELLIPTIC

    def __str__(self) -> str:
        if self.kind is OperatorKind.ELLIPTIC:
            return f"elliptic(period {self.period})"
        if self.kind is OperatorKind.PARABOLIC:
            return f"parabolic({'+' if self.sign == 1 else '-'}, n={self.n})"
        return "hyperbolic"


@dataclass(frozen=True)
class MinimizationResult:
    conjugator: UniMatrix
    minimal: UniMatrix
    operator_complexity: int

    @property
    def minimal_hexagon(self) -> Hexagon:
        """conjugator · W₀, a hexagon on the mainstream of the operator."""
        return apply_matrix(self.conjugator, standard_hexagon())


@requires_sl2
def classify(matrix: UniMatrix) -> OperatorClass:
    trace = matrix.trace
    if matrix.is_scalar:
        return OperatorClass(OperatorKind.ELLIPTIC, period=1 if matrix.a == 1 else 2)
    kind = OperatorKind.from_trace(trace)
    if kind is OperatorKind.ELLIPTIC:
        # trace 0: A² = −I; trace 1: A³ = −I; trace −1: A³ = I
        return OperatorClass(kind, period={0: 4, 1: 6, -1: 3}[trace])
    if kind is OperatorKind.PARABOLIC:
        sign = 1 if trace > 0 else -1
        # sign·A − I = n·v·(−v_y, v_x) for a primitive v
        x, y, z = sign * matrix.a - 1, sign * matrix.b, sign * matrix.c
        size = gcd(gcd(x, y), z)
        n = size if (y > 0 or (y == 0 and z < 0)) else -size
        return OperatorClass(kind, sign=sign, n=n)
    return OperatorClass(kind)


@requires_sl2
def is_minimal(matrix: UniMatrix) -> bool:
    """c(A) ≤ 1, or the geodesic W₀ → AW₀ does not backtrack through A·W₁."""
    complexity = matrix_complexity(matrix)
    if complexity <= 1:
        return True
    path = geodesic(standard_hexagon(), apply_matrix(matrix, standard_hexagon()))
    return path[complexity - 1] != apply_matrix(matrix, path[1])


def _last_common(first: list[Hexagon], second: list[Hexagon]) -> Hexagon:
    common = first[0]
    for left, right in zip(first, second):
        if left != right:
            break
        common = left
    return common


@requires_sl2
def minimize(matrix: UniMatrix) -> MinimizationResult:
    """
    Conjugate ``matrix`` to a minimal matrix.

    With W = A·W₀, the last common hexagon V of the geodesics W → W₀ and
    W → A·W lies on the mainstream; the basis taking W₀ to V conjugates A to
    a minimal matrix. Minimal input is returned unchanged with conjugator I.
    """
    standard = standard_hexagon()
    conjugator, current = IDENTITY, matrix
    if not is_minimal(current):
        image = apply_matrix(current, standard)
        following = apply_matrix(current, image)
        towards_standard = list(geodesic(image, standard))
        if following == standard:
            # A² = −I reverses the geodesic W₀ → AW₀; its middle edge is minimal
            pivot = towards_standard[(len(towards_standard) - 1) // 2]
        else:
            towards_next = list(geodesic(image, following))
            pivot = _last_common(towards_standard, towards_next)
        basis = standard_basis(pivot)
        conjugator = conjugator @ basis
        current = current.conjugate_by(basis)
        logger.debug("minimize %s: pivot %s, conjugator %s", matrix, pivot, basis)
        if not is_minimal(current):
            raise OracleMismatch(f"Conjugating {matrix} by {conjugator} is not minimal")
    return MinimizationResult(conjugator, current, matrix_complexity(current))


@requires_sl2
def operator_complexity(matrix: UniMatrix) -> int:
    return minimize(matrix).operator_complexity


def _fundamental_domain(matrix: UniMatrix, result: MinimizationResult) -> list[Hexagon]:
    start = result.minimal_hexagon
    if result.operator_complexity == 0:
        return [start]
    return list(geodesic(start, apply_matrix(matrix, start)))[:-1]


@requires_sl2
def minimal_matrices(matrix: UniMatrix) -> frozenset[UniMatrix]:
    """
    Every minimal matrix of the operator: B⁻¹AB for the six bases B of each
    minimal hexagon in one fundamental domain of the mainstream.
    """
    result = minimize(matrix)
    return frozenset(
        matrix.conjugate_by(basis)
        for hexagon in _fundamental_domain(matrix, result)
        for basis in adjacent_bases(hexagon)
    )


@requires_sl2
def conjugacy_key(matrix: UniMatrix) -> UniMatrix:
    """The least minimal matrix; equal exactly on conjugate matrices."""
    return min(minimal_matrices(matrix))


@requires_sl2
def mainstream(matrix: UniMatrix, window: int) -> list[Hexagon]:
    """
    The c(𝒜)·(2k+1)+1 consecutive mainstream hexagons from A^{−k}V to A^{k+1}V.
    """
    if window < 0:
        raise InvalidRange(f"Window must be nonnegative, got {window}")
    if classify(matrix).is_periodic:
        raise PeriodicOperator(
            f"{matrix} is periodic; its minimal hexagons do not form a line"
        )
    result = minimize(matrix)
    domain = _fundamental_domain(matrix, result)
    hexagons = []
    for power in range(-window, window + 1):
        translate = matrix**power
        hexagons.extend(apply_matrix(translate, hexagon) for hexagon in domain)
    hexagons.append(apply_matrix(matrix ** (window + 1), result.minimal_hexagon))
    return hexagons


@requires_sl2
def parity(matrix: UniMatrix) -> int:
    """c(A) mod 2, the epimorphism SL(2,Z) → Z₂ sending S and T to 1."""
    return matrix_complexity(matrix) % 2


@dataclass(frozen=True)
class PowerRow:
    exponent: int
    matrix_complexity: int
    operator_complexity: int
    minimal: bool


@dataclass(frozen=True)
class PowerLawReport:
    matrix: UniMatrix
    operator_complexity: int
    matrix_complexity: int
    minimal: bool
    rows: tuple[PowerRow, ...]

    @property
    def offset(self) -> int:
        """b = c(A) − c(𝒜)."""
        return self.matrix_complexity - self.operator_complexity

    @property
    def operator_law_holds(self) -> bool:
        return all(
            row.operator_complexity == abs(row.exponent) * self.operator_complexity
            for row in self.rows
        )

    @property
    def offset_law_holds(self) -> bool:
        return (
            self.offset >= 0
            and self.offset % 2 == 0
            and all(
                row.matrix_complexity - abs(row.exponent) * self.operator_complexity
                == self.offset
                for row in self.rows
            )
        )

    @property
    def minimality_preserved(self) -> bool:
        return all(row.minimal == self.minimal for row in self.rows)

    @property
    def holds(self) -> bool:
        return (
            self.operator_law_holds
            and self.offset_law_holds
            and self.minimality_preserved
        )


@requires_sl2
def power_law_check(matrix: UniMatrix, k_max: int) -> PowerLawReport:
    """
    For 1 ≤ |k| ≤ k_max: c(𝒜^k) = |k|·c(𝒜), c(A^k) − |k|·c(𝒜) is a constant
    even b ≥ 0, and A^k is minimal exactly when A is.

    Periodic operators are rejected: the rotation by π/2 already has
    c(𝒜²) = 0 < 2·c(𝒜).
    """
    if classify(matrix).is_periodic:
        raise PeriodicOperator(
            f"{matrix} is periodic;"
            " powers of periodic operators can have c(𝒜^k) < |k|c(𝒜)"
        )
    rows = []
    for k in range(1, k_max + 1):
        for exponent in (k, -k):
            power = matrix**exponent
            rows.append(
                PowerRow(
                    exponent,
                    matrix_complexity(power),
                    operator_complexity(power),
                    is_minimal(power),
                )
            )
    return PowerLawReport(
        matrix,
        operator_complexity(matrix),
        matrix_complexity(matrix),
        is_minimal(matrix),
        tuple(rows),
    )


@requires_sl2
def complexity_profile(matrix: UniMatrix, k_max: int) -> list[int]:
    """c(𝒜^k) for k = 1 .. k_max; periodic operators allowed."""
    return [operator_complexity(matrix**k) for k in range(1, k_max + 1)]


@dataclass(frozen=True)
class KleinHullReport:
    matrix: UniMatrix
    bound: int
    corners: tuple[LatticeVector, ...]
    off_sail_leading_vertices: tuple[LatticeVector, ...]
    unmatched_sail_points: tuple[LatticeVector, ...]

    @property
    def holds(self) -> bool:
        return not self.off_sail_leading_vertices and not self.unmatched_sail_points


def _vertex_set(hexagons: list[Hexagon]) -> set[LatticeVector]:
    return {vertex for hexagon in hexagons for vertex in hexagon.vertices()}


def _leading_pairs(hexagon: Hexagon) -> set[LatticeVector]:
    """Pairs of largest q_norm: one for every hexagon but W₀, which has three."""
    top = max(q_norm(pair) for pair in hexagon.pairs)
    return {pair for pair in hexagon.pairs if q_norm(pair) == top}


def _beyond(hexagons: list[Hexagon], bound: int) -> bool:
    return all(q_norm(pair) > bound for hexagon in hexagons for pair in hexagon.pairs)


def klein_hull_report(matrix: UniMatrix, bound: int | None = None) -> KleinHullReport:
    """
    Compare the mainstream with the Klein sails of the eigenline sectors.

    Every window-1 mainstream hexagon must have its leading vertex on a sail,
    and every primitive sail point p with q_norm(p) ≤ bound must be the
    leading vertex of some mainstream hexagon. ``bound`` defaults to the
    q_norm of the leading vertex of A³W₀. The second half holds when W₀ lies
    on the mainstream, i.e. for minimal matrices.
    """
    if matrix.det != 1 or abs(matrix.trace) <= 2:
        raise NotHyperbolic(f"{matrix} is not a hyperbolic SL(2,Z) matrix")
    positive = matrix if matrix.trace > 0 else -matrix
    if bound is None:
        bound = q_norm(leading_vertex(apply_matrix(positive**3, standard_hexagon())))
    window_one = mainstream(positive, 1)

    # extend until a whole period at each end lies outside the box
    period = operator_complexity(positive)
    window = 1
    extended = window_one
    head, tail = slice(None, period + 1), slice(-period - 1, None)
    while not (_beyond(extended[head], bound) and _beyond(extended[tail], bound)):
        window += 1
        extended = mainstream(positive, window)
    reach = max(
        max(abs(vertex.x), abs(vertex.y)) for vertex in _vertex_set(extended)
    )

    sails = klein_sails(positive, reach)
    off_sail = sorted(
        {leading_vertex(hexagon) for hexagon in window_one}
        - {point for point in sails.points if point.is_positive}
    )
    leading = set().union(*(_leading_pairs(hexagon) for hexagon in extended))
    unmatched = sorted(
        point
        for point in sails.points
        if point.is_positive
        and point.is_primitive
        and q_norm(point) <= bound
        and point not in leading
    )
    corners = sorted(corner for corner in sails.corners if q_norm(corner) <= bound)
    logger.debug(
        "klein hulls of %s: box %d, window %d, %d corners",
        matrix,
        bound,
        window,
        len(corners),
    )
    return KleinHullReport(
        matrix, bound, tuple(corners), tuple(off_sail), tuple(unmatched)
    )


def klein_hull_check(matrix: UniMatrix, bound: int | None = None) -> bool:
    return klein_hull_report(matrix, bound).holds


def _positive_form(matrix: UniMatrix) -> tuple[int, int, int]:
    # det(v, Av) = c·x² + (d − a)·xy − b·y², sign fixed so the form is positive
    sign = 1 if matrix.c > 0 else -1
    return sign * matrix.c, sign * (matrix.d - matrix.a), -sign * matrix.b


def _unit_points(form: tuple[int, int, int]) -> set[LatticeVector]:
    alpha, beta, gamma = form
    discriminant = 4 * alpha * gamma - beta * beta
    x_bound = isqrt(4 * gamma // discriminant) + 1
    y_bound = isqrt(4 * alpha // discriminant) + 1
    return {
        LatticeVector(x, y)
        for x in range(-x_bound, x_bound + 1)
        for y in range(-y_bound, y_bound + 1)
        if alpha * x * x + beta * x * y + gamma * y * y == 1
    }


@requires_sl2
def elliptic_form_check(matrix: UniMatrix) -> bool:
    """
    For an elliptic operator other than ±I, the form Q(v) = ±det(v, Av) takes
    the value 1 exactly at the six vertices of the unique minimal hexagon when
    c(𝒜) = 0, and at the four vertices shared by the two minimal hexagons for
    the rotations by ±π/2.
    """
    if matrix.is_scalar or abs(matrix.trace) >= 2:
        raise NotElliptic(f"{matrix} is not an elliptic operator other than ±I")
    unit_points = _unit_points(_positive_form(matrix))
    result = minimize(matrix)
    first = set(result.minimal_hexagon.vertices())
    if result.operator_complexity == 0:
        return unit_points == first
    second = set(apply_matrix(matrix, result.minimal_hexagon).vertices())
    return unit_points == first & second

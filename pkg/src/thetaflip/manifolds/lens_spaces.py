"""
Lens spaces L(p, q): two solid tori glued along A = [[s, p], [r, q]].

The complexity of L(p, q) is conjectured to be E(p, q) − 3 for p > 3. The
swept spine starts with E + 6 vertices (three punctures), loses one after
the meridional Dehn twists are chosen optimally and eight more near the two
solid tori.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd

from thetaflip.constants import LENS_SHIFT, SMALL_LENS_MAX_P, TWIST_DESCENT_MAX_STEPS
from thetaflip.euclid import euclid_complexity
from thetaflip.exceptions import InvalidRange, NotCoprime, OracleMismatch
from thetaflip.flip_tree import distance
from thetaflip.hexagon import apply_matrix, standard_hexagon
from thetaflip.lattice import ROW_R2
from thetaflip.models import UniMatrix

logger = logging.getLogger(__name__)

# meridional Dehn twist of the first solid torus
MERIDIAN_TWIST = ROW_R2


def _check_lens(p: int, q: int) -> None:
    if not 0 < q < p:
        raise InvalidRange(f"Lens parameters need 0 < q < p, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) = {gcd(p, q)}")


def gluing_matrix(p: int, q: int) -> UniMatrix:
    """
    [[s, p], [r, q]] with qs − pr = 1 and 0 < s < p, 0 ≤ r < p; r = 0
    only for q = 1.
    """
    _check_lens(p, q)
    s = pow(q, -1, p)
    r = (q * s - 1) // p
    return UniMatrix(s, p, r, q)


def lens_normalize(p: int, q: int) -> int:
    """The least q′ with L(p, q′) homeomorphic to L(p, q)."""
    _check_lens(p, q)
    inverse = pow(q, -1, p)
    return min(q, p - q, inverse, p - inverse)


def lens_homeomorphic(p: int, q: int, other_p: int, other_q: int) -> bool:
    first, second = lens_normalize(p, q), lens_normalize(other_p, other_q)
    return p == other_p and first == second


@dataclass(frozen=True)
class TwistResult:
    """The Dehn twist exponents (n₀, n₁) realizing the least distance."""

    n0: int
    n1: int
    distance: int


class _TwistDistances:
    """d(B^{n₀}W₀, C^{n₁}AW₀) with memoized evaluations."""

    def __init__(self, matrix: UniMatrix):
        self.matrix = matrix
        self.second_twist = matrix @ MERIDIAN_TWIST @ matrix.inverse()
        self.image = apply_matrix(matrix, standard_hexagon())
        self._cache: dict[tuple[int, int], int] = {}

    def __call__(self, n0: int, n1: int) -> int:
        key = (n0, n1)
        if key not in self._cache:
            start = apply_matrix(MERIDIAN_TWIST**n0, standard_hexagon())
            end = apply_matrix(self.second_twist**n1, self.image)
            self._cache[key] = distance(start, end)
        return self._cache[key]


def lens_twist_pair(p: int, q: int) -> TwistResult:
    """
    Minimize over the Dehn twist exponents by local descent from (0, 0).

    Both twist families are lines of the flip tree, so the distance between
    their points is convex in (n₀, n₁) and a local minimum is global.
    """
    _check_lens(p, q)
    evaluate = _TwistDistances(gluing_matrix(p, q))
    n0, n1 = 0, 0
    best = evaluate(n0, n1)
    steps = [(dx, dy) for dx in (-1, 0, 1) for dy in (-1, 0, 1) if (dx, dy) != (0, 0)]
    for _ in range(TWIST_DESCENT_MAX_STEPS):
        value, move = min((evaluate(n0 + dx, n1 + dy), (dx, dy)) for dx, dy in steps)
        if value >= best:
            logger.debug("twist descent L(%d,%d): (%d, %d) at %d", p, q, n0, n1, best)
            return TwistResult(n0, n1, best)
        best = value
        n0, n1 = n0 + move[0], n1 + move[1]
    raise OracleMismatch(f"Twist descent for L({p},{q}) did not settle")


def lens_twist_distance(p: int, q: int) -> int:
    """min over n₀, n₁ of d(B^{n₀}W₀, C^{n₁}AW₀); equals E(p, q) − 1."""
    return lens_twist_pair(p, q).distance


def lens_twist_distance_window(p: int, q: int) -> int:
    """
    Exhaustive minimum over the square window |n₀|, |n₁| ≤ N. N starts at
    E(p, q) and doubles until two consecutive windows agree.
    """
    _check_lens(p, q)
    evaluate = _TwistDistances(gluing_matrix(p, q))

    def window_minimum(size: int) -> int:
        return min(
            evaluate(n0, n1)
            for n0 in range(-size, size + 1)
            for n1 in range(-size, size + 1)
        )

    size = euclid_complexity(p, q)
    previous = window_minimum(size)
    while True:
        size *= 2
        current = window_minimum(size)
        if current == previous:
            return current
        previous = current


@dataclass(frozen=True)
class LensReport:
    p: int
    q: int
    canonical_q: int
    euclid: int
    gluing_matrix: UniMatrix
    twist: TwistResult

    @property
    def special_small_space(self) -> bool:
        """L(2,1) and L(3,q) have complexity 0, below the general formula."""
        return self.p <= SMALL_LENS_MAX_P

    @property
    def spine_vertices(self) -> int:
        return max(0, self.euclid - LENS_SHIFT)

    @property
    def conjectured_complexity(self) -> int:
        return 0 if self.special_small_space else self.euclid - LENS_SHIFT

    @property
    def twist_distance(self) -> int:
        return self.twist.distance

    @property
    def vertex_ledger(self) -> tuple[int, int, int]:
        """Vertices of the three-punctured spine, after the twist choice, and final."""
        return self.euclid + 6, self.euclid + 5, self.euclid - LENS_SHIFT

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "canonical_q": self.canonical_q,
            "euclid": self.euclid,
            "conjectured_complexity": self.conjectured_complexity,
            "special_small_space": self.special_small_space,
            "gluing_matrix": [list(row) for row in self.gluing_matrix.rows],
            "twist_distance": self.twist_distance,
            "twist_pair": [self.twist.n0, self.twist.n1],
            "spine_vertices": self.spine_vertices,
            "vertex_ledger": list(self.vertex_ledger),
        }

    @classmethod
    def from_dict(cls, data: dict) -> LensReport:
        n0, n1 = data["twist_pair"]
        return cls(
            data["p"],
            data["q"],
            data["canonical_q"],
            data["euclid"],
            UniMatrix.from_rows(tuple(tuple(row) for row in data["gluing_matrix"])),
            TwistResult(n0, n1, data["twist_distance"]),
        )

    def lines(self) -> list[str]:
        small = " (special small space)" if self.special_small_space else ""
        return [
            f"lens space: L({self.p},{self.q}) ~ L({self.p},{self.canonical_q})",
            f"E(p,q): {self.euclid}",
            f"conjectured complexity: {self.conjectured_complexity}{small}",
            f"gluing matrix: {self.gluing_matrix}",
            f"twist distance: {self.twist_distance}"
            f" at (n0, n1) = ({self.twist.n0}, {self.twist.n1})",
            f"spine vertices: {self.spine_vertices}",
            "vertex ledger: " + " -> ".join(str(count) for count in self.vertex_ledger),
        ]


def lens_report(p: int, q: int) -> LensReport:
    _check_lens(p, q)
    return LensReport(
        p,
        q,
        lens_normalize(p, q),
        euclid_complexity(p, q),
        gluing_matrix(p, q),
        lens_twist_pair(p, q),
    )

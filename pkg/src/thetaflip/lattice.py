from __future__ import annotations

from math import isqrt

from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ

from thetaflip.exceptions import NotCoprime
from thetaflip.models import LatticeVector, UniMatrix

IDENTITY = UniMatrix(1, 0, 0, 1)
MINUS_IDENTITY = UniMatrix(-1, 0, 0, -1)
# generators of SL(2,Z)
JORDAN_T = UniMatrix(1, 1, 0, 1)
ROTATION_S = UniMatrix(0, -1, 1, 0)
# order-6 rotation preserving the standard hexagon
ROTATION_R = UniMatrix(0, -1, 1, 1)
# the orientation-reversing coordinate swap
SWAP_C = UniMatrix(0, 1, 1, 0)
# row transformations of the Euclid algorithm
ROW_R1 = UniMatrix(1, 1, 0, 1)
ROW_R2 = UniMatrix(1, 0, 1, 1)


def q_norm(vector: LatticeVector) -> int:
    """The hexagonal norm x² + xy + y²."""
    x, y = vector
    return x * x + x * y + y * y


def cross_det(first: LatticeVector, second: LatticeVector) -> int:
    return first.x * second.y - first.y * second.x


def smith_invariants(entries: tuple[int, int, int, int]) -> tuple[int, int]:
    """
    Smith invariants (d1, d2) of the integer matrix [[a, b], [c, d]].

    Both are nonnegative and d1 divides d2; zero invariants come last.
    """
    a, b, c, d = entries
    normal_form = smith_normal_form(Matrix([[a, b], [c, d]]), domain=ZZ)
    invariants = sorted(
        (abs(int(normal_form[0, 0])), abs(int(normal_form[1, 1]))),
        key=lambda value: (value == 0, value),
    )
    return invariants[0], invariants[1]


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a·x + b·y = g = gcd(a, b) ≥ 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_x, x = x, old_x - quotient * x
        old_y, y = y, old_y - quotient * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def completing_matrix(vector: LatticeVector) -> UniMatrix:
    """
    An SL(2,Z) matrix whose first column is the primitive vector ``vector``.
    """
    g, s, t = extended_gcd(vector.x, vector.y)
    if g != 1:
        raise NotCoprime(f"{vector} is not a primitive vector")
    # x·s + y·t = 1, so [[x, -t], [y, s]] has determinant 1
    return UniMatrix(vector.x, -t, vector.y, s)


def floor_quadratic(
    rational: int, radical: int, discriminant: int, denominator: int
) -> int:
    """
    Exact floor of (rational + radical·√discriminant) / denominator.

    ``discriminant`` must be nonnegative and ``denominator`` nonzero.
    """
    if denominator < 0:
        rational, radical, denominator = -rational, -radical, -denominator
    square = radical * radical * discriminant
    root = isqrt(square)
    if radical >= 0:
        scaled = root
    elif root * root == square:
        scaled = -root
    else:
        scaled = -root - 1
    # rational + scaled <= numerator < rational + scaled + 1
    return (rational + scaled) // denominator

"""
Acceptance suites. Each suite sweeps one family of exact statements and
compares every fast formula against an independent oracle where one exists.
"""

from __future__ import annotations

import random
from math import gcd
from typing import Iterator

import networkx as nx

from thetaflip.conjugacy import (
    classify,
    conjugacy_key,
    elliptic_form_check,
    is_minimal,
    klein_hull_check,
    mainstream,
    minimal_matrices,
    minimize,
    operator_complexity,
    parity,
    power_law_check,
)
from thetaflip.constants import (
    DEFAULT_BALL_SIZE_RADIUS,
    DEFAULT_CENSUS_SAMPLES,
    DEFAULT_CONJUGACY_SAMPLES,
    DEFAULT_DISPLACEMENT_RADIUS,
    DEFAULT_DISPLACEMENT_SAMPLES,
    DEFAULT_FAREY_ORACLE_DENOMINATOR,
    DEFAULT_FAREY_PMAX,
    DEFAULT_GROUP_LAW_SAMPLES,
    DEFAULT_HOMOLOGY_SAMPLES,
    DEFAULT_LEADING_VERTEX_PMAX,
    DEFAULT_LENS_ORBIT_PMAX,
    DEFAULT_LENS_TWIST_PMAX,
    DEFAULT_MOEBIUS_SAMPLES,
    DEFAULT_ORACLE_RADIUS,
    DEFAULT_POWER_LAW_KMAX,
    DEFAULT_POWER_LAW_SAMPLES,
    DEFAULT_RECIPROCITY_PMAX,
    TWIST_WINDOW_PMAX,
)
from thetaflip.enums import BoundSource, OperatorKind
from thetaflip.euclid import (
    euclid_complexity,
    euclid_subtractive_oracle,
    reciprocal_symmetry_scan,
)
from thetaflip.exceptions import InvalidRange
from thetaflip.farey import (
    FareyTriangle,
    dc_operator_displacement,
    dc_rationals,
    dc_triangle_point,
    hexagon_to_triangle,
    moebius_apply,
    separating_lines_oracle,
)
from thetaflip.flip_tree import ball_graph, bfs_ball, distance, matrix_complexity
from thetaflip.hexagon import (
    Hexagon,
    apply_matrix,
    hexagon_from_pair,
    leading_vertex,
    standard_basis,
    standard_hexagon,
)
from thetaflip.lattice import (
    IDENTITY,
    JORDAN_T,
    MINUS_IDENTITY,
    ROTATION_S,
    SWAP_C,
    completing_matrix,
)
from thetaflip.manifolds import (
    first_homology,
    lens_normalize,
    lens_report,
    lens_twist_distance,
    lens_twist_distance_window,
    spine_census,
    torus_bundle_report,
)
from thetaflip.models import ExtRational, LatticeVector, UniMatrix
from thetaflip.verification.base import Check, Suite, VerificationSettings, check
from thetaflip.verification.sampling import (
    farey_sequence,
    random_matrices,
    random_minimal_hyperbolic,
    random_non_periodic,
    random_rational,
    random_word,
)

CONJUGATE_EXAMPLE = UniMatrix(171, 100, -289, -169)
CONJUGATE_EXAMPLE_BASIS = UniMatrix(10, -17, -17, 29)
HYPERBOLIC_EXAMPLE = UniMatrix(2, 1, 1, 1)
FLAT_BUNDLE_MONODROMIES = (
    IDENTITY,
    MINUS_IDENTITY,
    UniMatrix(0, -1, 1, 1),
    UniMatrix(-1, -1, 1, 0),
    UniMatrix(0, 1, -1, 0),
    UniMatrix(1, 0, 1, 1),
    UniMatrix(-1, 0, -1, -1),
)


def _coprime_pairs(p_max: int) -> Iterator[tuple[int, int]]:
    for p in range(2, p_max + 1):
        for q in range(1, p):
            if gcd(p, q) == 1:
                yield p, q


def _led_hexagons(lead: LatticeVector) -> list[Hexagon]:
    """Hexagons near ``lead`` in Γ whose leading vertex is ``lead``."""
    partner = completing_matrix(lead).columns[1]
    candidates = {
        hexagon_from_pair(lead, sign * partner + shift * lead)
        for sign in (1, -1)
        for shift in range(-2, 3)
    }
    return [hexagon for hexagon in candidates if leading_vertex(hexagon) == lead]


class ConjugateExampleSuite(Suite):
    name = "conjugate-example"
    description = "c = 13 matrix conjugate to the Jordan block"

    def checks(self) -> Iterator[Check]:
        matrix = CONJUGATE_EXAMPLE
        cross_check = self.settings.cross_check
        yield check("c(A) = 13", matrix_complexity(matrix, cross_check) == 13)
        yield check("c(T) = 1", matrix_complexity(JORDAN_T, cross_check) == 1)
        yield check("c(op A) = 1", operator_complexity(matrix) == 1)
        yield check("c(op T) = 1", operator_complexity(JORDAN_T) == 1)
        yield check("A is not minimal", not is_minimal(matrix))
        yield check(
            "minimize gives a minimal matrix", is_minimal(minimize(matrix).minimal)
        )
        yield check(
            "B⁻¹AB = T for the worked conjugator",
            matrix.conjugate_by(CONJUGATE_EXAMPLE_BASIS) == JORDAN_T,
        )
        image = apply_matrix(matrix, standard_hexagon())
        yield check(
            "leading vertex of AW₀ is (171,−289)",
            leading_vertex(image) == LatticeVector(171, -289),
        )


class HyperbolicExampleSuite(Suite):
    name = "hyperbolic-example"
    description = "[[2,1],[1,1]]: c = 2, bundle complexity 7"

    def checks(self) -> Iterator[Check]:
        yield check("c(op) = 2", operator_complexity(HYPERBOLIC_EXAMPLE) == 2)
        report = torus_bundle_report(HYPERBOLIC_EXAMPLE)
        yield check("conjectured complexity 7", report.conjectured_complexity == 7)
        yield check(
            "bound from the swept spine",
            report.upper_bound_source is BoundSource.SWEPT_SPINE,
        )
        census = report.census
        yield check("census attached", census is not None)
        if census is not None:
            yield check("census n = 7", census.n_vertices == 7)
            yield check("census cells = 8", census.n_cells == 8)
            yield check("census pseudominimal", census.pseudominimal)
        yield check(
            "klein sails carry the mainstream", klein_hull_check(HYPERBOLIC_EXAMPLE)
        )


class FlatBundlesSuite(Suite):
    name = "flat-bundles"
    description = "six-vertex bundles"

    def checks(self) -> Iterator[Check]:
        for matrix in FLAT_BUNDLE_MONODROMIES:
            report = torus_bundle_report(matrix)
            yield check(f"{matrix} conjectured 6", report.conjectured_complexity == 6)
            if report.c_operator == 0:
                described = report.flat_description is not None
                yield check(f"{matrix} flat description", described)
            if not matrix.is_scalar and abs(matrix.trace) < 2:
                yield check(
                    f"{matrix} unit points of its form", elliptic_form_check(matrix)
                )


class ReciprocitySuite(Suite):
    name = "reciprocity"
    description = "E(p,q) = E(p,r) for qr ≡ ±1 (mod p)"

    def checks(self) -> Iterator[Check]:
        p_max = self.settings.pick("pmax", DEFAULT_RECIPROCITY_PMAX)
        if p_max < 3:
            raise InvalidRange(f"pmax must be at least 3, got {p_max}")
        violations = reciprocal_symmetry_scan(p_max)
        for violation in violations:
            yield check(f"reciprocity at {violation}", False)
        yield check(f"reciprocity scan to {p_max}", not violations)
        for p, q in _coprime_pairs(min(p_max, 200)):
            yield check(
                f"E({p},{q}) = E({q},{p - q}) + 1",
                euclid_complexity(p, q) == euclid_complexity(q, p - q) + 1,
            )
        for p, q in _coprime_pairs(min(p_max, 60)):
            yield check(
                f"E({p},{q}) by subtraction",
                euclid_complexity(p, q) == euclid_subtractive_oracle(p, q),
            )


class OracleSuite(Suite):
    name = "oracle"
    description = "descent distances against breadth-first search"

    def checks(self) -> Iterator[Check]:
        radius = self.settings.pick("radius", DEFAULT_ORACLE_RADIUS)
        standard = standard_hexagon()
        ball = bfs_ball(standard, radius)
        for hexagon, hops in ball.items():
            yield check(f"d(W₀, {hexagon})", distance(standard, hexagon) == hops)
            complexity = matrix_complexity(
                standard_basis(hexagon), self.settings.cross_check
            )
            yield check(f"c of the basis of {hexagon}", complexity == hops)
        yield check("the ball is a tree", nx.is_tree(ball_graph(standard, radius)))
        size_bound = self.settings.pick("radius", DEFAULT_BALL_SIZE_RADIUS)
        for size_radius in range(size_bound + 1):
            yield check(
                f"|B({size_radius})| = 1 + 3(2^r − 1)",
                len(bfs_ball(standard, size_radius)) == 3 * 2**size_radius - 2,
            )


class LeadingVertexSuite(Suite):
    name = "leading-vertex"
    description = "the hexagon with leading vertex (p,q) lies at distance E(p,q)"

    def checks(self) -> Iterator[Check]:
        standard = standard_hexagon()
        p_max = self.settings.pick("pmax", DEFAULT_LEADING_VERTEX_PMAX)
        for p, q in _coprime_pairs(p_max):
            led = _led_hexagons(LatticeVector(p, q))
            yield check(f"unique hexagon led by ({p},{q})", len(led) == 1)
            if len(led) == 1:
                yield check(
                    f"d(W₀, W({p},{q})) = E({p},{q})",
                    distance(standard, led[0]) == euclid_complexity(p, q),
                )


class GroupLawsSuite(Suite):
    name = "group-laws"
    description = "symmetries, subadditivity and parity of c"

    def checks(self) -> Iterator[Check]:
        rng = random.Random(self.settings.seed)
        yield check("parity(S) = 1", parity(ROTATION_S) == 1)
        yield check("parity(T) = 1", parity(JORDAN_T) == 1)
        for _ in range(self.settings.pick("samples", DEFAULT_GROUP_LAW_SAMPLES)):
            first, second = random_word(rng), random_word(rng)
            c_first, c_second = matrix_complexity(first), matrix_complexity(second)
            product = first @ second
            yield check(
                f"c(A⁻¹) = c(A) for {first}",
                matrix_complexity(first.inverse()) == c_first,
            )
            yield check(
                f"c(−A) = c(A) for {first}", matrix_complexity(-first) == c_first
            )
            yield check(
                f"c(AB) ≤ c(A) + c(B) for {first}, {second}",
                matrix_complexity(product) <= c_first + c_second,
            )
            yield check(
                f"parity(AB) for {first}, {second}",
                parity(product) == (parity(first) + parity(second)) % 2,
            )
            yield check(
                f"c(B⁻¹AB) ≡ c(A) for {first}, {second}",
                matrix_complexity(first.conjugate_by(second)) % 2 == c_first % 2,
            )


class ConjugacySuite(Suite):
    name = "conjugacy"
    description = "minimization, minimal matrix sets and mainstreams"

    def checks(self) -> Iterator[Check]:
        rng = random.Random(self.settings.seed)
        for _ in range(self.settings.pick("samples", DEFAULT_CONJUGACY_SAMPLES)):
            matrix, conjugator = random_word(rng), random_word(rng)
            result = minimize(matrix)
            complexity = result.operator_complexity
            yield check(
                f"minimize is a projection at {matrix}",
                minimize(result.minimal).conjugator == IDENTITY,
            )
            yield check(
                f"c(op) conjugation invariant at {matrix}",
                operator_complexity(matrix.conjugate_by(conjugator)) == complexity,
            )
            yield check(
                f"c(op) of inverse and negative at {matrix}",
                operator_complexity(matrix.inverse()) == complexity
                and operator_complexity(-matrix) == complexity,
            )
            key = conjugacy_key(matrix)
            for member in minimal_matrices(matrix):
                yield check(f"{member} minimal", is_minimal(member))
                yield check(
                    f"{member} conjugate to {matrix}", conjugacy_key(member) == key
                )
            if not classify(matrix).is_periodic:
                window = mainstream(matrix, 0)
                yield check(
                    f"mainstream period of {matrix}",
                    apply_matrix(matrix, window[0]) == window[-1],
                )


class PowerLawsSuite(Suite):
    name = "power-laws"
    description = "c(𝒜^k) = |k|c(𝒜) and the constant even offset"

    def checks(self) -> Iterator[Check]:
        samples = self.settings.pick("samples", DEFAULT_POWER_LAW_SAMPLES)
        for matrix in random_non_periodic(self.settings.seed, samples):
            report = power_law_check(matrix, DEFAULT_POWER_LAW_KMAX)
            yield check(
                f"c(op A^k) = |k| c(op A) for {matrix}", report.operator_law_holds
            )
            yield check(f"constant even offset for {matrix}", report.offset_law_holds)
            yield check(
                f"minimality of powers of {matrix}", report.minimality_preserved
            )
            if classify(matrix).kind is OperatorKind.HYPERBOLIC:
                minimal = minimize(matrix).minimal
                yield check(f"klein sails of {minimal}", klein_hull_check(minimal))


class FareySuite(Suite):
    name = "farey"
    description = "distances in the Farey tessellation"

    def checks(self) -> Iterator[Check]:
        p_max = self.settings.pick("pmax", DEFAULT_FAREY_PMAX)
        zero, base = ExtRational(0), FareyTriangle.base()
        for p, q in _coprime_pairs(p_max):
            point = ExtRational(p, q)
            complexity = euclid_complexity(p, q)
            yield check(
                f"dc(0, {point}) = E − 1", dc_rationals(zero, point) == complexity - 1
            )
            yield check(
                f"dc(Δ₀, {point}) = E", dc_triangle_point(base, point) == complexity
            )

        points = farey_sequence(min(p_max, DEFAULT_FAREY_ORACLE_DENOMINATOR))
        points.append(ExtRational.infinity())
        for index, first in enumerate(points):
            for second in points[index + 1 :]:
                yield check(
                    f"dc({first}, {second}) against separating lines",
                    dc_rationals(first, second)
                    == separating_lines_oracle(first, second),
                )

        rng = random.Random(self.settings.seed)
        for _ in range(self.settings.pick("samples", DEFAULT_MOEBIUS_SAMPLES)):
            matrix = random_word(rng)
            first, second = random_rational(rng, 20), random_rational(rng, 20)
            if first == second:
                continue
            moved = dc_rationals(
                moebius_apply(matrix, first), moebius_apply(matrix, second)
            )
            yield check(
                f"Möbius invariance of dc({first}, {second}) under {matrix}",
                moved == dc_rationals(first, second),
            )

        for matrix in random_matrices(self.settings.seed, DEFAULT_DISPLACEMENT_SAMPLES):
            center = minimize(matrix).minimal_hexagon
            least = min(
                dc_operator_displacement(matrix, hexagon_to_triangle(hexagon))
                for hexagon in bfs_ball(center, DEFAULT_DISPLACEMENT_RADIUS)
            )
            yield check(
                f"least displacement of {matrix} is c(op)",
                least == operator_complexity(matrix),
            )


class LensSuite(Suite):
    name = "lens"
    description = "lens space twist distances and normalization"

    def checks(self) -> Iterator[Check]:
        twist_pmax = self.settings.pick("pmax", DEFAULT_LENS_TWIST_PMAX)
        for p, q in _coprime_pairs(twist_pmax):
            yield check(
                f"twist distance of L({p},{q}) = E − 1",
                lens_twist_distance(p, q) == euclid_complexity(p, q) - 1,
            )
        for p, q in _coprime_pairs(min(twist_pmax, TWIST_WINDOW_PMAX)):
            yield check(
                f"twist window oracle for L({p},{q})",
                lens_twist_distance_window(p, q) == lens_twist_distance(p, q),
            )
        for p, q in _coprime_pairs(self.settings.pick("pmax", DEFAULT_LENS_ORBIT_PMAX)):
            yield check(
                f"E invariant on the orbit of L({p},{q})",
                euclid_complexity(p, q) == euclid_complexity(p, lens_normalize(p, q)),
            )
        report = lens_report(5, 2)
        yield check("L(5,2) conjectured 1", report.conjectured_complexity == 1)
        yield check("L(5,2) spine vertices 1", report.spine_vertices == 1)
        yield check("L(3,1) flagged small", lens_report(3, 1).special_small_space)


class CensusSuite(Suite):
    name = "census"
    description = "cell counts of the swept spine"

    def checks(self) -> Iterator[Check]:
        samples = self.settings.pick("samples", DEFAULT_CENSUS_SAMPLES)
        for matrix in random_minimal_hyperbolic(self.settings.seed, samples):
            census = spine_census(matrix)
            n = census.n_vertices
            yield check(f"f = n + 1 for {matrix}", census.n_cells == n + 1)
            yield check(f"edges = 2n for {matrix}", census.n_edges == 2 * n)
            yield check(
                f"swept cells = c + 2 for {matrix}",
                len(census.swept_cells) == census.operator_complexity + 2,
            )
            yield check(
                f"interior lengths even and ≥ 4 for {matrix}",
                all(
                    length % 2 == 0 and length >= 4
                    for length in census.interior_lengths
                ),
            )
            yield check(f"pseudominimal spine for {matrix}", census.pseudominimal)


class HomologySuite(Suite):
    name = "homology"
    description = "homology lower bound and homeomorphism invariance"

    def checks(self) -> Iterator[Check]:
        torus = first_homology(IDENTITY)
        yield check("H₁(T³) = Z³", torus.betti == 3 and torus.torsion == ())
        yield check("T³ bound 2", torus.lower_bound == 2)
        rng = random.Random(self.settings.seed)
        for _ in range(self.settings.pick("samples", DEFAULT_HOMOLOGY_SAMPLES)):
            matrix, conjugator = random_word(rng), random_word(rng)
            report = torus_bundle_report(matrix)
            yield check(
                f"homology bound ≤ conjectured for {matrix}",
                report.lower_bound_homology <= report.conjectured_complexity,
            )
            related = (
                matrix.inverse(),
                SWAP_C @ matrix @ SWAP_C,
                matrix.conjugate_by(conjugator),
            )
            yield check(
                f"conjectured complexity invariant for {matrix}",
                all(
                    torus_bundle_report(other).conjectured_complexity
                    == report.conjectured_complexity
                    for other in related
                ),
            )


SUITES: dict[str, type[Suite]] = {
    suite.name: suite
    for suite in (
        ConjugateExampleSuite,
        HyperbolicExampleSuite,
        FlatBundlesSuite,
        ReciprocitySuite,
        OracleSuite,
        LeadingVertexSuite,
        GroupLawsSuite,
        ConjugacySuite,
        PowerLawsSuite,
        FareySuite,
        LensSuite,
        CensusSuite,
        HomologySuite,
    )
}


def build_suites(
    name: str, settings: VerificationSettings | None = None
) -> list[Suite]:
    """The suite called ``name``, or every suite in canonical order for ``all``."""
    if name == "all":
        return [suite(settings) for suite in SUITES.values()]
    if name not in SUITES:
        raise KeyError(f"Unknown suite '{name}'. Choose from: all, {', '.join(SUITES)}")
    return [SUITES[name](settings)]

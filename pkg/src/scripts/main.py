#!/usr/bin/env python3

import argparse
import json
import logging
import re
import sys
import textwrap
from collections import Counter
from typing import Callable, Sequence

from thetaflip import __version__
from thetaflip.conjugacy import (
    classify,
    mainstream,
    minimal_matrices,
    minimize,
    parity,
)
from thetaflip.euclid import continued_fraction, euclid_complexity, euclid_word
from thetaflip.exceptions import ThetaFlipException
from thetaflip.farey import FareyTriangle, dc_rationals, dc_triangle_point
from thetaflip.flip_tree import (
    ball_graph,
    descend_to_standard,
    export_dot,
    matrix_complexity,
)
from thetaflip.hexagon import apply_matrix, leading_vertex, standard_hexagon
from thetaflip.lattice import q_norm
from thetaflip.manifolds import (
    bundles_homeomorphic,
    lens_homeomorphic,
    lens_report,
    spine_census,
    torus_bundle_report,
)
from thetaflip.utilities import parse_matrix, parse_rational
from thetaflip.verification import SuiteRunner, VerificationSettings, build_suites

logging.basicConfig()

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2

NEGATIVE_RATIONAL = re.compile(r"^-\d+/\d+$")


class HelpFormatterWithNL(argparse.HelpFormatter):
    """Keeps the line breaks of descriptions, wrapping each paragraph separately."""

    def _fill_text(self, text, width, indent):
        return "\n".join(
            textwrap.fill(bit, width, initial_indent=indent, subsequent_indent=indent)
            for bit in text.split("\n")
        )

    def _split_lines(self, text, width):
        lines = []
        for paragraph in text.split("\n"):
            lines.extend(textwrap.wrap(paragraph, width) or [""])
        return lines


def _emit_json(data: dict) -> None:
    print(json.dumps(data, ensure_ascii=False, indent=2))


def cmd_euclid(options) -> int:
    p, q = options.p, options.q
    print(f"E({p},{q}) = {euclid_complexity(p, q)}")
    larger, smaller = max(p, q), min(p, q)
    if smaller >= 1:
        expansion = continued_fraction(larger, smaller)
        print(f"continued fraction of {larger}/{smaller}: {expansion}")
    if larger > smaller >= 1:
        word = euclid_word(larger, smaller)
        print(f"word: {word} = {word.product}")
    return EXIT_OK


def cmd_cmat(options) -> int:
    matrix = parse_matrix(options.matrix)
    print(matrix_complexity(matrix, cross_check=options.trace))
    if options.trace:
        path = descend_to_standard(apply_matrix(matrix, standard_hexagon()))
        for step, hexagon in enumerate(path):
            lead = leading_vertex(hexagon)
            print(f"{step:>4}  {hexagon}  lead {lead}  Q={q_norm(lead)}")
    return EXIT_OK


def cmd_cop(options) -> int:
    matrix = parse_matrix(options.matrix)
    result = minimize(matrix)
    print(f"class: {classify(matrix)}")
    print(f"c(A): {matrix_complexity(matrix)}")
    print(f"c(op): {result.operator_complexity}")
    print(f"minimal matrix: {result.minimal}")
    print(f"conjugator: {result.conjugator}")
    members = sorted(minimal_matrices(matrix))
    print("minimal matrices: " + " ".join(str(member) for member in members))
    print(f"parity: {parity(matrix)}")
    return EXIT_OK


def cmd_bundle(options) -> int:
    report = torus_bundle_report(parse_matrix(options.matrix))
    if options.json:
        _emit_json(report.to_dict())
    else:
        print("\n".join(report.lines()))
    return EXIT_OK


def cmd_census(options) -> int:
    census = spine_census(parse_matrix(options.matrix))
    if options.json:
        _emit_json(census.to_dict())
        return EXIT_OK
    print(f"vertices: {census.n_vertices}")
    print(f"edges: {census.n_edges}")
    print(f"cells: {census.n_cells} ({census.fiber_pentagons} pentagons)")
    print(f"unsimplified vertices: {census.unsimplified_vertices}")
    print(f"fiber-adjacent cells: {census.fiber_adjacent_cells}")
    print(f"pseudominimal: {str(census.pseudominimal).lower()}")
    for cell in census.swept_cells:
        birth = "fiber" if cell.birth_flip is None else cell.birth_flip
        death = "fiber" if cell.death_flip is None else cell.death_flip
        print(
            f"  edge ±{cell.edge}: flips {birth} -> {death},"
            f" length {cell.length_text}"
        )
    return EXIT_OK


def cmd_homeo_bundle(options) -> int:
    first = parse_matrix(options.matrices[:4])
    second = parse_matrix(options.matrices[4:])
    print(str(bundles_homeomorphic(first, second)).lower())
    return EXIT_OK


def cmd_lens(options) -> int:
    report = lens_report(options.p, options.q)
    if options.json:
        _emit_json(report.to_dict())
    else:
        print("\n".join(report.lines()))
    return EXIT_OK


def cmd_homeo_lens(options) -> int:
    p, q, other_p, other_q = options.parameters
    print(str(lens_homeomorphic(p, q, other_p, other_q)).lower())
    return EXIT_OK


def cmd_dc(options) -> int:
    print(dc_rationals(parse_rational(options.first), parse_rational(options.second)))
    return EXIT_OK


def cmd_dc_triangle(options) -> int:
    if options.triangle:
        points = (parse_rational(point) for point in options.triangle)
        triangle = FareyTriangle.of(*points)
    else:
        triangle = FareyTriangle.base()
    print(dc_triangle_point(triangle, parse_rational(options.point)))
    return EXIT_OK


def cmd_ball(options) -> int:
    graph = ball_graph(standard_hexagon(), options.radius)
    if options.dot:
        sys.stdout.write(export_dot(graph, name="ball"))
        return EXIT_OK
    layers = Counter(hops for _, hops in graph.nodes(data="distance"))
    print(f"hexagons: {graph.number_of_nodes()}")
    for hops in sorted(layers):
        print(f"  distance {hops}: {layers[hops]}")
    return EXIT_OK


def cmd_mainstream(options) -> int:
    hexagons = mainstream(parse_matrix(options.matrix), options.window)
    if options.dot:
        sys.stdout.write(export_dot(hexagons, name="mainstream"))
        return EXIT_OK
    for hexagon in hexagons:
        print(hexagon)
    return EXIT_OK


def cmd_verify(options) -> int:
    settings = VerificationSettings(
        pmax=options.pmax,
        seed=options.seed,
        radius=options.radius,
        samples=options.samples,
    )
    try:
        suites = build_suites(options.suite, settings)
    except KeyError as e:
        print(f"error: {e.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    results = SuiteRunner(workers=options.workers).run(suites)
    for result in results:
        print(result.row())
        for failure in result.failures:
            print(f"    {failure}")
    if all(result.passed for result in results):
        return EXIT_OK
    return EXIT_VERIFICATION_FAILED


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(
            f"expected a nonnegative integer, got {text}"
        )
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        dest="verbose",
        default=argparse.SUPPRESS,
        help="Display debug output",
    )

    parser = argparse.ArgumentParser(
        prog="thetaflip",
        description=f"thetaflip {__version__}\n"
        "Flip distances of θ-curves, complexity of SL(2,Z) operators and the "
        "conjectured complexity of torus bundles and lens spaces.\n"
        "Matrices are four row-major integers; rationals are p/q, n or inf.",
        formatter_class=HelpFormatterWithNL,
        parents=[common],
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    def command(
        name: str, handler: Callable, help_text: str
    ) -> argparse.ArgumentParser:
        sub = commands.add_parser(
            name,
            help=help_text,
            description=help_text,
            parents=[common],
            formatter_class=HelpFormatterWithNL,
        )
        sub.set_defaults(handler=handler)
        return sub

    def matrix_argument(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("matrix", nargs=4, metavar=("A", "B", "C", "D"))

    sub = command(
        "euclid", cmd_euclid, "Euclid complexity, continued fraction and R-word"
    )
    sub.add_argument("p", type=int)
    sub.add_argument("q", type=int)

    sub = command("cmat", cmd_cmat, "c(A) = d(W0, A W0)")
    matrix_argument(sub)
    sub.add_argument("--trace", action="store_true", help="Print the descent to W0")

    sub = command("cop", cmd_cop, "Classification, c(op) and the minimal matrices")
    matrix_argument(sub)

    sub = command("bundle", cmd_bundle, "Torus bundle report")
    matrix_argument(sub)
    sub.add_argument("--json", action="store_true", help="Machine-readable output")

    sub = command(
        "census", cmd_census, "Cell census of the swept spine of a minimal matrix"
    )
    matrix_argument(sub)
    sub.add_argument("--json", action="store_true", help="Machine-readable output")

    sub = command(
        "homeo-bundle", cmd_homeo_bundle, "Are two torus bundles homeomorphic?"
    )
    sub.add_argument("matrices", nargs=8, metavar="N")

    sub = command("lens", cmd_lens, "Lens space report")
    sub.add_argument("p", type=int)
    sub.add_argument("q", type=int)
    sub.add_argument("--json", action="store_true", help="Machine-readable output")

    sub = command("homeo-lens", cmd_homeo_lens, "Are two lens spaces homeomorphic?")
    sub.add_argument("parameters", nargs=4, type=int, metavar=("P1", "Q1", "P2", "Q2"))

    sub = command("dc", cmd_dc, "Number of Farey lines separating two rationals")
    sub.add_argument("first")
    sub.add_argument("second")

    sub = command(
        "dc-triangle", cmd_dc_triangle, "Flip distance from a triangle to a fan"
    )
    sub.add_argument("point")
    sub.add_argument(
        "--triangle", nargs=3, metavar="R", help="Farey triangle (default: inf -1 0)"
    )

    sub = command("ball", cmd_ball, "The ball of radius R around W0")
    sub.add_argument("radius", type=_nonnegative)
    sub.add_argument("--dot", action="store_true", help="Print the ball as a DOT graph")

    sub = command(
        "mainstream", cmd_mainstream, "Minimal hexagons of a non-periodic operator"
    )
    matrix_argument(sub)
    sub.add_argument(
        "--window", type=_nonnegative, default=1, help="Periods on each side"
    )
    sub.add_argument("--dot", action="store_true", help="Print the path as a DOT graph")

    sub = command("verify", cmd_verify, "Run an acceptance suite (or 'all')")
    sub.add_argument("suite")
    sub.add_argument("--pmax", type=_nonnegative, help="Main sweep bound")
    sub.add_argument("--seed", type=int, default=VerificationSettings().seed)
    sub.add_argument("--radius", type=_nonnegative, help="Ball radius")
    sub.add_argument("--samples", type=_nonnegative, help="Random samples per suite")
    sub.add_argument("--workers", type=int, default=1, help="Worker threads")
    return parser


def _shield_negative_rationals(argv: Sequence[str]) -> list[str]:
    """
    Prefix each '-p/q' token with a space so argparse reads it as a value
    rather than an option; rational parsing ignores the padding.
    """
    return [
        f" {token}" if NEGATIVE_RATIONAL.match(token) else token for token in argv
    ]


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        options = parser.parse_args(
            _shield_negative_rationals(sys.argv[1:] if argv is None else argv)
        )
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    if getattr(options, "verbose", False):
        logging.getLogger().setLevel(logging.DEBUG)

    try:
        return options.handler(options)
    except ThetaFlipException as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE


def main():
    return run()


if __name__ == "__main__":
    sys.exit(main())

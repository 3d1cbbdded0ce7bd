"""
The flip tree Γ: admissible hexagons joined by flips.

Distances are computed from the canonical descent to the standard hexagon,
which repeatedly flips the leading vertex pair. Two descents share a common
tail; trimming it gives the unique geodesic between their starting points.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import networkx as nx

from thetaflip.constants import MAX_BALL_RADIUS
from thetaflip.decorators import requires_sl2
from thetaflip.euclid import euclid_complexity
from thetaflip.exceptions import (
    InvalidPath,
    InvalidRange,
    OracleMismatch,
    RadiusTooLarge,
)
from thetaflip.hexagon import (
    Hexagon,
    apply_matrix,
    flips,
    leading_vertex,
    standard_hexagon,
)
from thetaflip.lattice import q_norm
from thetaflip.models import UniMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FlipPath:
    """A simple path in Γ; consecutive hexagons differ by exactly one flip."""

    hexagons: tuple[Hexagon, ...]

    def __post_init__(self):
        if not self.hexagons:
            raise InvalidPath("A flip path contains at least one hexagon")
        if len(set(self.hexagons)) != len(self.hexagons):
            raise InvalidPath("A flip path never revisits a hexagon")
        for current, following in zip(self.hexagons, self.hexagons[1:]):
            if following not in flips(current):
                raise InvalidPath(f"{current} and {following} are not flip neighbours")

    @property
    def length(self) -> int:
        """Number of flips."""
        return len(self.hexagons) - 1

    @property
    def start(self) -> Hexagon:
        return self.hexagons[0]

    @property
    def end(self) -> Hexagon:
        return self.hexagons[-1]

    def reversed(self) -> FlipPath:
        return FlipPath(self.hexagons[::-1])

    def flipped_vertices(self) -> list:
        """The vertex pair replaced at each step."""
        return [
            current.replaced_vertex(following)
            for current, following in zip(self.hexagons, self.hexagons[1:])
        ]

    def __iter__(self) -> Iterator[Hexagon]:
        return iter(self.hexagons)

    def __getitem__(self, index: int) -> Hexagon:
        return self.hexagons[index]


def _descent(hexagon: Hexagon) -> list[Hexagon]:
    standard = standard_hexagon()
    chain = [hexagon]
    while chain[-1] != standard:
        current = chain[-1]
        lead = leading_vertex(current)
        following = current.flip(lead)
        if q_norm(leading_vertex(following)) >= q_norm(lead):
            raise OracleMismatch(
                f"Flip at the leading vertex of {current} does not descend"
            )
        chain.append(following)
    return chain


def descend_to_standard(hexagon: Hexagon) -> FlipPath:
    """The geodesic from ``hexagon`` to W₀, flipping the leading vertex each step."""
    return FlipPath(tuple(_descent(hexagon)))


def _common_tail(first: list[Hexagon], second: list[Hexagon]) -> int:
    shared = 0
    for left, right in zip(reversed(first), reversed(second)):
        if left != right:
            break
        shared += 1
    return shared


def distance(first: Hexagon, second: Hexagon) -> int:
    first_descent, second_descent = _descent(first), _descent(second)
    shared = _common_tail(first_descent, second_descent)
    return len(first_descent) + len(second_descent) - 2 * shared


def geodesic(first: Hexagon, second: Hexagon) -> FlipPath:
    first_descent, second_descent = _descent(first), _descent(second)
    shared = _common_tail(first_descent, second_descent)
    down = first_descent[: len(first_descent) - shared + 1]
    up = second_descent[: len(second_descent) - shared]
    return FlipPath(tuple(down + up[::-1]))


@requires_sl2
def matrix_complexity(matrix: UniMatrix, cross_check: bool = False) -> int:
    """
    c(A) = d(W₀, A·W₀).

    With leading vertex (p, q) of A·W₀, c(A) is E(|p|, |q|) when pq > 0 and
    E(|p|, |q|) − 1 when pq < 0.
    """
    image = apply_matrix(matrix, standard_hexagon())
    if image == standard_hexagon():
        complexity = 0
    else:
        p, q = leading_vertex(image)
        if p == 0 or q == 0:
            raise OracleMismatch(f"Leading vertex ({p},{q}) of {image} lies on an axis")
        complexity = euclid_complexity(abs(p), abs(q))
        if p * q < 0:
            complexity -= 1
    if cross_check:
        descended = descend_to_standard(image).length
        if descended != complexity:
            raise OracleMismatch(
                f"c({matrix}): leading-vertex formula gives {complexity},"
                f" descent gives {descended}"
            )
    return complexity


def _breadth_first(
    center: Hexagon, radius: int
) -> tuple[dict[Hexagon, int], list[tuple[Hexagon, Hexagon]]]:
    if radius < 0:
        raise InvalidRange(f"Radius must be nonnegative, got {radius}")
    if radius > MAX_BALL_RADIUS:
        raise RadiusTooLarge(f"Radius {radius} exceeds the cap {MAX_BALL_RADIUS}")
    distances = {center: 0}
    parents: dict[Hexagon, Hexagon | None] = {center: None}
    edges = []
    frontier = deque([center])
    while frontier:
        current = frontier.popleft()
        if distances[current] == radius:
            continue
        for neighbour in flips(current):
            if neighbour in distances:
                if neighbour != parents[current]:
                    logger.warning("BFS closed a cycle at %s", neighbour)
                continue
            distances[neighbour] = distances[current] + 1
            parents[neighbour] = current
            edges.append((current, neighbour))
            frontier.append(neighbour)
    return distances, edges


def bfs_ball(center: Hexagon, radius: int) -> dict[Hexagon, int]:
    """Every hexagon within ``radius`` flips of ``center``, with its distance."""
    distances, _ = _breadth_first(center, radius)
    return distances


def ball_graph(center: Hexagon, radius: int) -> nx.Graph:
    """The ball of Γ as a graph; edges carry the replaced vertex pair as ``flip``."""
    distances, edges = _breadth_first(center, radius)
    graph = nx.Graph()
    for hexagon, hops in distances.items():
        graph.add_node(hexagon, distance=hops)
    for parent, child in edges:
        graph.add_edge(parent, child, flip=parent.replaced_vertex(child))
    return graph


def path_graph(hexagons: Iterable[Hexagon]) -> nx.Graph:
    """A chain graph through consecutive flip neighbours."""
    chain = list(hexagons)
    graph = nx.Graph()
    for index, hexagon in enumerate(chain):
        graph.add_node(hexagon, distance=index)
    for current, following in zip(chain, chain[1:]):
        graph.add_edge(current, following, flip=current.replaced_vertex(following))
    return graph


def export_dot(
    source: nx.Graph | FlipPath | Sequence[Hexagon], name: str = "flips"
) -> str:
    """
    DOT text for a ball graph, a flip path or a list of consecutive hexagons.

    Node labels are the canonical hexagon and its leading vertex; edge labels
    are the vertex pair the flip replaces.
    """
    graph = source if isinstance(source, nx.Graph) else path_graph(source)
    identifiers = {hexagon: f"n{index}" for index, hexagon in enumerate(graph.nodes)}
    lines = [f"graph {name} {{", "\tnode [shape=box];"]
    for hexagon, identifier in identifiers.items():
        label = f"{hexagon}\\nlead {leading_vertex(hexagon)}"
        lines.append(f'\t{identifier} [label="{label}"];')
    for first, second, data in graph.edges(data=True):
        edge = f"{identifiers[first]} -- {identifiers[second]}"
        lines.append(f'\t{edge} [label="±{data["flip"]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

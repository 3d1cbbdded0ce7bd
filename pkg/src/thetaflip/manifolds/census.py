"""
Combinatorial census of the swept spine of a torus bundle.

For a minimal matrix A with c = c(A) > 0, the flips W₀ → AW₀ sweep θ-curves
through the product T² × [0, 1]. After the triangular cell next to the first
flip is collapsed, the spine keeps the fiber (four pentagons) and one 2-cell
for each θ-edge alive between L' = W₁ and L₁ = AW₀. A θ-edge is identified
with the hexagon vertex pair it carries.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from thetaflip.conjugacy import classify, is_minimal
from thetaflip.decorators import requires_sl2
from thetaflip.enums import OperatorKind
from thetaflip.exceptions import NotMinimalMatrix, ZeroComplexity
from thetaflip.flip_tree import geodesic, matrix_complexity
from thetaflip.hexagon import Hexagon, apply_matrix, standard_hexagon
from thetaflip.models import LatticeVector, UniMatrix

logger = logging.getLogger(__name__)

FIBER_PENTAGONS = 4
FIBER_ADJACENT_LOWER_BOUND = 4
FLAT_DESCRIPTIONS = {
    1: "three orientable annuli and three edges",
    2: "three nonorientable annuli and one edge",
    6: "one nonorientable annulus and one edge",
    3: "one orientable annulus and two edges",
}


@dataclass(frozen=True)
class SweptCell:
    """
    A 2-cell swept by one θ-edge. Flips are numbered 1 .. c−1 along L' → L₁;
    ``birth_flip`` is None for edges of L' and ``death_flip`` None for edges
    of L₁. Cells touching the fiber only carry a lower bound on their length.
    """

    edge: LatticeVector
    birth_flip: int | None
    death_flip: int | None
    boundary_length: int = field(init=False)
    exact: bool = field(init=False)

    def __post_init__(self):
        exact = self.birth_flip is not None and self.death_flip is not None
        if exact:
            # 2k − 2 for the k flips from birth to death, both included
            length = 2 * (self.death_flip - self.birth_flip)
        else:
            length = FIBER_ADJACENT_LOWER_BOUND
        object.__setattr__(self, "exact", exact)
        object.__setattr__(self, "boundary_length", length)

    @property
    def touches_fiber(self) -> bool:
        return not self.exact

    @property
    def length_text(self) -> str:
        return str(self.boundary_length) if self.exact else f"≥{self.boundary_length}"

    def to_dict(self) -> dict:
        return {
            "edge": list(self.edge),
            "birth_flip": self.birth_flip,
            "death_flip": self.death_flip,
            "boundary_length": self.length_text,
            "touches_fiber": self.touches_fiber,
        }

    @classmethod
    def from_dict(cls, data: dict) -> SweptCell:
        return cls(LatticeVector(*data["edge"]), data["birth_flip"], data["death_flip"])


@dataclass(frozen=True)
class SpineCensus:
    matrix: UniMatrix
    operator_complexity: int
    swept_cells: tuple[SweptCell, ...]
    pseudominimal: bool
    jordan_dichotomy_agrees: bool
    fiber_pentagons: int = FIBER_PENTAGONS

    @property
    def n_vertices(self) -> int:
        return self.operator_complexity + 5

    @property
    def n_edges(self) -> int:
        return 2 * self.n_vertices

    @property
    def n_cells(self) -> int:
        return self.fiber_pentagons + len(self.swept_cells)

    @property
    def unsimplified_vertices(self) -> int:
        """Vertices before the triangular cell at the first flip is collapsed."""
        return self.operator_complexity + 6

    @property
    def fiber_adjacent_cells(self) -> int:
        return sum(1 for cell in self.swept_cells if cell.touches_fiber)

    @property
    def interior_lengths(self) -> list[int]:
        return [cell.boundary_length for cell in self.swept_cells if cell.exact]

    def to_dict(self) -> dict:
        return {
            "matrix": [list(row) for row in self.matrix.rows],
            "operator_complexity": self.operator_complexity,
            "n_vertices": self.n_vertices,
            "n_edges": self.n_edges,
            "n_cells": self.n_cells,
            "fiber_pentagons": self.fiber_pentagons,
            "unsimplified_vertices": self.unsimplified_vertices,
            "fiber_adjacent_cells": self.fiber_adjacent_cells,
            "jordan_dichotomy_agrees": self.jordan_dichotomy_agrees,
            "pseudominimal": self.pseudominimal,
            "swept_cells": [cell.to_dict() for cell in self.swept_cells],
        }

    @classmethod
    def from_dict(cls, data: dict) -> SpineCensus:
        return cls(
            UniMatrix.from_rows(tuple(tuple(row) for row in data["matrix"])),
            data["operator_complexity"],
            tuple(SweptCell.from_dict(cell) for cell in data["swept_cells"]),
            data["pseudominimal"],
            data["jordan_dichotomy_agrees"],
            data["fiber_pentagons"],
        )


def _swept_cells(path: list[Hexagon]) -> list[SweptCell]:
    born: dict[LatticeVector, int | None] = {pair: None for pair in path[0].pairs}
    cells = []
    for flip, (current, following) in enumerate(zip(path, path[1:]), start=1):
        dying = current.replaced_vertex(following)
        (new_edge,) = set(following.pairs) - set(current.pairs)
        cells.append(SweptCell(dying, born.pop(dying), flip))
        born[new_edge] = flip
    cells.extend(SweptCell(edge, birth, None) for edge, birth in born.items())
    return sorted(cells, key=lambda cell: (cell.birth_flip or 0, cell.edge))


@requires_sl2
def spine_census(matrix: UniMatrix) -> SpineCensus:
    if not is_minimal(matrix):
        raise NotMinimalMatrix(f"{matrix} is not a minimal matrix of its operator")
    complexity = matrix_complexity(matrix)
    if complexity == 0:
        raise ZeroComplexity(
            f"{matrix} has c = 0; its bundle has the flat six-vertex spine"
        )
    path = list(geodesic(standard_hexagon(), apply_matrix(matrix, standard_hexagon())))
    cells = _swept_cells(path[1:])
    # the last flip must not undo the translate of the first one
    no_cancellation = complexity <= 1 or apply_matrix(matrix, path[1]) != path[-2]
    pseudominimal = no_cancellation and all(cell.boundary_length >= 4 for cell in cells)
    # expected: at most 5 fiber-adjacent cells for ±Jordan powers, 6 otherwise
    fiber_adjacent = sum(1 for cell in cells if cell.touches_fiber)
    is_jordan = classify(matrix).kind is OperatorKind.PARABOLIC
    agrees = fiber_adjacent <= 5 if is_jordan else fiber_adjacent == 6
    if not agrees:
        logger.info(
            "census of %s: %d fiber-adjacent cells (jordan=%s)",
            matrix,
            fiber_adjacent,
            is_jordan,
        )
    return SpineCensus(matrix, complexity, tuple(cells), pseudominimal, agrees)


def flat_description(period: int) -> str:
    """The flip-free polyhedron of a c = 0 monodromy with the given period."""
    return FLAT_DESCRIPTIONS[period]

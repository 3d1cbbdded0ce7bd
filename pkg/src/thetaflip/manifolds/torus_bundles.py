"""
Torus bundles M(𝒜) over the circle with monodromy 𝒜 ∈ SL(2,Z).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from thetaflip.conjugacy import OperatorClass, classify, conjugacy_key, minimize
from thetaflip.constants import TORUS_BUNDLE_FLOOR, TORUS_BUNDLE_SHIFT
from thetaflip.decorators import requires_sl2
from thetaflip.enums import BoundSource, OperatorKind
from thetaflip.flip_tree import matrix_complexity
from thetaflip.lattice import SWAP_C
from thetaflip.manifolds.census import SpineCensus, flat_description, spine_census
from thetaflip.manifolds.homology import HomologyReport, first_homology
from thetaflip.models import UniMatrix

logger = logging.getLogger(__name__)


def conjectured_bundle_complexity(operator_complexity: int) -> int:
    return max(TORUS_BUNDLE_FLOOR, operator_complexity + TORUS_BUNDLE_SHIFT)


def _matrix_to_list(matrix: UniMatrix) -> list[list[int]]:
    return [list(row) for row in matrix.rows]


def _matrix_from_list(rows: list[list[int]]) -> UniMatrix:
    return UniMatrix.from_rows(tuple(tuple(row) for row in rows))


def _class_to_dict(operator_class: OperatorClass) -> dict:
    return {
        "kind": operator_class.kind.value,
        "period": operator_class.period,
        "sign": operator_class.sign,
        "n": operator_class.n,
    }


def _class_from_dict(data: dict) -> OperatorClass:
    return OperatorClass(
        OperatorKind.from_value(data["kind"]), data["period"], data["sign"], data["n"]
    )


@dataclass(frozen=True)
class TorusBundleReport:
    input_matrix: UniMatrix
    operator_class: OperatorClass
    c_matrix: int
    c_operator: int
    minimal_matrix: UniMatrix
    conjugator: UniMatrix
    upper_bound_source: BoundSource
    homology: HomologyReport
    census: SpineCensus | None
    flat_description: str | None
    homeo_key: str

    @property
    def conjectured_complexity(self) -> int:
        return conjectured_bundle_complexity(self.c_operator)

    @property
    def unsimplified_bound(self) -> int:
        """Vertex count of the spine before its first triangular cell is collapsed."""
        return self.c_operator + 6

    @property
    def lower_bound_homology(self) -> int:
        return self.homology.lower_bound

    def to_dict(self) -> dict:
        return {
            "input_matrix": _matrix_to_list(self.input_matrix),
            "operator_class": _class_to_dict(self.operator_class),
            "c_matrix": self.c_matrix,
            "c_operator": self.c_operator,
            "minimal_matrix": _matrix_to_list(self.minimal_matrix),
            "conjugator": _matrix_to_list(self.conjugator),
            "conjectured_complexity": self.conjectured_complexity,
            "unsimplified_bound": self.unsimplified_bound,
            "upper_bound_source": self.upper_bound_source.value,
            "homology": self.homology.to_dict(),
            "lower_bound_homology": self.lower_bound_homology,
            "census": self.census.to_dict() if self.census else None,
            "flat_description": self.flat_description,
            "homeo_key": self.homeo_key,
        }

    @classmethod
    def from_dict(cls, data: dict) -> TorusBundleReport:
        return cls(
            input_matrix=_matrix_from_list(data["input_matrix"]),
            operator_class=_class_from_dict(data["operator_class"]),
            c_matrix=data["c_matrix"],
            c_operator=data["c_operator"],
            minimal_matrix=_matrix_from_list(data["minimal_matrix"]),
            conjugator=_matrix_from_list(data["conjugator"]),
            upper_bound_source=BoundSource.from_value(data["upper_bound_source"]),
            homology=HomologyReport.from_dict(data["homology"]),
            census=SpineCensus.from_dict(data["census"]) if data["census"] else None,
            flat_description=data["flat_description"],
            homeo_key=data["homeo_key"],
        )

    def lines(self) -> list[str]:
        rows = [
            f"matrix: {self.input_matrix}",
            f"class: {self.operator_class}",
            f"c(A): {self.c_matrix}",
            f"c(op): {self.c_operator}",
            f"minimal matrix: {self.minimal_matrix} (conjugator {self.conjugator})",
            f"conjectured complexity: {self.conjectured_complexity}"
            f" ({self.upper_bound_source.value})",
            f"unsimplified spine vertices: {self.unsimplified_bound}",
            f"H1: {self.homology} (lower bound {self.lower_bound_homology})",
            f"homeomorphism key: {self.homeo_key}",
        ]
        if self.flat_description is not None:
            rows.append(f"flat spine: 6 vertices, {self.flat_description}")
        if self.census is not None:
            rows.append(
                f"census: n={self.census.n_vertices} edges={self.census.n_edges}"
                f" cells={self.census.n_cells}"
                f" pseudominimal={str(self.census.pseudominimal).lower()}"
            )
        return rows


@requires_sl2
def bundle_homeo_key(matrix: UniMatrix) -> str:
    """
    M(A) and M(B) are homeomorphic iff B is GL(2,Z)-conjugate to A or A⁻¹, so
    the key is the least conjugacy key over A, A⁻¹ and their conjugates by
    the coordinate swap C.
    """
    inverse = matrix.inverse()
    candidates = (matrix, inverse, SWAP_C @ matrix @ SWAP_C, SWAP_C @ inverse @ SWAP_C)
    return str(min(conjugacy_key(candidate) for candidate in candidates))


@requires_sl2
def bundles_homeomorphic(first: UniMatrix, second: UniMatrix) -> bool:
    return bundle_homeo_key(first) == bundle_homeo_key(second)


@requires_sl2
def torus_bundle_report(matrix: UniMatrix) -> TorusBundleReport:
    operator_class = classify(matrix)
    result = minimize(matrix)
    complexity = result.operator_complexity
    if complexity == 0:
        source = BoundSource.FLAT_SPINE
        census = None
        description = flat_description(operator_class.period)
    else:
        source = BoundSource.SWEPT_SPINE
        census = spine_census(result.minimal)
        description = None
    logger.debug("bundle of %s: c(op)=%d via %s", matrix, complexity, source.value)
    return TorusBundleReport(
        input_matrix=matrix,
        operator_class=operator_class,
        c_matrix=matrix_complexity(matrix),
        c_operator=complexity,
        minimal_matrix=result.minimal,
        conjugator=result.conjugator,
        upper_bound_source=source,
        homology=first_homology(matrix),
        census=census,
        flat_description=description,
        homeo_key=bundle_homeo_key(matrix),
    )

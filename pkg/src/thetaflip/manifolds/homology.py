from __future__ import annotations

from dataclasses import dataclass, field

from thetaflip.decorators import requires_sl2
from thetaflip.lattice import smith_invariants
from thetaflip.models import UniMatrix


@dataclass(frozen=True)
class HomologyReport:
    """
    H₁(M(𝒜)) = Z ⊕ coker(A − I), as a Betti number and torsion coefficients.

    The vertex count of a special spine of a closed manifold is at least
    b₁ − 1, which gives ``lower_bound``.
    """

    betti: int
    torsion: tuple[int, ...]
    lower_bound: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "lower_bound", max(0, self.betti - 1))

    def to_dict(self) -> dict:
        return {
            "betti": self.betti,
            "torsion": list(self.torsion),
            "lower_bound": self.lower_bound,
        }

    @classmethod
    def from_dict(cls, data: dict) -> HomologyReport:
        return cls(data["betti"], tuple(data["torsion"]))

    def __str__(self) -> str:
        parts = ["Z"] * self.betti + [f"Z{order}" for order in self.torsion]
        return " ⊕ ".join(parts)


@requires_sl2
def first_homology(matrix: UniMatrix) -> HomologyReport:
    a, b, c, d = matrix.entries
    invariants = smith_invariants((a - 1, b, c, d - 1))
    zeros = sum(1 for invariant in invariants if invariant == 0)
    return HomologyReport(1 + zeros, tuple(value for value in invariants if value > 1))

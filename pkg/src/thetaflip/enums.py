from __future__ import annotations

from enum import Enum


class OperatorKind(Enum):
    ELLIPTIC = ("elliptic", "finite order, |trace| < 2")
    PARABOLIC = ("parabolic", "conjugate to a power of ±Jordan block, |trace| = 2")
    HYPERBOLIC = ("hyperbolic", "two real eigenlines, |trace| > 2")

    @property
    def value(self) -> str:
        return self._value_[0]

    @property
    def description(self) -> str:
        return self._value_[1]

    @staticmethod
    def from_trace(trace: int) -> "OperatorKind":
        if abs(trace) < 2:
            return OperatorKind.ELLIPTIC
        elif abs(trace) == 2:
            return OperatorKind.PARABOLIC
        return OperatorKind.HYPERBOLIC

    @staticmethod
    def from_value(value: str) -> "OperatorKind":
        for kind in OperatorKind:
            if kind.value == value:
                return kind
        raise ValueError(f"'{value}' is not an operator kind.")


class BoundSource(Enum):
    SWEPT_SPINE = (
        "swept-spine",
        "spine swept by the minimal flip sequence, c+5 vertices",
    )
    FLAT_SPINE = ("flat-spine", "six-vertex spine of a flat bundle, c = 0")

    @property
    def value(self) -> str:
        return self._value_[0]

    @property
    def description(self) -> str:
        return self._value_[1]

    @staticmethod
    def from_value(value: str) -> "BoundSource":
        for source in BoundSource:
            if source.value == value:
                return source
        raise ValueError(f"'{value}' is not a bound source.")

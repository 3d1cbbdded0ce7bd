from __future__ import annotations

import logging
import threading
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum, auto
from typing import Iterator

from thetaflip.constants import DEFAULT_SEED
from thetaflip.exceptions import ThetaFlipException

logger = logging.getLogger(__name__)

MAX_REPORTED_FAILURES = 20


class SuiteState(Enum):
    QUEUED = auto()
    RUNNING = auto()
    COMPLETED = auto()
    CANCELLED = auto()


@dataclass(frozen=True)
class VerificationSettings:
    """
    Overrides for one verification run. ``None`` keeps each suite's default
    bound; ``pmax`` and ``radius`` map to the suite's main sweep parameter.
    """

    pmax: int | None = None
    seed: int = DEFAULT_SEED
    radius: int | None = None
    samples: int | None = None
    cross_check: bool = True

    def __post_init__(self):
        for name in ("pmax", "radius", "samples"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ValueError(f"{name} must be nonnegative, got {value}")

    def pick(self, name: str, default: int) -> int:
        value = getattr(self, name)
        return default if value is None else value


@dataclass(frozen=True)
class Check:
    label: str
    passed: bool


@dataclass(frozen=True)
class SuiteResult:
    name: str
    state: SuiteState
    checked: int
    failures: tuple[str, ...]
    failure_count: int

    @property
    def passed(self) -> bool:
        return self.state is SuiteState.COMPLETED and self.failure_count == 0

    def row(self) -> str:
        if self.passed:
            status = "PASS"
        elif self.state is SuiteState.CANCELLED:
            status = "CANCELLED"
        else:
            status = "FAIL"
        return (
            f"{self.name:<20} {status:<9} {self.checked:>8} checks"
            f" {self.failure_count:>6} failures"
        )


def check(label: str, passed: bool) -> Check:
    return Check(label, bool(passed))


class Suite(ABC):
    """A named family of exact checks; ``run`` never raises for a failed check."""

    name: str = ""
    description: str = ""

    def __init__(self, settings: VerificationSettings | None = None):
        self.settings = settings or VerificationSettings()
        self.state = SuiteState.QUEUED
        self._stop_event = threading.Event()

    @abstractmethod
    def checks(self) -> Iterator[Check]:
        """Yield every check of the suite in a deterministic order."""

    def run(self) -> SuiteResult:
        self.state = SuiteState.RUNNING
        checked, failure_count = 0, 0
        failures: list[str] = []

        def record(label: str) -> None:
            nonlocal failure_count
            failure_count += 1
            if len(failures) < MAX_REPORTED_FAILURES:
                failures.append(label)

        try:
            for item in self.checks():
                if self.is_cancelled:
                    break
                checked += 1
                if not item.passed:
                    record(item.label)
        except ThetaFlipException as e:
            record(f"{type(e).__name__}: {e}")
        if self.is_cancelled:
            self.state = SuiteState.CANCELLED
        else:
            self.state = SuiteState.COMPLETED
        logger.debug(
            "suite %s: %d checks, %d failures", self.name, checked, failure_count
        )
        return SuiteResult(
            self.name, self.state, checked, tuple(failures), failure_count
        )

    def cancel(self) -> None:
        self._stop_event.set()
        self.state = SuiteState.CANCELLED

    @property
    def is_cancelled(self) -> bool:
        return self._stop_event.is_set()

from .base import Check, Suite, SuiteResult, SuiteState, VerificationSettings, check
from .runner import SuiteRunner
from .suites import SUITES, build_suites

__all__ = [
    "Check",
    "SUITES",
    "Suite",
    "SuiteResult",
    "SuiteRunner",
    "SuiteState",
    "VerificationSettings",
    "build_suites",
    "check",
]

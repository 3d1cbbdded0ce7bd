from __future__ import annotations


class ThetaFlipException(Exception):
    pass


class NotUnimodular(ThetaFlipException):
    pass


class NotSL2(ThetaFlipException):
    pass


class NotUnimodularPair(ThetaFlipException):
    pass


class NotAdmissible(ThetaFlipException):
    pass


class NotCoprime(ThetaFlipException):
    pass


class NonPositive(ThetaFlipException):
    pass


class InvalidRange(ThetaFlipException):
    pass


class RadiusTooLarge(ThetaFlipException):
    pass


class PeriodicOperator(ThetaFlipException):
    pass


class NotHyperbolic(ThetaFlipException):
    pass


class EqualEndpoints(ThetaFlipException):
    pass


class SideNotInTriangle(ThetaFlipException):
    pass


class VertexOfTriangle(ThetaFlipException):
    pass


class NotMinimalMatrix(ThetaFlipException):
    pass


class ZeroComplexity(ThetaFlipException):
    pass


class InvalidRational(ThetaFlipException, ValueError):
    pass


class InvalidMatrix(ThetaFlipException, ValueError):
    pass


class InvalidPath(ThetaFlipException):
    pass


class OracleMismatch(ThetaFlipException):
    pass


class NotElliptic(ThetaFlipException):
    pass

"""Exception types shared across the package."""


class XFormLabError(Exception):
    """Base class for all library errors."""


class DivisionByZero(XFormLabError, ZeroDivisionError):
    pass


class FieldMismatch(XFormLabError):
    pass


class SizeMismatch(XFormLabError):
    pass


class Singular(XFormLabError):
    pass


class NotSquarefree(XFormLabError):
    pass


class RootSearchExhausted(XFormLabError):
    """Rational root search could not certify completeness.

    Carries the residual factor whose rational roots remain uncertified.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class NotCoprime(XFormLabError):
    pass


class NotMinpolyFactorization(XFormLabError):
    pass


class WrongMinpoly(XFormLabError):
    pass


class ReducibleQuadratic(XFormLabError):
    pass


class NonNegativeDiscriminant(XFormLabError):
    pass


class NoApplicableCase(XFormLabError):
    pass


class WrongView(XFormLabError):
    pass


class ParseError(XFormLabError):
    pass

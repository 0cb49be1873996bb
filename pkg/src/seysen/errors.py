"""Exception types raised across the package."""


class SeysenError(Exception):
    """Base class for all errors raised by :mod:`seysen`."""


class SingularMatrix(SeysenError, ZeroDivisionError):
    pass


class NotSymmetric(SeysenError, ValueError):
    pass


class NoConvergence(SeysenError, ArithmeticError):
    pass


class RankDeficient(SeysenError, ValueError):
    """The rows of a basis are linearly dependent.

    ``certificate`` carries the offending Gram determinant (exactly zero in
    exact mode, a tiny float in float mode).
    """

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class RouteMismatch(SeysenError, AssertionError):
    """Two exact evaluations of the Seysen measure disagree (a bug trap)."""


class DomainError(SeysenError, ValueError):
    pass


class InvariantBroken(SeysenError, AssertionError):
    pass


class GenerationFailed(SeysenError, RuntimeError):
    pass


class ParseError(SeysenError, ValueError):
    def __init__(self, message, line, column):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class SweepLimitReached(UserWarning):
    """Seysen reduction stopped at ``max_sweeps`` before reaching a fixed point."""

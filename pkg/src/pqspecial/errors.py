"""Exception hierarchy shared by every module."""


class PQSpecialError(Exception):
    """Base class for errors raised by pqspecial."""


class DomainError(PQSpecialError, ValueError):
    """An argument lies outside the domain where the function is defined."""


class RangeError(PQSpecialError, OverflowError):
    """The result exists but is not representable as a float."""


class IntegrandError(PQSpecialError, ArithmeticError):
    """The integrand produced NaN at some abscissa."""

    def __init__(self, message, abscissa):
        super().__init__(f"{message} (at t={abscissa!r})")
        self.abscissa = abscissa


class PreconditionError(PQSpecialError, ValueError):
    """A checker's hypothesis or feasibility condition is not met.

    Checkers raise this instead of reporting ``violated``: an inequality whose
    hypothesis fails says nothing about the inequality.
    """

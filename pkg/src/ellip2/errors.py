"""Exception types shared by every module."""


class DomainError(ValueError):
    """An argument lies outside the region where the quantity is defined."""


class ConvergenceError(ArithmeticError):
    """A series or quadrature exhausted its budget before meeting tolerance."""

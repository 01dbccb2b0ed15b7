"""Exception types shared across the package."""


class PolynomialError(Exception):
    """Base class for errors raised by the polynomial kernel."""


class NonDivisibleError(PolynomialError):
    """No exact quotient in Z[s,t] exists for the requested division."""


class ParseError(PolynomialError):
    """Malformed polynomial text; ``offset`` is the byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class IntegralityError(PolynomialError):
    """An exact division that is guaranteed by theory failed.

    Raised when a lucanomial or Lucas-Catalan quotient does not land in
    Z[s,t]; this signals either a falsified identity or a kernel defect
    and is never silently absorbed.
    """

    def __init__(self, message: str, numerator=None, denominator=None):
        super().__init__(message)
        self.numerator = numerator
        self.denominator = denominator

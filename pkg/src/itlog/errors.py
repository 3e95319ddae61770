class ItlogError(Exception):
    """Base class for all errors raised by this package."""


class NotAUnit(ItlogError):
    pass


class OrderMismatch(ItlogError):
    pass


class NotWellDefined(ItlogError):
    """A formal log/exp series was applied to a series with nonzero constant term."""


class OutOfDomain(ItlogError):
    pass


class NotAPolynomialForm(ItlogError):
    pass


class NumericDomainError(ItlogError, ArithmeticError):
    pass


class ParseError(ItlogError, ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset

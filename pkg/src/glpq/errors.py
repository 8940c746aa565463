"""Exception hierarchy shared by every module of the package."""


class GlpqError(Exception):
    """Base class for all errors raised by glpq."""


class ZeroDenominator(GlpqError):
    """A fraction's denominator vanishes under the active ring mode."""


class DivisionByZero(GlpqError, ZeroDivisionError):
    pass


class RingMismatch(GlpqError):
    pass


class NegativeExponentOnNonInvertible(GlpqError):
    pass


class AlgebraMismatch(GlpqError):
    pass


class Unbounded(GlpqError):
    """A basis enumeration would be infinite."""


class AntipodeUnavailable(GlpqError):
    pass


class TorusPointOutsideSubgroup(GlpqError):
    pass


class NonToralElement(GlpqError):
    pass


class SuiteInapplicable(GlpqError):
    pass


class NonTermination(GlpqError):
    """Rewriting exceeded its step budget."""


class ExpressionSyntaxError(GlpqError):
    """Malformed expression text; ``offset`` is the byte offset of the problem."""

    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UnknownSymbol(GlpqError):
    def __init__(self, name, offset=None):
        where = "" if offset is None else f" at offset {offset}"
        super().__init__(f"unknown symbol {name!r}{where}")
        self.name = name
        self.offset = offset


class InvalidExponent(GlpqError):
    """Negative power of something that is not invertible."""

    def __init__(self, message, offset=None):
        where = "" if offset is None else f" at offset {offset}"
        super().__init__(f"{message}{where}")
        self.offset = offset

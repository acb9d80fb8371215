"""Exception hierarchy shared by every module."""


class IrredcompError(Exception):
    """Base class for all library errors."""


class PreconditionError(IrredcompError, ValueError):
    """An input violates the hypotheses of an operation."""


class VerificationError(IrredcompError, ArithmeticError):
    """A computed result failed one of its checks.

    ``report`` carries the partially filled construction report when the
    failure happened inside a construction.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ContextError(IrredcompError, TypeError):
    """Operands live in incompatible fields."""


class FactorizationRangeError(IrredcompError, ArithmeticError):
    """Trial division could not certify a complete factorization."""


class OracleRangeError(IrredcompError, ValueError):
    """Input is too large for a brute-force oracle."""


class ParseError(IrredcompError, ValueError):
    """Malformed polynomial or field text."""

    def __init__(self, message, text="", pos=None):
        where = f" at position {pos}" if pos is not None else ""
        super().__init__(f"{message}{where}: {text!r}" if text else f"{message}{where}")
        self.text = text
        self.pos = pos

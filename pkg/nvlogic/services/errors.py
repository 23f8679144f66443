from typing import FrozenSet, Optional


class LogicError(Exception):
    """Base class for every error raised by the engine."""


# ---- values ----
class LengthMismatch(LogicError):
    pass


class OutOfRange(LogicError):
    pass


class ZeroMass(LogicError):
    pass


class InvalidGroups(LogicError):
    pass


# ---- connectives ----
class SignatureMismatch(LogicError):
    pass


class InvalidOrder(LogicError):
    pass


class IntervalUnsupported(LogicError):
    pass


class AsymmetricSignature(LogicError):
    pass


class UnsupportedNot(AsymmetricSignature):
    """`~` evaluated under a neutrosophic signature with p != s."""


# ---- symbolic logics ----
class BadSymbol(LogicError):
    pass


class BadSize(LogicError):
    pass


class Duplicate(LogicError):
    pass


class TableError(LogicError):
    pass


# ---- formulas ----
class FormulaSyntaxError(LogicError):
    """Parse failure with a 1-based position and the set of expected tokens."""

    def __init__(self, message: str, line: int, column: int, expected: Optional[FrozenSet[str]] = None):
        self.line = line
        self.column = column
        self.expected = frozenset(expected or ())
        detail = f" (expected {', '.join(sorted(self.expected))})" if self.expected else ""
        super().__init__(f"line {line}, column {column}: {message}{detail}")


class UnknownLiteral(LogicError):
    pass


class UnboundVariable(LogicError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unbound variable {name!r}")


class InfiniteDomain(LogicError):
    pass


class SettingsError(LogicError):
    pass


class InvalidSignature(LogicError):
    pass


class UnknownName(LogicError):
    """A family, mode, bound or preset name that is not recognised."""

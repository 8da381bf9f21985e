"""Exception types shared across the package."""

from __future__ import annotations


class PadicLabError(Exception):
    """Base class for errors raised by this package."""


class ParseError(PadicLabError):
    """Syntax or validation error in a DSL expression, with source position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class ConfigError(PadicLabError):
    """Invalid experiment configuration; carries the offending key path."""

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


class MagnitudeRangeError(PadicLabError):
    """A norm value does not fit the float range; carries the exact exponent."""

    def __init__(self, exponent):
        super().__init__(f"norm p^(-({exponent})) is outside the float range")
        self.exponent = exponent


class DivergenceError(PadicLabError):
    """An iteration sequence required to converge was certified divergent."""

    def __init__(self, message: str, trace=None):
        super().__init__(message)
        self.trace = trace

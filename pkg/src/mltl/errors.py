"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class MLTLError(Exception):
    """Base class for all errors raised by this package."""


class IllFormedInterval(MLTLError, ValueError):
    """A temporal operator carries an interval with ``lo > hi``."""

    def __init__(self, formula):
        self.formula = formula
        super().__init__(f"ill-formed interval in formula: {formula}")


class BudgetExceeded(MLTLError):
    """Exhaustive trace enumeration would exceed the configured budget."""


class PreconditionViolated(MLTLError, ValueError):
    """An argument falls outside an operation's documented domain."""


class DichotomyViolation(MLTLError):
    """A residual on a trace at least ``complen`` long matched neither constant.

    Correct progression can never produce this; it indicates a bug.
    """


class CrossCheckFailed(MLTLError):
    """A benchmark label disagreed with its independent progression check."""


class ParseError(MLTLError, ValueError):
    """Malformed formula or trace text.

    ``span`` is a ``SourceSpan`` locating the offending input.
    """

    def __init__(self, message: str, span, text: str | None = None):
        self.message = message
        self.span = span
        self.text = text
        super().__init__(f"{message} at {span.start}..{span.end}")

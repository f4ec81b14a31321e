"""Exception hierarchy shared by every module."""


class GlnnError(Exception):
    """Base class for all library errors."""


class InvalidWeightError(GlnnError, ValueError):
    """A tuple that is not a dominant weight, or an inconsistent diagram."""


class DomainError(GlnnError, ValueError):
    """The operation is undefined for this (valid) input, e.g. phi of a typical weight."""


class UnsupportedContextError(DomainError):
    """A translation functor position outside the supported move contexts."""


class ParseError(GlnnError, ValueError):
    """Malformed text input. ``position`` is the 0-based offending column."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at column {position}: {text!r}")

    def annotated(self) -> str:
        return f"{self.text}\n{' ' * self.position}^\n{self.args[0]}"

"""Exception types shared across the codecs."""

from __future__ import annotations


class CodecError(ValueError):
    """An input outside the domain of a codec operation."""


class ParseError(CodecError):
    """Malformed term or signature text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"parse error at position {position}: {message}")
        self.position = position


class SignatureError(CodecError):
    """A signature violating one of its invariants."""

from __future__ import annotations

class SparseLSError(Exception):
    """Base class for errors raised by this package."""


class ParseError(SparseLSError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ConfigurationError(SparseLSError, ValueError):
    pass


class InputError(SparseLSError, ValueError):
    """A documented precondition of an operation was violated."""


class ShallownessError(SparseLSError):
    """A member of a shallow collection does not induce a connected subgraph."""

    def __init__(self, owner: int, members):
        self.owner = owner
        super().__init__(f"C_{owner} = {list(members)} induces a disconnected subgraph")

"""Exception hierarchy shared by every module."""

from __future__ import annotations


class C6CoverError(Exception):
    """Base class for toolkit errors."""


class RangeError(C6CoverError, ValueError):
    """A vertex index or parameter is outside its allowed range."""


class MalformedEdge(C6CoverError, ValueError):
    """An edge does not consist of three distinct vertices."""


class DuplicateEdge(C6CoverError, ValueError):
    """The same triple was supplied twice."""


class UnsupportedDegreeOrder(C6CoverError, ValueError):
    """Degree requested for a vertex set that is not of size 1 or 2."""


class TooFewVertices(C6CoverError, ValueError):
    pass


class TooLarge(C6CoverError, ValueError):
    """A search would exceed the supported state-space size."""


class FTooLarge(TooLarge):
    pass


class PreconditionViolated(C6CoverError, ValueError):
    """The hypothesis of a lemma or claim does not hold for the input."""


class BadArguments(C6CoverError, ValueError):
    pass


class ParseError(C6CoverError, ValueError):
    """A graph file could not be parsed.

    ``code`` is a stable diagnostic identifier, ``line`` and ``column`` are
    1-based positions (0 when not applicable).
    """

    def __init__(self, code: str, message: str, line: int = 0, column: int = 0):
        self.code = code
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {code}: {message}")

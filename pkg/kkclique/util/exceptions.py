"""
Exception classes raised by kkclique.

Every error the package raises on purpose derives from ``KKCliqueError`` so
callers (and the command line) can tell input problems from bugs.
"""


class KKCliqueError(Exception):
    """Base class for all kkclique errors."""


class ConfigError(KKCliqueError):
    """An environment override could not be parsed."""


class PreconditionError(KKCliqueError, ValueError):
    """The arguments of an operation violate its preconditions."""


class ScopeError(PreconditionError):
    """An exhaustive search was asked for more vertices than the hard cap."""


class CheckpointError(KKCliqueError):
    """A checkpoint file is unreadable or belongs to a different search."""


class GraphFormatError(KKCliqueError):
    """
    A graph file does not follow the edge-list format.

    Attributes:
        line: int
            1-based line number of the offending line (0 when the problem is
            not tied to a single line, e.g. a missing header)
    """

    def __init__(self, message: str, line: int = 0) -> None:
        self.line = line
        if line:
            message = f"line {line}: {message}"
        super().__init__(message)

"""Exception types shared across the package.

Everything raised on purpose derives from DichromaError so callers (and the
CLI) can separate expected failures from genuine bugs.  InternalInconsistency
is the one exception that always signals a bug: it is raised when a
theorem-backed step produces something that fails its own validation.
"""


class DichromaError(Exception):
    """Base class for all errors raised by this package."""


class InvalidVertex(DichromaError):
    """An arc endpoint is outside range(n)."""


class SelfLoop(DichromaError):
    """An arc u -> u was supplied; loops are not part of the model."""


class InvalidParameter(DichromaError):
    """An argument is outside its documented domain."""


class MissingList(DichromaError):
    """A list assignment does not cover every vertex."""


class NotPartialKL(DichromaError):
    """A partial colouring fails the repeated-colour precondition."""


class CompletionStuck(DichromaError):
    """Greedy completion found no free colour (unreachable when preconditions hold)."""


class PreconditionViolated(DichromaError):
    """A theorem's hypothesis does not hold for the given input."""


class NoASR(DichromaError):
    """No acyclic system of representatives exists for the instance."""


class NotDense(DichromaError):
    """The designated vertex is not dense on the requested side."""


class InstanceTooLarge(DichromaError):
    """Exact computation was requested above the configured size cap."""


class CapExceeded(DichromaError):
    """An enumeration cap (for example the maximal-clique cap) was hit."""


class InternalInconsistency(DichromaError):
    """A validated invariant failed; this is a bug, never a legitimate outcome."""


class ParseError(DichromaError):
    """A DGF document is malformed; carries 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column

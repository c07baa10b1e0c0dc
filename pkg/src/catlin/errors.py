"""Exception types shared across the package."""

from __future__ import annotations


class CatlinError(Exception):
    """Base class for every error this package raises on purpose."""


class PreconditionViolation(CatlinError):
    """An input failed a documented hypothesis of an operation.

    ``which`` names the violated hypothesis; ``witness`` carries the
    offending object (a vertex, an edge, a clique, ...) when one exists.
    """

    def __init__(self, which: str, witness: object = None):
        self.which = which
        self.witness = witness
        detail = f" (witness: {witness!r})" if witness is not None else ""
        super().__init__(f"{which}{detail}")


class InternalInvariantViolation(CatlinError):
    """A runtime certification check failed.

    This is never expected on valid inputs: it signals a mismatch between
    the engine and the mathematical argument it implements.  ``stage``
    names the failed check and ``witness`` carries the offending object,
    usually a graph, so the failure can be reproduced.
    """

    def __init__(self, stage: str, witness: object = None):
        self.stage = stage
        self.witness = witness
        super().__init__(f"invariant violated at {stage}")


class CapacityError(CatlinError):
    """An exact solver was asked to exceed its configured size limit."""


class FormatError(CatlinError):
    """Malformed text for one of the graph codecs."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class FormatWarning(UserWarning):
    """Recoverable oddity in an input file, e.g. a wrong edge count."""

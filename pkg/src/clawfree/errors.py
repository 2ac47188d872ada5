"""Exception hierarchy shared by every module."""

from __future__ import annotations


class GraphInputError(ValueError):
    """An argument is not valid for the requested operation."""


class FormatError(GraphInputError):
    """Malformed serialized graph."""

    def __init__(self, message: str, offset: int | None = None, line: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.offset = offset
        self.line = line


class UnsupportedSizeError(GraphInputError):
    """The graph is larger than the operation supports."""


class PreconditionError(GraphInputError):
    """An operation precondition does not hold."""


class ClawError(PreconditionError):
    """The graph contains an induced claw; ``witness`` is (center, leaf, leaf, leaf)."""

    def __init__(self, witness: tuple[int, int, int, int]):
        super().__init__(f"graph contains an induced claw (center {witness[0]}, leaves {witness[1:]})")
        self.witness = witness

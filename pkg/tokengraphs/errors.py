"""Exception types shared across the package."""

from __future__ import annotations


class ParameterError(ValueError):
    """An argument is out of range, has the wrong arity, or breaks a precondition."""


class Graph6Error(ValueError):
    """Malformed graph6 input. ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class BudgetExceeded(RuntimeError):
    """A solver hit its node or wall-clock cap before finishing."""

    def __init__(self, message: str, nodes: int = 0, elapsed: float = 0.0) -> None:
        super().__init__(message)
        self.nodes = nodes
        self.elapsed = elapsed


class UnknownCheckError(ParameterError):
    def __init__(self, unknown: list[str], valid: list[str]) -> None:
        super().__init__(
            f"Unknown check(s): {', '.join(unknown)}. Valid names: {', '.join(valid)}"
        )
        self.unknown = unknown
        self.valid = valid

"""Cooperative node / wall-clock caps for the exact solvers."""

from __future__ import annotations

import time

from .errors import BudgetExceeded, ParameterError


class Budget:
    """Counts search nodes and enforces an optional deadline.

    Solvers call :meth:`tick` once per node. ``None`` limits mean unbounded.
    """

    def __init__(self, node_limit: int | None = None, timeout: float | None = None) -> None:
        if node_limit is not None and node_limit <= 0:
            raise ParameterError(f"node_limit: must be positive, got {node_limit}")
        if timeout is not None and timeout <= 0:
            raise ParameterError(f"timeout: must be positive, got {timeout}")
        self.node_limit = node_limit
        self.timeout = timeout
        self.nodes = 0
        self._start = time.monotonic()
        self._deadline = None if timeout is None else self._start + timeout

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self._start

    def tick(self, count: int = 1) -> None:
        self.nodes += count
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise BudgetExceeded(
                f"node budget of {self.node_limit} exceeded", self.nodes, self.elapsed
            )
        # clock reads are not free; sample every 1024 nodes
        if self._deadline is not None and (self.nodes & 1023) == 0:
            if time.monotonic() > self._deadline:
                raise BudgetExceeded(
                    f"time budget of {self.timeout:.1f}s exceeded", self.nodes, self.elapsed
                )


def tick(budget: Budget | None) -> None:
    if budget is not None:
        budget.tick()

"""Named graph families used throughout the checks."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations

from .errors import ParameterError
from .graph import Graph, from_edge_list

log = logging.getLogger(__name__)

# family -> (min params, max params); None = unbounded
ARITY: dict[str, tuple[int, int | None]] = {
    "path": (1, 1),
    "cycle": (1, 1),
    "complete": (1, 1),
    "complete_bipartite": (2, 2),
    "star": (1, 1),
    "diamond": (0, 0),
    "kneser": (2, 2),
    "cycle_with_bicliques": (1, None),
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "params", tuple(self.params))
        if self.family not in ARITY:
            raise ParameterError(
                f"family: unknown family {self.family!r}; choose from {', '.join(ARITY)}"
            )
        lo, hi = ARITY[self.family]
        count = len(self.params)
        if count < lo or (hi is not None and count > hi):
            want = str(lo) if lo == hi else f"at least {lo}"
            raise ParameterError(f"params: {self.family} takes {want} parameter(s), got {count}")
        for i, p in enumerate(self.params):
            if p < 1:
                raise ParameterError(f"params[{i}]: must be >= 1, got {p}")
        if self.family in ("cycle", "cycle_with_bicliques") and self.params[0] < 3:
            raise ParameterError(f"params[0]: cycle length must be >= 3, got {self.params[0]}")
        if self.family == "cycle_with_bicliques" and len(self.params) - 1 > self.params[0]:
            raise ParameterError(
                f"params: {len(self.params) - 1} attachments exceed cycle length {self.params[0]}"
            )
        if self.family == "kneser":
            n, k = self.params
            if n < 2 * k:
                raise ParameterError(f"params: kneser needs n >= 2k, got n={n}, k={k}")

    def label(self) -> str:
        return f"{self.family}({','.join(map(str, self.params))})"


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return from_edge_list(n, combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}; side M is vertices ``0..m-1``."""
    return from_edge_list(m + n, [(a, m + b) for a in range(m) for b in range(n)])


def star(n: int) -> Graph:
    """K_{1,n} with centre 0."""
    return complete_bipartite(1, n)


def diamond() -> Graph:
    """K_4 minus the edge (2, 3)."""
    return from_edge_list(4, [e for e in combinations(range(4), 2) if e != (2, 3)])


def kneser(n: int, k: int) -> Graph:
    """KG_{n,k}; vertex i is the i-th lexicographic k-subset of ``range(n)``."""
    subsets = [frozenset(s) for s in combinations(range(n), k)]
    edges = [
        (i, j)
        for i, j in combinations(range(len(subsets)), 2)
        if not subsets[i] & subsets[j]
    ]
    return from_edge_list(len(subsets), edges)


def cycle_with_bicliques(length: int, *sizes: int) -> Graph:
    """Cycle 0..length-1 with a K_{2,m_i} glued at cycle vertex i.

    Each block adds ``m_i`` fresh vertices followed by an apex ``u_i``; cycle vertex
    i and the apex both join every fresh vertex.
    """
    edges = [(i, (i + 1) % length) for i in range(length)]
    nxt = length
    for i, size in enumerate(sizes):
        fresh = list(range(nxt, nxt + size))
        apex = nxt + size
        for x in fresh:
            edges.append((i, x))
            edges.append((apex, x))
        nxt = apex + 1
    return from_edge_list(nxt, edges)


_BUILDERS = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "diamond": diamond,
    "kneser": kneser,
    "cycle_with_bicliques": cycle_with_bicliques,
}


def generate(spec: FamilySpec) -> Graph:
    g = _BUILDERS[spec.family](*spec.params)
    log.debug("Generated %s: %d vertices, %d edges", spec.label(), g.n, g.edge_count)
    return g

"""Exhaustive reference implementations for small graphs.

These are deliberately naive; they exist to cross-check the branch-and-bound
solvers on graphs with at most a dozen vertices.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph


def _mask(vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _independent(g: Graph, subset) -> bool:
    m = _mask(subset)
    return all(not g.masks[v] & m for v in subset)


def _clique(g: Graph, subset) -> bool:
    return all(g.has_edge(u, v) for u, v in combinations(subset, 2))


def _dominating(g: Graph, subset) -> bool:
    covered = _mask(subset)
    for v in subset:
        covered |= g.masks[v]
    return covered == (1 << g.n) - 1


def alpha(g: Graph) -> int:
    for size in range(g.n, 0, -1):
        if any(_independent(g, s) for s in combinations(range(g.n), size)):
            return size
    return 0


def omega(g: Graph) -> int:
    for size in range(g.n, 0, -1):
        if any(_clique(g, s) for s in combinations(range(g.n), size)):
            return size
    return 0


def gamma(g: Graph) -> int:
    for size in range(g.n + 1):
        if any(_dominating(g, s) for s in combinations(range(g.n), size)):
            return size
    return g.n


def independent_gamma(g: Graph) -> int:
    for size in range(g.n + 1):
        if any(_dominating(g, s) and _independent(g, s) for s in combinations(range(g.n), size)):
            return size
    return g.n


def chi(g: Graph) -> int:
    """Fewest colours over all set partitions into independent sets."""
    if g.n == 0:
        return 0
    best = g.n
    colors = [-1] * g.n

    def assign(v: int, used: int) -> None:
        nonlocal best
        if used >= best:
            return
        if v == g.n:
            best = used
            return
        for c in range(used + 1):
            if any(colors[u] == c for u in range(v) if g.has_edge(u, v)):
                continue
            colors[v] = c
            assign(v + 1, max(used, c + 1))
        colors[v] = -1

    assign(0, 0)
    return best

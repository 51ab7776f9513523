"""Explicit three-colourings of the non-bipartite component of F_2^2(C_n), n even.

The rules are stated on 1-based cycle labels 1..n, with the label n compared as
smaller than 1. Configurations are returned 0-based. Whether a rule gives a proper
colouring is a separate question answered by :func:`coloring_conflicts`.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping

from .errors import ParameterError
from .tokens import Config, TokenGraph

log = logging.getLogger(__name__)

VARIANTS = ("c", "c_prime")


def odd_distance_configs(n: int) -> list[Config]:
    """Pairs of C_n vertices at odd cyclic distance, lexicographic, 0-based."""
    return [(x, y) for x in range(n) for y in range(x + 1, n) if (y - x) % 2 == 1]


def _rule_c(n: int, a: int, b: int) -> int:
    if b == n:
        return n % 3
    return a % 3


def _rule_c_prime(n: int, a: int, b: int) -> int:
    """Pairs led by label 3 have no stated colour; they take ``a % 3`` like labels above 3."""
    if a == 1 and b < n:
        return 2
    if a == 2:
        return 1
    if b == n:
        return n % 3
    return a % 3


def cycle_coloring(n: int, variant: str) -> dict[Config, int]:
    """Colour of every configuration in the non-bipartite component of F_2^2(C_n)."""
    if n % 2 or n < 6:
        raise ParameterError(f"n: must be even and >= 6, got {n}")
    if variant == "c":
        if n % 3 == 1:
            raise ParameterError(f"variant: 'c' needs n not congruent to 1 mod 3, got n={n}")
        rule = _rule_c
    elif variant == "c_prime":
        if n % 3 != 1:
            raise ParameterError(f"variant: 'c_prime' needs n congruent to 1 mod 3, got n={n}")
        rule = _rule_c_prime
    else:
        raise ParameterError(f"variant: expected one of {', '.join(VARIANTS)}, got {variant!r}")
    return {(x, y): rule(n, x + 1, y + 1) for x, y in odd_distance_configs(n)}


def coloring_conflicts(tg: TokenGraph, coloring: Mapping[Config, int]) -> list[tuple[Config, Config]]:
    """Edges of ``tg`` inside the coloured vertex set whose ends share a colour."""
    conflicts = []
    for u, v in tg.graph.edges():
        a, b = tg.labels[u], tg.labels[v]
        if a in coloring and b in coloring and coloring[a] == coloring[b]:
            conflicts.append((a, b))
    if conflicts:
        log.debug("Colouring has %d conflicting edges, first %s", len(conflicts), conflicts[0])
    return conflicts

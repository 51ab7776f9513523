"""Exact domination number and independent domination number."""

from __future__ import annotations

import logging

from .budget import Budget, tick
from .graph import Graph, induced_subgraph, iter_bits
from .invariants import InvariantWitness, require_valid, connected_components

log = logging.getLogger(__name__)


def _coverage_bound(undominated: int, allowed: int, closed: list[int]) -> int:
    """Fewest allowed vertices whose combined coverage could reach every undominated vertex."""
    need = undominated.bit_count()
    gains = sorted(((closed[w] & undominated).bit_count() for w in iter_bits(allowed)), reverse=True)
    total = 0
    for used, gain in enumerate(gains, 1):
        if gain == 0:
            break
        total += gain
        if total >= need:
            return used
    return need + 1  # unreachable with what is allowed


def _greedy(closed: list[int], independent: bool) -> list[int]:
    n = len(closed)
    undominated = (1 << n) - 1
    allowed = undominated
    chosen = []
    while undominated:
        w = max(iter_bits(allowed), key=lambda x: ((closed[x] & undominated).bit_count(), -x))
        chosen.append(w)
        undominated &= ~closed[w]
        allowed &= ~closed[w] if independent else ~(1 << w)
    return chosen


def _min_dominating(masks: list[int], independent: bool, budget: Budget | None) -> list[int]:
    closed = [m | 1 << v for v, m in enumerate(masks)]
    best = _greedy(closed, independent)

    def search(undominated: int, allowed: int, chosen: list[int]) -> None:
        nonlocal best
        if not undominated:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        tick(budget)
        if len(chosen) + _coverage_bound(undominated, allowed, closed) >= len(best):
            return
        target = min(
            iter_bits(undominated),
            key=lambda u: ((closed[u] & allowed).bit_count(), u),
        )
        candidates = sorted(
            iter_bits(closed[target] & allowed),
            key=lambda w: (-(closed[w] & undominated).bit_count(), w),
        )
        for w in candidates:
            chosen.append(w)
            nxt_allowed = allowed & ~closed[w] if independent else allowed & ~(1 << w)
            search(undominated & ~closed[w], nxt_allowed, chosen)
            chosen.pop()
            # later branches never use an earlier candidate
            allowed &= ~(1 << w)

    full = (1 << len(masks)) - 1
    search(full, full, [])
    return sorted(best)


def _solve(g: Graph, independent: bool, budget: Budget | None) -> list[int]:
    chosen: list[int] = []
    for comp in connected_components(g):
        if len(comp) == 1:
            chosen.append(comp[0])
            continue
        sub = induced_subgraph(g, comp)
        chosen += [comp[i] for i in _min_dominating(list(sub.masks), independent, budget)]
    return sorted(chosen)


def domination_number(g: Graph, budget: Budget | None = None) -> InvariantWitness:
    chosen = _solve(g, False, budget)
    log.debug("gamma = %d on %d vertices", len(chosen), g.n)
    return require_valid(g, InvariantWitness("dominating_set", len(chosen), tuple(chosen)))


def independent_domination_number(g: Graph, budget: Budget | None = None) -> InvariantWitness:
    chosen = _solve(g, True, budget)
    log.debug("i = %d on %d vertices", len(chosen), g.n)
    return require_valid(g, InvariantWitness("independent_dominating_set", len(chosen), tuple(chosen)))

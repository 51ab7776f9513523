"""Seeded graph samplers.

All randomness flows through :class:`random.Random` instances seeded from a
string, so a seed reproduces the same graphs on every platform.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Iterator
from itertools import combinations

from .errors import ParameterError
from .graph import Graph, from_edge_list
from .invariants import is_bipartite, is_connected

log = logging.getLogger(__name__)

EDGE_PROBABILITIES = (0.3, 0.5, 0.7)
CLASSES = ("any", "connected", "bipartite", "non_bipartite")
MAX_TRIES = 10000


def rng_for(seed: int, name: str) -> random.Random:
    """Independent stream per (seed, check name)."""
    return random.Random(f"{seed}:{name}")


def erdos_renyi(n: int, p: float, rng: random.Random) -> Graph:
    return from_edge_list(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def _random_bipartite(n: int, p: float, rng: random.Random) -> Graph:
    sides = [rng.randrange(2) for _ in range(n)]
    return from_edge_list(
        n,
        [(u, v) for u, v in combinations(range(n), 2) if sides[u] != sides[v] and rng.random() < p],
    )


def sample_graph(rng: random.Random, n: int, kind: str = "any", connected: bool = False) -> Graph:
    """Erdős–Rényi graph with p drawn from {0.3, 0.5, 0.7}, rejected until it fits ``kind``.

    Bipartite samples draw a random side per vertex and only offer edges across it.
    """
    if kind not in CLASSES:
        raise ParameterError(f"kind: expected one of {', '.join(CLASSES)}, got {kind!r}")
    for _ in range(MAX_TRIES):
        p = rng.choice(EDGE_PROBABILITIES)
        if kind == "bipartite":
            g = _random_bipartite(n, p, rng)
        else:
            g = erdos_renyi(n, p, rng)
        if (connected or kind == "connected") and not is_connected(g):
            continue
        if kind == "non_bipartite" and is_bipartite(g):
            continue
        return g
    raise RuntimeError(f"No {kind} graph on {n} vertices after {MAX_TRIES} tries")


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices; bit i of the counter is the i-th lexicographic pair."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield from_edge_list(n, [pairs[i] for i in range(len(pairs)) if code >> i & 1])


def random_permutation(n: int, rng: random.Random) -> list[int]:
    images = list(range(n))
    rng.shuffle(images)
    return images

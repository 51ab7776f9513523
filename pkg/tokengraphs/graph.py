"""Simple undirected graphs over 0-based vertices, plus the basic operations on them.

Adjacency is stored as one Python ``int`` bitmask per vertex, so neighbourhood
intersection is a single ``&``.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import ParameterError

log = logging.getLogger(__name__)

MAX_VERTICES = 65535


def iter_bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. ``masks[v]`` has bit ``u`` set iff ``u`` is adjacent to ``v``."""

    n: int
    masks: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or self.n > MAX_VERTICES:
            raise ParameterError(f"n: vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.masks) != self.n:
            raise ParameterError(f"masks: expected {self.n} entries, got {len(self.masks)}")
        limit = 1 << self.n
        for v, mask in enumerate(self.masks):
            if mask < 0 or mask >= limit:
                raise ParameterError(f"masks[{v}]: neighbour index out of range")
            if mask >> v & 1:
                raise ParameterError(f"masks[{v}]: self-loop")
            for u in iter_bits(mask):
                if not self.masks[u] >> v & 1:
                    raise ParameterError(f"masks: adjacency not symmetric between {u} and {v}")

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.masks[v]))

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.masks]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.masks[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.masks) // 2

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from vertex pairs. Duplicates collapse; self-loops are rejected."""
    if n < 0:
        raise ParameterError(f"n: vertex count must be non-negative, got {n}")
    masks = [0] * n
    for pos, edge in enumerate(edges):
        if len(edge) != 2:
            raise ParameterError(f"edges[{pos}]: expected a pair, got {tuple(edge)!r}")
        u, v = edge
        if not (0 <= u < n and 0 <= v < n):
            raise ParameterError(f"edges[{pos}]: vertex index out of range [0, {n}) in ({u}, {v})")
        if u == v:
            raise ParameterError(f"edges[{pos}]: self-loop at vertex {u}")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(n, tuple(masks))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``g`` keeps its labels; ``h``'s vertices are shifted by ``g.n``."""
    return Graph(g.n + h.n, g.masks + tuple(m << g.n for m in h.masks))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~m & ~(1 << v) for v, m in enumerate(g.masks)))


def _product(g: Graph, h: Graph, adjacent) -> Graph:
    edges = []
    for a in range(g.n):
        for b in range(h.n):
            for c in range(g.n):
                for d in range(h.n):
                    if (a, b) < (c, d) and adjacent(a, b, c, d):
                        edges.append((a * h.n + b, c * h.n + d))
    return from_edge_list(g.n * h.n, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G □ H; vertex ``(a, b)`` is index ``a * h.n + b``."""
    return _product(
        g, h,
        lambda a, b, c, d: (a == c and h.has_edge(b, d)) or (b == d and g.has_edge(a, c)),
    )


def tensor_product(g: Graph, h: Graph) -> Graph:
    """G × H; vertex ``(a, b)`` is index ``a * h.n + b``."""
    return _product(g, h, lambda a, b, c, d: g.has_edge(a, c) and h.has_edge(b, d))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph on ``vertices``; the i-th listed vertex becomes vertex i."""
    index = {v: i for i, v in enumerate(vertices)}
    masks = []
    for v in vertices:
        m = 0
        for u in iter_bits(g.masks[v]):
            i = index.get(u)
            if i is not None:
                m |= 1 << i
        masks.append(m)
    return Graph(len(vertices), tuple(masks))


def relabel(g: Graph, images: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``images[v]``."""
    if sorted(images) != list(range(g.n)):
        raise ParameterError("images: not a permutation of the vertex set")
    return from_edge_list(g.n, [(images[u], images[v]) for u, v in g.edges()])


def leaf_stars(g: Graph) -> list[tuple[int, frozenset[int]]]:
    """Every vertex with at least one degree-1 neighbour, with that set of leaves."""
    leaves = [v for v in range(g.n) if g.degree(v) == 1]
    stars: dict[int, set[int]] = {}
    for leaf in leaves:
        centre = g.masks[leaf].bit_length() - 1
        stars.setdefault(centre, set()).add(leaf)
    return [(c, frozenset(stars[c])) for c in sorted(stars)]


def is_linear_forest(g: Graph) -> bool:
    """True iff ``g`` is a disjoint union of paths (isolated vertices count as P_1)."""
    if g.max_degree() > 2:
        return False
    seen = 0
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.masks[v]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        size = comp.bit_count()
        edges = sum(g.masks[v].bit_count() for v in iter_bits(comp)) // 2
        if edges != size - 1:
            return False
    return True

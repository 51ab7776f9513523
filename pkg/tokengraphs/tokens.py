"""Generalized token graphs F_k^m(G) and their variants.

A configuration is a sorted tuple of ``k`` distinct vertices of the host graph.
Token graph vertex ``i`` is always the ``i``-th configuration in lexicographic
order, so the same host graph and ``k`` give the same indexing in every builder.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .errors import ParameterError
from .graph import Graph, from_edge_list, iter_bits
from .matching import has_perfect_matching

log = logging.getLogger(__name__)

Config = tuple[int, ...]

VARIANTS = ("F_k^m", "F_k,r", "F'_k,r", "move_union", "F_k")


@dataclass(frozen=True)
class TokenGraph:
    """A token graph with its configuration labels and how it was built.

    ``param`` is ``m`` for F_k^m, ``r`` for the F_{k,r} variants and ``None``
    for the move union and the ordinary token graph.
    """

    graph: Graph
    labels: tuple[Config, ...]
    k: int
    param: int | None
    variant: str
    _index: dict[Config, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {c: i for i, c in enumerate(self.labels)})

    @property
    def n(self) -> int:
        return self.graph.n

    def index_of(self, config: Sequence[int]) -> int:
        key = tuple(sorted(config))
        try:
            return self._index[key]
        except KeyError:
            raise ParameterError(f"config: {key} is not a vertex of this token graph") from None

    def describe(self) -> str:
        if self.variant == "F_k^m":
            return f"F_{self.k}^{self.param}"
        if self.variant == "F_k,r":
            return f"F_{self.k},{self.param}"
        if self.variant == "F'_k,r":
            return f"F'_{self.k},{self.param}"
        return f"{self.variant}(k={self.k})"


def configurations(n: int, k: int) -> list[Config]:
    return list(combinations(range(n), k))


def _check_k(g: Graph, k: int) -> None:
    if not 1 <= k <= g.n:
        raise ParameterError(f"k: must satisfy 1 <= k <= n={g.n}, got {k}")


def _to_mask(vertices: Sequence[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _edge_matching_exists(g: Graph, left: Sequence[int], right: Sequence[int], allow_fixed: bool) -> bool:
    """Perfect matching between ``left`` and ``right`` along G-edges (plus a = b when ``allow_fixed``)."""
    if len(left) != len(right):
        return False
    right_mask = _to_mask(right)
    pos = {v: i for i, v in enumerate(right)}
    adj = []
    for a in left:
        cand = g.masks[a] & right_mask
        if allow_fixed and right_mask >> a & 1:
            cand |= 1 << a
        if not cand:
            return False
        row = 0
        for b in iter_bits(cand):
            row |= 1 << pos[b]
        adj.append(row)
    return has_perfect_matching(adj, len(right))


def config_adjacent(g: Graph, a: Sequence[int], b: Sequence[int], m: int) -> bool:
    """True iff some bijection A -> B moves exactly ``m`` tokens along G-edges and fixes the rest."""
    k = len(a)
    if len(b) != k:
        raise ParameterError(f"b: size {len(b)} differs from |A| = {k}")
    if not 1 <= m <= k:
        raise ParameterError(f"m: must satisfy 1 <= m <= k={k}, got {m}")
    set_a, set_b = set(a), set(b)
    if set_a == set_b:
        return False
    only_a = set_a - set_b
    if len(only_a) > m:
        return False
    common = sorted(set_a & set_b)
    for fixed in combinations(common, k - m):
        kept = set(fixed)
        left = sorted(set_a - kept)
        right = sorted(set_b - kept)
        if _edge_matching_exists(g, left, right, allow_fixed=False):
            return True
    return False


def _build(g: Graph, k: int, param: int | None, variant: str,
           adjacent: Callable[[Config, Config], bool]) -> TokenGraph:
    labels = configurations(g.n, k)
    edges = [
        (i, j)
        for i, j in combinations(range(len(labels)), 2)
        if adjacent(labels[i], labels[j])
    ]
    tg = TokenGraph(from_edge_list(len(labels), edges), tuple(labels), k, param, variant)
    log.info("Built %s of a %d-vertex graph: %d vertices, %d edges",
             tg.describe(), g.n, tg.n, len(edges))
    return tg


def build_token_graph(g: Graph, k: int, m: int) -> TokenGraph:
    """F_k^m(G); ``m = 1`` is the ordinary token graph."""
    _check_k(g, k)
    if not 1 <= m <= k:
        raise ParameterError(f"m: must satisfy 1 <= m <= k={k}, got {m}")
    return _build(g, k, m, "F_k^m", lambda a, b: config_adjacent(g, a, b, m))


def build_variant(g: Graph, k: int, r: int, kind: str) -> TokenGraph:
    """F_{k,r}(G) (``kind="matching"``) or F'_{k,r}(G) (``kind="all_edges"``)."""
    _check_k(g, k)
    if not 1 <= r <= k:
        raise ParameterError(f"r: must satisfy 1 <= r <= k={k}, got {r}")
    if kind not in ("matching", "all_edges"):
        raise ParameterError(f"kind: expected 'matching' or 'all_edges', got {kind!r}")

    def adjacent(a: Config, b: Config) -> bool:
        only_a = sorted(set(a) - set(b))
        only_b = sorted(set(b) - set(a))
        if len(only_a) != r:
            return False
        if kind == "matching":
            return _edge_matching_exists(g, only_a, only_b, allow_fixed=False)
        mask_b = _to_mask(only_b)
        return all(g.masks[x] & mask_b == mask_b for x in only_a)

    return _build(g, k, r, "F_k,r" if kind == "matching" else "F'_k,r", adjacent)


def build_move_union(g: Graph, k: int) -> TokenGraph:
    """Union of F_k^i(G) over 1 <= i <= k."""
    _check_k(g, k)
    return _build(
        g, k, None, "move_union",
        lambda a, b: _edge_matching_exists(g, a, b, allow_fixed=True),
    )


def ordinary_token_graph(g: Graph, k: int) -> TokenGraph:
    """F_k(G) built directly by sliding one token along one edge to an empty vertex."""
    _check_k(g, k)
    labels = configurations(g.n, k)
    index = {c: i for i, c in enumerate(labels)}
    edges = []
    for i, config in enumerate(labels):
        occupied = _to_mask(config)
        for t in config:
            for target in iter_bits(g.masks[t] & ~occupied):
                moved = tuple(sorted([v for v in config if v != t] + [target]))
                j = index[moved]
                if i < j:
                    edges.append((i, j))
    return TokenGraph(from_edge_list(len(labels), edges), tuple(labels), k, None, "F_k")


def predicted_degree_f22(g: Graph, v: int, w: int) -> int:
    """Degree of configuration {v, w} in F_2^2(G) from the closed formula.

    With ``c = |N(v) & N(w)|``: ``d(v)d(w) - c(c+1)/2``, less one more when v ~ w.
    """
    if v == w:
        raise ParameterError(f"w: must differ from v={v}")
    c = (g.masks[v] & g.masks[w]).bit_count()
    degree = g.degree(v) * g.degree(w) - c * (c + 1) // 2
    if g.has_edge(v, w):
        degree -= 1
    return degree


def complement_biclique_witness(g: Graph, k: int) -> tuple[str, tuple[int, ...], tuple[int, ...]] | None:
    """Literal search of G^c for K_{k+1} or K_{a,b} with a, b >= 1 and a + b = k + 1.

    Returns ``("clique", S, ())`` or ``("biclique", X, Y)``, or ``None`` when G^c
    holds neither.
    """
    _check_k(g, k)
    size = k + 1
    if size > g.n:
        return None
    for subset in combinations(range(g.n), size):
        if all(not g.masks[u] & _to_mask(subset) for u in subset):
            return ("clique", subset, ())
    for subset in combinations(range(g.n), size):
        first, rest = subset[0], subset[1:]
        for r in range(len(rest)):
            for extra in combinations(rest, r):
                x = (first, *extra)
                y = tuple(v for v in rest if v not in extra)
                mask_y = _to_mask(y)
                if all(not g.masks[u] & mask_y for u in x):
                    return ("biclique", x, y)
    return None


def disconnected_subset_witness(g: Graph, k: int) -> tuple[int, ...] | None:
    """A (k+1)-subset S with G[S] disconnected, or ``None``."""
    _check_k(g, k)
    for subset in combinations(range(g.n), k + 1):
        mask = _to_mask(subset)
        reach = 1 << subset[0]
        frontier = reach
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.masks[v] & mask
            frontier = nxt & ~reach
            reach |= nxt
        if reach != mask:
            return subset
    return None


def arcs_union_complete_condition(g: Graph, k: int, method: str = "derived") -> bool:
    """True iff G^c contains neither K_{a+b} nor K_{a,b} with a + b > k."""
    if method == "literal":
        return complement_biclique_witness(g, k) is None
    if method == "derived":
        return disconnected_subset_witness(g, k) is None
    raise ParameterError(f"method: expected 'literal' or 'derived', got {method!r}")


def is_complete(g: Graph) -> bool:
    return g.edge_count == comb(g.n, 2)

"""Maximum bipartite matching (Hopcroft-Karp) over bitmask adjacency."""

from __future__ import annotations

from collections import deque

from .graph import Graph, iter_bits

_INF = float("inf")


def hopcroft_karp(left: list[int], right_count: int) -> tuple[list[int], list[int]]:
    """Maximum matching of a bipartite graph.

    ``left[u]`` is a bitmask over right vertices ``0..right_count-1``. Returns
    ``(match_left, match_right)`` with ``-1`` for unmatched vertices.
    """
    match_l = [-1] * len(left)
    match_r = [-1] * right_count
    dist = [0.0] * len(left)

    def bfs() -> bool:
        queue = deque()
        for u in range(len(left)):
            if match_l[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        found = False
        while queue:
            u = queue.popleft()
            for v in iter_bits(left[u]):
                w = match_r[v]
                if w == -1:
                    found = True
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u: int) -> bool:
        for v in iter_bits(left[u]):
            w = match_r[v]
            if w == -1 or (dist[w] == dist[u] + 1 and dfs(w)):
                match_l[u] = v
                match_r[v] = u
                return True
        dist[u] = _INF
        return False

    while bfs():
        for u in range(len(left)):
            if match_l[u] == -1:
                dfs(u)
    return match_l, match_r


def has_perfect_matching(left: list[int], right_count: int) -> bool:
    if len(left) != right_count:
        return False
    match_l, _ = hopcroft_karp(left, right_count)
    return all(v != -1 for v in match_l)


def bipartite_max_independent_set(g: Graph, sides: list[int]) -> list[int]:
    """Maximum independent set of a bipartite graph via König's theorem.

    ``sides[v]`` is 0 or 1. The minimum vertex cover is read off the alternating
    reachability from unmatched left vertices; its complement is returned, sorted.
    """
    left = [v for v in range(g.n) if sides[v] == 0]
    right = [v for v in range(g.n) if sides[v] == 1]
    r_index = {v: i for i, v in enumerate(right)}
    adj = []
    for u in left:
        mask = 0
        for v in iter_bits(g.masks[u]):
            mask |= 1 << r_index[v]
        adj.append(mask)
    match_l, match_r = hopcroft_karp(adj, len(right))

    seen_l = [False] * len(left)
    seen_r = [False] * len(right)
    stack = [u for u in range(len(left)) if match_l[u] == -1]
    for u in stack:
        seen_l[u] = True
    while stack:
        u = stack.pop()
        for v in iter_bits(adj[u]):
            if not seen_r[v]:
                seen_r[v] = True
                w = match_r[v]
                if w != -1 and not seen_l[w]:
                    seen_l[w] = True
                    stack.append(w)
    # cover = unvisited left + visited right
    independent = [left[i] for i in range(len(left)) if seen_l[i]]
    independent += [right[i] for i in range(len(right)) if not seen_r[i]]
    return sorted(independent)

"""Exact graph invariants with witnesses: components, bipartiteness, alpha, omega, chi.

Every solver works component by component and returns an :class:`InvariantWitness`
that is validated against the host graph before it is handed back.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from .budget import Budget, tick
from .errors import ParameterError
from .graph import Graph, complement, induced_subgraph, iter_bits
from .matching import bipartite_max_independent_set

log = logging.getLogger(__name__)

WITNESS_KINDS = (
    "independent_set",
    "clique",
    "coloring",
    "dominating_set",
    "independent_dominating_set",
)


@dataclass(frozen=True)
class BipartitenessCertificate:
    """Either a proper two-colouring (``sides``) or an odd cycle (``odd_cycle``)."""

    bipartite: bool
    sides: tuple[int, ...] | None = None
    odd_cycle: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        if self.bipartite:
            return {"bipartite": True, "sides": list(self.sides)}
        return {"bipartite": False, "odd_cycle": list(self.odd_cycle)}


@dataclass(frozen=True)
class InvariantWitness:
    """A computed invariant value with the vertex set or colouring that attains it."""

    kind: str
    value: int
    vertices: tuple[int, ...] = ()
    coloring: tuple[int, ...] = ()

    def to_json(self) -> dict:
        data = {"kind": self.kind, "value": self.value}
        if self.kind == "coloring":
            data["coloring"] = list(self.coloring)
        else:
            data["vertices"] = list(self.vertices)
        return data


def _mask(vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def validate_witness(g: Graph, witness: InvariantWitness) -> bool:
    """Check the witness against its definition on ``g`` (optimality is not checked)."""
    kind = witness.kind
    if kind == "coloring":
        colors = witness.coloring
        if len(colors) != g.n:
            return False
        if any(colors[u] == colors[v] for u, v in g.edges()):
            return False
        return len(set(colors)) == witness.value or (g.n == 0 and witness.value == 0)

    chosen = _mask(witness.vertices)
    if len(set(witness.vertices)) != witness.value or any(not 0 <= v < g.n for v in witness.vertices):
        return False
    independent = all(not g.masks[v] & chosen for v in witness.vertices)
    full = (1 << g.n) - 1
    covered = chosen
    for v in witness.vertices:
        covered |= g.masks[v]
    if kind == "independent_set":
        return independent
    if kind == "clique":
        return all((g.masks[v] | 1 << v) & chosen == chosen for v in witness.vertices)
    if kind == "dominating_set":
        return covered == full
    if kind == "independent_dominating_set":
        return independent and covered == full
    raise ParameterError(f"kind: unknown witness kind {kind!r}")


def require_valid(g: Graph, witness: InvariantWitness) -> InvariantWitness:
    if not validate_witness(g, witness):
        raise RuntimeError(f"Solver produced an invalid {witness.kind} witness: {witness}")
    return witness


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by smallest member."""
    seen = 0
    result = []
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
        result.append(list(iter_bits(comp)))
    return result


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def bipartiteness(g: Graph) -> BipartitenessCertificate:
    """BFS two-colouring; on a conflict the two tree paths close an odd cycle."""
    side = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = [root]
        for u in queue:
            for v in iter_bits(g.masks[u]):
                if side[v] == -1:
                    side[v] = 1 - side[u]
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif side[v] == side[u]:
                    return BipartitenessCertificate(False, odd_cycle=_close_cycle(u, v, parent, depth))
    return BipartitenessCertificate(True, sides=tuple(side))


def _close_cycle(u: int, v: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    left, right = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    # left ends at the common ancestor; right repeats it
    return tuple(left + right[-2::-1])


def is_bipartite(g: Graph) -> bool:
    return bipartiteness(g).bipartite


def _max_independent(masks: list[int], budget: Budget | None) -> list[int]:
    """Maximum independent set of the graph given by local ``masks``.

    Branch and bound in the style of Tomita's MCQ, run on the complement: a
    greedy clique cover of the candidate set bounds the independent set.
    """
    n = len(masks)
    full = (1 << n) - 1
    best: list[int] = []

    # greedy seed: repeatedly take a minimum-degree candidate
    cand = full
    while cand:
        v = min(iter_bits(cand), key=lambda x: ((masks[x] & cand).bit_count(), x))
        best.append(v)
        cand &= ~masks[v] & ~(1 << v)

    def cover_order(cand: int) -> list[tuple[int, int]]:
        order = []
        remaining = cand
        count = 0
        while remaining:
            count += 1
            q = remaining
            while q:
                v = (q & -q).bit_length() - 1
                order.append((v, count))
                remaining &= ~(1 << v)
                q &= masks[v]
        return order

    def expand(cand: int, current: list[int]) -> None:
        nonlocal best
        tick(budget)
        order = cover_order(cand)
        for v, bound in reversed(order):
            if len(current) + bound <= len(best):
                return
            current.append(v)
            rest = cand & ~masks[v] & ~(1 << v)
            if rest:
                expand(rest, current)
            elif len(current) > len(best):
                best = list(current)
            current.pop()
            cand &= ~(1 << v)

    expand(full, [])
    return sorted(best)


def _component_max_independent(g: Graph, budget: Budget | None) -> list[int]:
    chosen: list[int] = []
    for comp in connected_components(g):
        sub = induced_subgraph(g, comp)
        if sub.edge_count == 0:
            local = list(range(sub.n))
        else:
            cert = bipartiteness(sub)
            if cert.bipartite:
                local = bipartite_max_independent_set(sub, list(cert.sides))
            else:
                local = _max_independent(list(sub.masks), budget)
        chosen += [comp[i] for i in local]
    return sorted(chosen)


def independence_number(g: Graph, budget: Budget | None = None) -> InvariantWitness:
    chosen = _component_max_independent(g, budget)
    log.debug("alpha = %d on %d vertices", len(chosen), g.n)
    return require_valid(g, InvariantWitness("independent_set", len(chosen), tuple(chosen)))


def clique_number(g: Graph, budget: Budget | None = None) -> InvariantWitness:
    best: list[int] = []
    for comp in connected_components(g):
        sub = induced_subgraph(g, comp)
        if sub.edge_count == 0:
            local = [0]
        elif is_bipartite(sub):
            u, v = sub.edges()[0]
            local = [u, v]
        else:
            local = _max_independent(list(complement(sub).masks), budget)
        if len(local) > len(best):
            best = [comp[i] for i in local]
    best.sort()
    log.debug("omega = %d on %d vertices", len(best), g.n)
    return require_valid(g, InvariantWitness("clique", len(best), tuple(best)))


def _greedy_dsatur(masks: list[int]) -> list[int]:
    n = len(masks)
    colors = [-1] * n
    for _ in range(n):
        v = max(
            (x for x in range(n) if colors[x] == -1),
            key=lambda x: (len({colors[u] for u in iter_bits(masks[x])} - {-1}),
                           masks[x].bit_count(), -x),
        )
        used = {colors[u] for u in iter_bits(masks[v])}
        colors[v] = next(c for c in range(n) if c not in used)
    return colors


def _color_with(masks: list[int], k: int, clique: list[int], budget: Budget | None) -> list[int] | None:
    """Proper colouring with at most ``k`` colours, or ``None``. ``clique`` is pre-coloured."""
    n = len(masks)
    colors = [-1] * n
    classes = [0] * k
    for c, v in enumerate(clique):
        colors[v] = c
        classes[c] |= 1 << v
    uncolored = sum(1 for c in colors if c == -1)

    def forbidden(v: int) -> int:
        bits = 0
        for c in range(k):
            if classes[c] & masks[v]:
                bits |= 1 << c
        return bits

    def search(left: int, used: int) -> bool:
        if left == 0:
            return True
        tick(budget)
        pick, pick_key, pick_forbidden = -1, None, 0
        for v in range(n):
            if colors[v] != -1:
                continue
            f = forbidden(v)
            key = (f.bit_count(), masks[v].bit_count(), -v)
            if pick_key is None or key > pick_key:
                pick, pick_key, pick_forbidden = v, key, f
        for c in range(min(k, used + 1)):
            if pick_forbidden >> c & 1:
                continue
            colors[pick] = c
            classes[c] |= 1 << pick
            if search(left - 1, max(used, c + 1)):
                return True
            classes[c] &= ~(1 << pick)
            colors[pick] = -1
        return False

    if search(uncolored, len(clique)):
        return colors
    return None


def _component_coloring(sub: Graph, budget: Budget | None) -> list[int]:
    if sub.edge_count == 0:
        return [0] * sub.n
    cert = bipartiteness(sub)
    if cert.bipartite:
        return list(cert.sides)
    masks = list(sub.masks)
    upper = _greedy_dsatur(masks)
    upper_k = max(upper) + 1
    clique = _max_independent(list(complement(sub).masks), budget)
    for k in range(len(clique), upper_k):
        found = _color_with(masks, k, clique, budget)
        if found is not None:
            return found
    return upper


def chromatic_number(g: Graph, budget: Budget | None = None) -> InvariantWitness:
    colors = [0] * g.n
    for comp in connected_components(g):
        local = _component_coloring(induced_subgraph(g, comp), budget)
        for i, v in enumerate(comp):
            colors[v] = local[i]
    value = len(set(colors))
    log.debug("chi = %d on %d vertices", value, g.n)
    return require_valid(g, InvariantWitness("coloring", value, coloring=tuple(colors)))


def cited_alpha_direct_paths(m: int, n: int) -> Fraction:
    """The published closed form for alpha(P_m x P_n), evaluated literally.

    Both even: mn/2. Otherwise m(n+1)/2. With m even and n odd that value is
    exact; with m odd it can miss, e.g. (3, 5) gives 9 against an actual 10
    and (3, 2) gives the fraction 9/2.
    """
    if m % 2 == 0 and n % 2 == 0:
        return Fraction(m * n, 2)
    return Fraction(m * (n + 1), 2)


def cylinder_domination_bounds(m: int, n: int) -> tuple[Fraction, Fraction]:
    """Bounds ``mn/5 <= gamma(P_n [] C_m) <= (m+2)(n+2)/5``."""
    return Fraction(m * n, 5), Fraction((m + 2) * (n + 2), 5)

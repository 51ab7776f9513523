"""Canonical labelling, isomorphism and automorphism groups by individualization-refinement.

The search tree is the usual one: refine the unit partition to an equitable
partition, then repeatedly individualize a vertex of the first non-singleton
cell and refine again until the partition is discrete. Each node records a
trace (cell sizes plus neighbour-cell multisets) that any isomorphism preserves.

:func:`automorphism_group` walks the first path, then works up from the deepest
level collecting one automorphism per new orbit, so the group order is the
product of the orbit sizes. :func:`canonical_form` searches for the leaf with the
smallest (traces, adjacency code) certificate, pruning by trace, by orbits of
known automorphisms, and by jumping back whenever a leaf repeats a known one.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

from .budget import Budget, tick
from .errors import ParameterError
from .graph import Graph, iter_bits
from .tokens import TokenGraph

log = logging.getLogger(__name__)

Cells = list[list[int]]
Trace = tuple[tuple[int, tuple[int, ...]], ...]


@dataclass(frozen=True)
class Permutation:
    """A bijection on ``range(n)`` stored as its image array."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "image", tuple(self.image))
        if sorted(self.image) != list(range(len(self.image))):
            raise ParameterError("image: not a permutation")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_orderings(cls, source: Sequence[int], target: Sequence[int]) -> Permutation:
        """The map sending ``source[i]`` to ``target[i]`` for every i."""
        image = [0] * len(source)
        for a, b in zip(source, target):
            image[a] = b
        return cls(tuple(image))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, v: int) -> int:
        return self.image[v]

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first, then ``other``."""
        return Permutation(tuple(other.image[x] for x in self.image))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for v, w in enumerate(self.image):
            inv[w] = v
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == w for v, w in enumerate(self.image))

    def fixes(self, vertices: Sequence[int]) -> bool:
        return all(self.image[v] == v for v in vertices)

    def is_automorphism(self, g: Graph) -> bool:
        if self.n != g.n:
            return False
        for v in range(g.n):
            mapped = 0
            for u in iter_bits(g.masks[v]):
                mapped |= 1 << self.image[u]
            if mapped != g.masks[self.image[v]]:
                return False
        return True

    def to_json(self) -> list[int]:
        return list(self.image)


def orbit(v: int, generators: Sequence[Permutation]) -> set[int]:
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for gen in generators:
            y = gen.image[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


@dataclass
class PermGroup:
    """Automorphism group given by generators, with its exact order."""

    n: int
    generators: list[Permutation]
    order: int
    base: list[int] = field(default_factory=list)

    def orbit(self, v: int) -> set[int]:
        return orbit(v, self.generators)

    def orbits(self) -> list[list[int]]:
        seen: set[int] = set()
        result = []
        for v in range(self.n):
            if v not in seen:
                o = self.orbit(v)
                seen |= o
                result.append(sorted(o))
        return result

    def elements(self, limit: int = 40320) -> list[Permutation]:
        """Every group element, by closure over the generators."""
        if self.order > limit:
            raise ParameterError(f"limit: group of order {self.order} exceeds {limit}")
        identity = Permutation.identity(self.n)
        seen = {identity.image: identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for p in frontier:
                for gen in self.generators:
                    q = p.then(gen)
                    if q.image not in seen:
                        seen[q.image] = q
                        nxt.append(q)
            frontier = nxt
        if len(seen) != self.order:
            raise RuntimeError(f"Closure has {len(seen)} elements, expected order {self.order}")
        return list(seen.values())

    def to_json(self) -> dict:
        return {
            "order": str(self.order),
            "generators": [p.to_json() for p in self.generators],
        }


@dataclass(frozen=True)
class CanonicalForm:
    """``order[i]`` is the vertex placed at canonical position i.

    ``bits`` is the upper triangle of the relabelled adjacency matrix, column by
    column. Two forms compare equal iff their graphs are isomorphic.
    """

    n: int
    bits: str
    order: tuple[int, ...] = field(compare=False)

    def relabeling(self) -> Permutation:
        """Permutation sending each vertex to its canonical position."""
        return Permutation.from_orderings(self.order, range(self.n))


def refine(g: Graph, cells: Cells) -> Cells:
    """Split cells by neighbour-cell multisets until the partition is equitable.

    New cells replace the old one in place, ordered by signature, so the result
    does not depend on vertex names.
    """
    while True:
        cell_of = _cell_index(g.n, cells)
        split: Cells = []
        for cell in cells:
            if len(cell) == 1:
                split.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple(sorted(cell_of[u] for u in iter_bits(g.masks[v])))
                groups.setdefault(sig, []).append(v)
            split.extend(groups[sig] for sig in sorted(groups))
        if len(split) == len(cells):
            return split
        cells = split


def _cell_index(n: int, cells: Cells) -> list[int]:
    cell_of = [0] * n
    for i, cell in enumerate(cells):
        for v in cell:
            cell_of[v] = i
    return cell_of


def trace(g: Graph, cells: Cells) -> Trace:
    cell_of = _cell_index(g.n, cells)
    return tuple(
        (len(cell), tuple(sorted(cell_of[u] for u in iter_bits(g.masks[cell[0]]))))
        for cell in cells
    )


def target_cell(cells: Cells) -> int:
    """Index of the first non-singleton cell, or -1 when the partition is discrete."""
    for i, cell in enumerate(cells):
        if len(cell) > 1:
            return i
    return -1


def individualize(g: Graph, cells: Cells, index: int, v: int) -> Cells:
    rest = [w for w in cells[index] if w != v]
    return refine(g, cells[:index] + [[v], rest] + cells[index + 1:])


def leaf_code(g: Graph, order: Sequence[int]) -> tuple[int, ...]:
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    code = []
    for v in order:
        mask = 0
        for u in iter_bits(g.masks[v]):
            mask |= 1 << pos[u]
        code.append(mask)
    return tuple(code)


@dataclass
class _Node:
    cells: Cells
    target: int
    chosen: int


class _Search:
    """State shared by the automorphism and canonical searches on one graph."""

    def __init__(self, g: Graph, budget: Budget | None) -> None:
        self.g = g
        self.budget = budget
        self.nodes = 0
        self.generators: list[Permutation] = []
        self.gen_level: list[int] = []

        cells = refine(g, [list(range(g.n))] if g.n else [])
        self.first_path: list[_Node] = []
        self.first_traces: list[Trace] = [trace(g, cells)]
        while (t := target_cell(cells)) >= 0:
            v = min(cells[t])
            self.first_path.append(_Node(cells, t, v))
            cells = individualize(g, cells, t, v)
            self.first_traces.append(trace(g, cells))
            self._tick()
        self.first_order = [c[0] for c in cells]
        self.first_code = leaf_code(g, self.first_order)
        self.first_prefix = [node.chosen for node in self.first_path]

    def _tick(self) -> None:
        self.nodes += 1
        tick(self.budget)

    def add_generator(self, perm: Permutation, level: int) -> None:
        if not perm.is_automorphism(self.g):
            raise RuntimeError(f"Search produced a non-automorphism: {perm.image}")
        self.generators.append(perm)
        self.gen_level.append(level)

    def _equivalent_leaf(self, cells: Cells, depth: int) -> list[int] | None:
        """Any leaf below ``cells`` whose traces and code match the first leaf."""
        self._tick()
        if trace(self.g, cells) != self.first_traces[depth]:
            return None
        t = target_cell(cells)
        if t < 0:
            order = [c[0] for c in cells]
            return order if leaf_code(self.g, order) == self.first_code else None
        for w in cells[t]:
            found = self._equivalent_leaf(individualize(self.g, cells, t, w), depth + 1)
            if found is not None:
                return found
        return None

    def automorphisms(self) -> PermGroup:
        order = 1
        for depth in range(len(self.first_path) - 1, -1, -1):
            node = self.first_path[depth]
            gens = [p for p, lvl in zip(self.generators, self.gen_level) if lvl >= depth]
            reached = orbit(node.chosen, gens)
            for w in node.cells[node.target]:
                if w in reached:
                    continue
                leaf = self._equivalent_leaf(
                    individualize(self.g, node.cells, node.target, w), depth + 1
                )
                if leaf is None:
                    continue
                self.add_generator(Permutation.from_orderings(self.first_order, leaf), depth)
                gens.append(self.generators[-1])
                reached = orbit(node.chosen, gens)
            order *= len(reached)
        group = PermGroup(self.g.n, list(self.generators), order, list(self.first_prefix))
        log.debug("Automorphism search: %d nodes, %d generators, order %d",
                  self.nodes, len(self.generators), order)
        return group

    def canonical(self) -> tuple[list[int], tuple[int, ...]]:
        best = {
            "traces": list(self.first_traces),
            "code": self.first_code,
            "order": self.first_order,
            "prefix": list(self.first_prefix),
        }
        g = self.g

        def dfs(cells: Cells, prefix: list[int], traces: list[Trace]) -> int | None:
            self._tick()
            depth = len(prefix)
            traces.append(trace(g, cells))
            try:
                if traces > best["traces"][: len(traces)]:
                    return None
                t = target_cell(cells)
                if t < 0:
                    return self._leaf(cells, prefix, traces, best)
                explored: set[int] = set()
                for w in cells[t]:
                    if w in explored:
                        continue
                    jump = dfs(individualize(g, cells, t, w), prefix + [w], traces)
                    fixing = [p for p in self.generators if p.fixes(prefix)]
                    explored |= orbit(w, fixing)
                    if jump is not None and jump < depth:
                        return jump
                return None
            finally:
                traces.pop()

        if g.n:
            dfs(refine(g, [list(range(g.n))]), [], [])
        return best["order"], best["code"]

    def _leaf(self, cells: Cells, prefix: list[int], traces: list[Trace], best: dict) -> int | None:
        order = [c[0] for c in cells]
        code = leaf_code(self.g, order)
        for ref_traces, ref_code, ref_order, ref_prefix in (
            (self.first_traces, self.first_code, self.first_order, self.first_prefix),
            (best["traces"], best["code"], best["order"], best["prefix"]),
        ):
            if prefix == ref_prefix:
                continue
            if code == ref_code and traces == ref_traces:
                perm = Permutation.from_orderings(ref_order, order)
                self.add_generator(perm, _common_prefix(prefix, ref_prefix))
                return _common_prefix(prefix, ref_prefix)
        if (traces, code) < (best["traces"], best["code"]):
            best.update(traces=list(traces), code=code, order=order, prefix=list(prefix))
        return None


def _common_prefix(a: Sequence[int], b: Sequence[int]) -> int:
    i = 0
    while i < len(a) and i < len(b) and a[i] == b[i]:
        i += 1
    return i


def automorphism_group(g: Graph, budget: Budget | None = None) -> PermGroup:
    return _Search(g, budget).automorphisms()


def canonical_form(g: Graph, budget: Budget | None = None) -> CanonicalForm:
    search = _Search(g, budget)
    search.automorphisms()
    order, code = search.canonical()
    bits = "".join(str(code[i] >> j & 1) for j in range(1, g.n) for i in range(j))
    return CanonicalForm(g.n, bits, tuple(order))


def find_isomorphism(g: Graph, h: Graph, budget: Budget | None = None) -> Permutation | None:
    """An isomorphism g -> h as a vertex map, or ``None`` when the graphs differ."""
    if g.n != h.n or g.edge_count != h.edge_count or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    cg = canonical_form(g, budget)
    ch = canonical_form(h, budget)
    if cg != ch:
        return None
    mapping = Permutation.from_orderings(cg.order, ch.order)
    for u, v in g.edges():
        if not h.has_edge(mapping(u), mapping(v)):
            raise RuntimeError("Canonical forms agree but the composed map is not an isomorphism")
    return mapping


def is_isomorphic(g: Graph, h: Graph, budget: Budget | None = None) -> bool:
    return find_isomorphism(g, h, budget) is not None


def induced_token_automorphism(g: Graph, f: Permutation, tg: TokenGraph) -> Permutation:
    """The permutation A -> f(A) of ``tg``'s configurations."""
    if not f.is_automorphism(g):
        raise ParameterError("f: not an automorphism of the host graph")
    if tg.labels and max(max(c) for c in tg.labels) >= g.n:
        raise ParameterError("tg: token graph was not built from this host graph")
    phi = Permutation(tuple(tg.index_of([f(v) for v in config]) for config in tg.labels))
    if not phi.is_automorphism(tg.graph):
        raise RuntimeError("Induced map is not an automorphism of the token graph")
    return phi

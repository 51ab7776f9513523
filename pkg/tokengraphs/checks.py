"""Registered theorem checks.

Each check yields one :class:`~tokengraphs.harness.Case` per parameter case.
Random samples are drawn while the cases are generated, so the sequence of
graphs depends only on the seed and the check name.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from functools import cache, partial
from itertools import combinations
from math import ceil, comb, factorial

from .canon import automorphism_group, find_isomorphism, induced_token_automorphism
from .colorings import coloring_conflicts, cycle_coloring, odd_distance_configs
from .domination import domination_number, independent_domination_number
from .families import complete, complete_bipartite, cycle, cycle_with_bicliques, diamond, path, star
from .formats import graph6_encode
from .graph import (
    Graph,
    cartesian_product,
    complement,
    disjoint_union,
    from_edge_list,
    induced_subgraph,
    is_linear_forest,
    leaf_stars,
    tensor_product,
)
from .harness import (
    Case,
    CheckContext,
    DISCREPANCY,
    FAIL,
    Outcome,
    discrepancy,
    expect,
    failed,
    passed,
    register,
)
from .invariants import (
    bipartiteness,
    chromatic_number,
    clique_number,
    connected_components,
    cited_alpha_direct_paths,
    cylinder_domination_bounds,
    independence_number,
    is_bipartite,
    is_connected,
)
from .sampling import all_labeled_graphs, sample_graph
from .tokens import (
    TokenGraph,
    arcs_union_complete_condition,
    build_move_union,
    build_token_graph,
    config_adjacent,
    is_complete,
    ordinary_token_graph,
    predicted_degree_f22,
)
from . import oracles

log = logging.getLogger(__name__)


def f22(g: Graph) -> TokenGraph:
    return build_token_graph(g, 2, 2)


def g6(g: Graph) -> str:
    return graph6_encode(g).decode("ascii")


def component_shapes(g: Graph) -> list[list]:
    """Sorted shape descriptors: ``["complete", s]``, ``["biclique", a, b]`` or ``["other", s, e]``."""
    shapes = []
    for comp in connected_components(g):
        sub = induced_subgraph(g, comp)
        s, e = sub.n, sub.edge_count
        if e == s * (s - 1) // 2:
            shapes.append(["complete", s])
            continue
        cert = bipartiteness(sub)
        if cert.bipartite:
            a = cert.sides.count(0)
            b = s - a
            if e == a * b:
                shapes.append(["biclique", min(a, b), max(a, b)])
                continue
        shapes.append(["other", s, e])
    return sorted(shapes)


def _batches(ctx: CheckContext, sizes, total: int) -> tuple[list[int], int]:
    """Sizes within the cap and how many samples each gets to reach ``total``."""
    sizes = ctx.sizes(sizes)
    return sizes, (ceil(total / len(sizes)) if sizes else 0)


def _c4_example(ctx: CheckContext) -> Outcome:
    host = cycle(4)
    tg = f22(host)
    target = disjoint_union(complete(4), complete(2))
    actual = component_shapes(tg.graph)
    if find_isomorphism(tg.graph, target, ctx.budget()) is None:
        return failed(component_shapes(target), actual, host, "F_2^2(C_4) is not K_4 + K_2")
    return passed(component_shapes(target), actual)


@register("c4_example", "F_2^2(C_4) is isomorphic to K_4 + K_2")
def c4_example(ctx: CheckContext) -> Iterator[Case]:
    yield Case({}, partial(_c4_example, ctx))


def _degree_formula(graphs: list[Graph]) -> Outcome:
    pairs = 0
    for g in graphs:
        tg = f22(g)
        for v, w in combinations(range(g.n), 2):
            actual = tg.graph.degree(tg.index_of((v, w)))
            predicted = predicted_degree_f22(g, v, w)
            if actual != predicted:
                return failed(predicted, actual, g,
                              f"degree of configuration {{{v},{w}}} differs from the closed formula")
            pairs += 1
    summary = {"graphs": len(graphs), "pairs": pairs}
    return passed(summary, summary)


@register("degree_formula", "closed-form degrees in F_2^2(G) match built token graphs",
          {"n": "3..9", "graphs": 200})
def degree_formula(ctx: CheckContext) -> Iterator[Case]:
    sizes, per = _batches(ctx, range(3, 10), 200)
    for n in sizes:
        graphs = [sample_graph(ctx.rng, n) for _ in range(per)]
        yield Case({"n": n, "graphs": per}, partial(_degree_formula, graphs))


def _token_graph_m1(graphs: list[Graph], k: int) -> Outcome:
    for g in graphs:
        built = build_token_graph(g, k, 1)
        oracle = ordinary_token_graph(g, k)
        if built.graph != oracle.graph:
            return failed(oracle.graph.edge_count, built.graph.edge_count, g,
                          f"F_{k}^1 differs from the one-move token graph")
        for m in range(1, k + 1):
            tg = built if m == 1 else build_token_graph(g, k, m)
            for i, j in tg.graph.edges():
                a, b = tg.labels[i], tg.labels[j]
                if len(set(a) - set(b)) > m:
                    return failed(f"|A-B| <= {m}", len(set(a) - set(b)), g,
                                  f"edge {a}-{b} of F_{k}^{m} moves too many tokens")
                if not config_adjacent(g, b, a, m):
                    return failed(True, False, g, f"adjacency of {a} and {b} is not symmetric")
    return passed(len(graphs), len(graphs))


@register("token_graph_m1", "F_k^1 equals the ordinary token graph; edges move at most m tokens",
          {"n": "3..8", "k": "1..3"})
def token_graph_m1(ctx: CheckContext) -> Iterator[Case]:
    for n in ctx.sizes(range(3, 9)):
        for k in range(1, min(3, n) + 1):
            graphs = [sample_graph(ctx.rng, n) for _ in range(3)]
            yield Case({"n": n, "k": k, "graphs": len(graphs)}, partial(_token_graph_m1, graphs, k))


def _solver_oracles(ctx: CheckContext, graphs: list[Graph]) -> Outcome:
    for g in graphs:
        budget = ctx.budget()
        computed = {
            "alpha": independence_number(g, budget).value,
            "omega": clique_number(g, budget).value,
            "chi": chromatic_number(g, budget).value,
            "gamma": domination_number(g, budget).value,
            "i": independent_domination_number(g, budget).value,
        }
        naive = {
            "alpha": oracles.alpha(g),
            "omega": oracles.omega(g),
            "chi": oracles.chi(g),
            "gamma": oracles.gamma(g),
            "i": oracles.independent_gamma(g),
        }
        if computed != naive:
            return failed(naive, computed, g, "solver disagrees with exhaustive search")
        if not (computed["omega"] <= computed["chi"]
                and computed["gamma"] <= computed["i"] <= computed["alpha"]):
            return failed("omega <= chi, gamma <= i <= alpha", computed, g, "invariant chain broken")
    return passed(len(graphs), len(graphs))


@register("solver_oracles", "exact solvers agree with exhaustive oracles",
          {"n": "1..7", "graphs": 300})
def solver_oracles(ctx: CheckContext) -> Iterator[Case]:
    sizes, per = _batches(ctx, range(1, 8), 300)
    for n in sizes:
        graphs = [sample_graph(ctx.rng, n) for _ in range(per)]
        yield Case({"n": n, "graphs": per}, partial(_solver_oracles, ctx, graphs))


def _bipartite_disconnected(graphs: list[Graph]) -> Outcome:
    for g in graphs:
        if is_connected(f22(g).graph):
            return failed(False, True, g, "F_2^2 of a connected bipartite graph is connected")
    return passed(len(graphs), len(graphs))


@register("bipartite_disconnected", "F_2^2 of a connected bipartite graph is disconnected",
          {"n": "3..8"})
def bipartite_disconnected(ctx: CheckContext) -> Iterator[Case]:
    for n in ctx.sizes(range(3, 9)):
        graphs = [sample_graph(ctx.rng, n, "bipartite", connected=True) for _ in range(25)]
        yield Case({"n": n, "graphs": len(graphs)}, partial(_bipartite_disconnected, graphs))


def _star_structure(ctx: CheckContext, n: int) -> Outcome:
    host = star(n)
    tg = f22(host)
    target = disjoint_union(complete(n), Graph.empty(comb(n, 2)))
    budget = ctx.budget()
    expected = {"shapes": component_shapes(target), "gamma": comb(n, 2) + 1, "alpha": comb(n, 2) + 1}
    actual = {
        "shapes": component_shapes(tg.graph),
        "gamma": domination_number(tg.graph, budget).value,
        "alpha": independence_number(tg.graph, budget).value,
    }
    if find_isomorphism(tg.graph, target, budget) is None:
        return failed(expected, actual, host, f"F_2^2(K_1,{n}) is not K_{n} plus isolated vertices")
    return expect(expected, actual, host, "domination or independence number differs")


@register("star_structure", "F_2^2(K_1,n) is K_n plus C(n,2) isolated vertices", {"n": "2..7"})
def star_structure(ctx: CheckContext) -> Iterator[Case]:
    for n in range(2, 8):
        if n + 1 <= ctx.caps.max_n:
            yield Case({"n": n}, partial(_star_structure, ctx, n))


def _kmn_structure(ctx: CheckContext, m: int, n: int) -> Outcome:
    host = complete_bipartite(m, n)
    tg = f22(host)
    target = disjoint_union(complete(m * n), complete_bipartite(comb(n, 2), comb(m, 2)))
    budget = ctx.budget()
    expected = {
        "shapes": component_shapes(target),
        "chi": m * n,
        "omega": m * n,
        "alpha": max(comb(n, 2), comb(m, 2)) + 1,
    }
    actual = {
        "shapes": component_shapes(tg.graph),
        "chi": chromatic_number(tg.graph, budget).value,
        "omega": clique_number(tg.graph, budget).value,
        "alpha": independence_number(tg.graph, budget).value,
    }
    if find_isomorphism(tg.graph, target, budget) is None:
        return failed(expected, actual, host, "F_2^2(K_m,n) is not K_mn + K_C(n,2),C(m,2)")
    return expect(expected, actual, host, "invariant of F_2^2(K_m,n) differs from the closed form")


def _kmn_gamma(ctx: CheckContext, m: int, n: int) -> Outcome:
    host = complete_bipartite(m, n)
    actual = domination_number(f22(host).graph, ctx.budget()).value
    if actual == 3:
        return passed(3, actual)
    if min(m, n) == 2:
        return discrepancy(3, actual, host,
                           "with min(m,n) = 2 the biclique component is a star, so gamma is 1 + 1")
    return failed(3, actual, host, "domination number of F_2^2(K_m,n) is not 3")


@register("kmn_structure", "F_2^2(K_m,n) decomposition and its invariants",
          {"m": "2..4", "n": "m..4"})
def kmn_structure(ctx: CheckContext) -> Iterator[Case]:
    for m in range(2, 5):
        for n in range(m, 5):
            if m + n > ctx.caps.max_n:
                continue
            yield Case({"m": m, "n": n}, partial(_kmn_structure, ctx, m, n))
            yield Case({"m": m, "n": n, "invariant": "gamma"}, partial(_kmn_gamma, ctx, m, n))


def fkk_kmn_shapes(k: int, m: int, n: int) -> list[list]:
    """Component shapes of F_k^k(K_m,n) from the closed decomposition."""
    shapes = []
    for p in range(k, -1, -1):
        q = k - p
        if p <= q:
            break
        a = comb(m, p) * comb(n, q)
        b = comb(m, q) * comb(n, p)
        if a == 0 or b == 0:
            shapes += [["complete", 1]] * (a + b)
        elif a == 1 and b == 1:
            shapes.append(["complete", 2])
        else:
            shapes.append(["biclique", min(a, b), max(a, b)])
    if k % 2 == 0:
        h = comb(m, k // 2) * comb(n, k // 2)
        if h:
            shapes.append(["complete", h])
    return sorted(shapes)


def _fkk_kmn(k: int, m: int, n: int) -> Outcome:
    host = complete_bipartite(m, n)
    actual = component_shapes(build_token_graph(host, k, k).graph)
    return expect(fkk_kmn_shapes(k, m, n), actual, host,
                  f"components of F_{k}^{k}(K_{m},{n}) differ from the decomposition")


@register("fkk_kmn_structure", "F_k^k(K_m,n) splits into the predicted bicliques and clique",
          {"k": "2..3", "m": "k..4", "n": "m..4"})
def fkk_kmn_structure(ctx: CheckContext) -> Iterator[Case]:
    for k in (2, 3):
        for m in range(max(2, k), 5):
            for n in range(m, 5):
                if m + n <= ctx.caps.max_n:
                    yield Case({"k": k, "m": m, "n": n}, partial(_fkk_kmn, k, m, n))


def _odd_cycle_product(ctx: CheckContext, n: int) -> Outcome:
    host = cycle(n)
    tg = f22(host)
    target = cartesian_product(cycle(n), path((n - 1) // 2))
    if find_isomorphism(tg.graph, target, ctx.budget()) is None:
        return failed(g6(target), g6(tg.graph), host, f"F_2^2(C_{n}) is not C_{n} x P_{(n - 1) // 2}")
    return passed(f"C_{n} [] P_{(n - 1) // 2}", "isomorphic")


@register("odd_cycle_product", "F_2^2(C_n) is C_n [] P_(n-1)/2 for odd n", {"n": [5, 7, 9, 11]})
def odd_cycle_product(ctx: CheckContext) -> Iterator[Case]:
    for n in ctx.sizes((5, 7, 9, 11)):
        yield Case({"n": n}, partial(_odd_cycle_product, ctx, n))


def _even_cycle_components(n: int) -> Outcome:
    host = cycle(n)
    g = f22(host).graph
    odd = n * n // 4
    expected = sorted([[comb(n, 2) - odd, True], [odd, False]])
    actual = sorted([len(c), is_bipartite(induced_subgraph(g, c))] for c in connected_components(g))
    return expect(expected, actual, host, f"components of F_2^2(C_{n}) differ from the parity classes")


@register("even_cycle_components", "F_2^2(C_n), n even, has one bipartite and one non-bipartite component",
          {"n": [6, 8, 10, 12]})
def even_cycle_components(ctx: CheckContext) -> Iterator[Case]:
    for n in ctx.sizes((6, 8, 10, 12)):
        yield Case({"n": n}, partial(_even_cycle_components, n))


def distance_layer(n: int, i: int) -> list[tuple[int, int]]:
    """Configurations {x, x+i} of C_n, indexed by x (one entry per pair)."""
    layer = []
    for x in range(n):
        pair = tuple(sorted((x, (x + i) % n)))
        if pair not in layer:
            layer.append(pair)
    return layer


def _nonbip_vertex_set(ctx: CheckContext, n: int) -> Outcome:
    host = cycle(n)
    tg = f22(host)
    for comp in connected_components(tg.graph):
        if not is_bipartite(induced_subgraph(tg.graph, comp)):
            actual = sorted(list(tg.labels[v]) for v in comp)
            break
    else:
        actual = []
    expected = [list(c) for c in odd_distance_configs(n)]
    return expect(expected, actual, host, "non-bipartite component is not the odd-distance pairs")


def _nonbip_layer(ctx: CheckContext, n: int, i: int) -> Outcome:
    host = cycle(n)
    tg = f22(host)
    layer = distance_layer(n, i)
    sub = induced_subgraph(tg.graph, [tg.index_of(c) for c in layer])
    if 2 * i == n:
        target, shape = cycle(n // 2), f"C_{n // 2}"
    elif n % 4 == 0 and i == n // 2 - 1:
        edges = [(x, (x + 1) % n) for x in range(n)] + [(x, x + n // 2) for x in range(n // 2)]
        target, shape = from_edge_list(n, edges), f"C_{n} plus antipodal chords"
    else:
        target, shape = cycle(n), f"C_{n}"
    if find_isomorphism(sub, target, ctx.budget()) is not None:
        return passed(shape, shape)
    if n % 4 == 0 and i == n // 2 - 1:
        return discrepancy(shape, g6(sub), host, f"layer V_{i} is not {shape}")
    return failed(shape, g6(sub), host, f"layer V_{i} of F_2^2(C_{n}) is not {shape}")


@register("nonbip_component_structure",
          "the non-bipartite component of F_2^2(C_n) is layered by odd distances",
          {"n": [6, 8, 10, 12]})
def nonbip_component_structure(ctx: CheckContext) -> Iterator[Case]:
    for n in ctx.sizes((6, 8, 10, 12)):
        yield Case({"n": n, "claim": "vertex_set"}, partial(_nonbip_vertex_set, ctx, n))
        for i in range(1, n // 2 + 1, 2):
            yield Case({"n": n, "layer": i}, partial(_nonbip_layer, ctx, n, i))


def _cycle_chi_omega(ctx: CheckContext, n: int) -> Outcome:
    host = cycle(n)
    g = f22(host).graph
    budget = ctx.budget()
    expected = {
        "chi": 4 if n == 4 else 3,
        "omega": {3: 3, 4: 4, 6: 3}.get(n, 2),
    }
    actual = {
        "chi": chromatic_number(g, budget).value,
        "omega": clique_number(g, budget).value,
    }
    return expect(expected, actual, host, f"chi/omega of F_2^2(C_{n}) differ")


def _cycle_coloring(n: int, variant: str) -> Outcome:
    host = cycle(n)
    coloring = cycle_coloring(n, variant)
    conflicts = coloring_conflicts(f22(host), coloring)
    if not conflicts:
        return passed("proper", "proper")
    a, b = conflicts[0]
    return discrepancy("proper", f"{len(conflicts)} conflicting edges", host,
                       f"colouring {variant} gives {a} and {b} the same colour {coloring[a]}")


@register("cycle_chromatic_clique", "chi and omega of F_2^2(C_n), and the explicit colourings",
          {"n": "3..12"})
def cycle_chromatic_clique(ctx: CheckContext) -> Iterator[Case]:
    for n in ctx.sizes(range(3, 13)):
        yield Case({"n": n}, partial(_cycle_chi_omega, ctx, n))
        if n % 2 == 0 and n >= 6:
            variant = "c_prime" if n % 3 == 1 else "c"
            yield Case({"n": n, "coloring": variant}, partial(_cycle_coloring, n, variant))


def _alpha_f22(ctx: CheckContext, host: Graph, expected: int, label: str) -> Outcome:
    actual = independence_number(f22(host).graph, ctx.budget()).value
    return expect(expected, actual, host, f"alpha(F_2^2({label})) differs from the closed form")


@register("alpha_cycles", "independence number of F_2^2(C_n)", {"n": [5, 6, 7, 8, 9, 10]})
def alpha_cycles(ctx: CheckContext) -> Iterator[Case]:
    for n in ctx.sizes((5, 6, 7, 8, 9, 10)):
        if n % 2:
            expected = ((n - 1) // 2) ** 2
        else:
            expected = n * (n - 2) // 8 + comb(n // 2, 2)
        yield Case({"n": n}, partial(_alpha_f22, ctx, cycle(n), expected, f"C_{n}"))


@register("alpha_paths", "independence number of F_2^2(P_n)", {"n": "2..9"})
def alpha_paths(ctx: CheckContext) -> Iterator[Case]:
    for n in ctx.sizes(range(2, 10)):
        expected = (n // 2) * ((n + 1) // 2)
        yield Case({"n": n}, partial(_alpha_f22, ctx, path(n), expected, f"P_{n}"))


GAMMA_ODD_CYCLES = {3: 1, 5: 3, 7: 6, 9: None, 11: 14}


def _gamma_cycle(ctx: CheckContext, n: int) -> Outcome:
    host = cycle(n)
    actual = domination_number(f22(host).graph, ctx.budget()).value
    m = (n - 1) // 2
    lo, hi = cylinder_domination_bounds(n, m)
    expected = {"gamma": GAMMA_ODD_CYCLES[n], "bounds": [str(lo), str(hi)]}
    result = {"gamma": actual, "bounds": [str(lo), str(hi)]}
    if not lo <= actual <= hi:
        return failed(expected, result, host, f"gamma(F_2^2(C_{n})) = {actual} outside cylinder bounds")
    if expected["gamma"] is None:
        return passed(expected, result)
    return expect(expected, result, host, f"gamma(F_2^2(C_{n})) differs from the exact value")


@register("gamma_cycles", "domination number of F_2^2(C_n) for odd n", {"n": [3, 5, 7, 9, 11]})
def gamma_cycles(ctx: CheckContext) -> Iterator[Case]:
    for n in ctx.sizes(GAMMA_ODD_CYCLES):
        yield Case({"n": n}, partial(_gamma_cycle, ctx, n), slow=n >= 9)


def even_cycle_domination_bound(n: int) -> int:
    """Upper bound n(n-2)/8 + C(n/2, 2) on i(F_2^2(C_n)) for even n."""
    return n * (n - 2) // 8 + comb(n // 2, 2)


def _gamma_even_cycle(ctx: CheckContext, n: int) -> Outcome:
    host = cycle(n)
    g = f22(host).graph
    budget = ctx.budget()
    gamma = domination_number(g, budget).value
    idom = independent_domination_number(g, budget).value
    bound = even_cycle_domination_bound(n)
    actual = {"gamma": gamma, "i": idom, "bound": bound}
    if not gamma <= idom <= bound:
        return failed("gamma <= i <= bound", actual, host,
                      f"domination chain of F_2^2(C_{n}) exceeds n(n-2)/8 + C(n/2,2)")
    return passed("gamma <= i <= bound", actual)


@register("gamma_even_cycles", "gamma <= i <= n(n-2)/8 + C(n/2,2) for F_2^2(C_n), n even",
          {"n": [6, 8, 10]})
def gamma_even_cycles(ctx: CheckContext) -> Iterator[Case]:
    for n in ctx.sizes((6, 8, 10)):
        yield Case({"n": n}, partial(_gamma_even_cycle, ctx, n))


CYLINDER_EXACT = {(3, 1): 1, (5, 2): 3, (7, 3): 6, (11, 5): 14}


def _cylinder(ctx: CheckContext, m: int, n: int) -> Outcome:
    host = cartesian_product(cycle(m), path(n))
    actual = domination_number(host, ctx.budget()).value
    lo, hi = cylinder_domination_bounds(m, n)
    if not lo <= actual <= hi:
        return failed([str(lo), str(hi)], actual, host, f"gamma(C_{m} [] P_{n}) outside the bounds")
    exact = CYLINDER_EXACT.get((m, n))
    if exact is not None:
        return expect(exact, actual, host, f"gamma(C_{m} [] P_{n}) differs from the exact value")
    return passed([str(lo), str(hi)], actual)


@register("cylinder_bounds", "domination of C_m [] P_n within the cylinder bounds",
          {"m": "3..11", "n": "1..5"})
def cylinder_bounds(ctx: CheckContext) -> Iterator[Case]:
    for m in range(3, 12):
        for n in range(1, 6):
            yield Case({"m": m, "n": n}, partial(_cylinder, ctx, m, n), slow=m * n > 24)


def _connectivity(graphs: list[Graph]) -> Outcome:
    deviations = []
    for g in graphs:
        comps = connected_components(f22(g).graph)
        nontrivial = [c for c in comps if len(c) > 1]
        isolated = len(comps) - len(nontrivial)
        groups = [len(leaves) for _, leaves in leaf_stars(g) if len(leaves) >= 2]
        if not groups and len(comps) != 1:
            return failed(1, len(comps), g, "no shared leaves, yet F_2^2(G) is disconnected")
        if groups and len(nontrivial) != 1:
            return failed(1, len(nontrivial), g, "F_2^2(G) has more than one non-trivial component")
        predicted = sum(comb(k, 2) for k in groups)
        if groups and isolated != predicted:
            deviations.append((g, predicted, isolated))
    if deviations:
        g, predicted, isolated = deviations[0]
        return discrepancy(predicted, isolated, g,
                           f"isolated configurations differ from the sum over leaf stars "
                           f"({len(deviations)} of {len(graphs)} graphs)")
    return passed(len(graphs), len(graphs))


def connectivity_examples() -> list[tuple[str, Graph]]:
    triangle = [(0, 1), (1, 2), (0, 2)]
    examples = [
        ("triangle+2 leaves", from_edge_list(5, triangle + [(0, 3), (0, 4)])),
        ("triangle+3+2 leaves",
         from_edge_list(8, triangle + [(0, 3), (0, 4), (0, 5), (1, 6), (1, 7)])),
    ]
    for params in ((3, 2), (3, 3), (3, 1, 2), (3, 2, 2), (5, 1), (5, 2), (5, 3), (5, 2, 1)):
        examples.append((f"cycle_with_bicliques{params}", cycle_with_bicliques(*params)))
    return examples


@register("connectivity_leaves", "F_2^2(G) connectivity for non-bipartite G and shared leaves",
          {"n": "3..8", "graphs": 200})
def connectivity_leaves(ctx: CheckContext) -> Iterator[Case]:
    sizes, per = _batches(ctx, range(3, 9), 200)
    for n in sizes:
        graphs = [sample_graph(ctx.rng, n, "non_bipartite", connected=True) for _ in range(per)]
        yield Case({"n": n, "graphs": per}, partial(_connectivity, graphs))
    for label, g in connectivity_examples():
        if g.n <= ctx.caps.max_n:
            yield Case({"graph": label}, partial(_connectivity, [g]))


def _disjoint_union(ctx: CheckContext, pairs: list[tuple[Graph, Graph]]) -> Outcome:
    for g, h in pairs:
        union = disjoint_union(g, h)
        lhs = f22(union).graph
        rhs = disjoint_union(disjoint_union(f22(g).graph, f22(h).graph), tensor_product(g, h))
        if find_isomorphism(lhs, rhs, ctx.budget()) is None:
            return failed(g6(rhs), g6(lhs), union, "F_2^2(G + H) is not F_2^2(G) + F_2^2(H) + G x H")
    return passed(len(pairs), len(pairs))


@register("disjoint_union_lemma", "F_2^2 of a disjoint union", {"n": "2..5", "pairs": 52})
def disjoint_union_lemma(ctx: CheckContext) -> Iterator[Case]:
    for n in ctx.sizes(range(2, 6)):
        pairs = [
            (sample_graph(ctx.rng, n), sample_graph(ctx.rng, ctx.rng.randint(2, 5)))
            for _ in range(13)
        ]
        yield Case({"n": n, "pairs": len(pairs)}, partial(_disjoint_union, ctx, pairs))


def characterization_families(max_n: int) -> list[Graph]:
    graphs = [path(n) for n in range(2, max_n + 1)]
    graphs += [cycle(n) for n in range(3, max_n + 1)]
    graphs += [complete(n) for n in range(2, max_n + 1)]
    graphs += [star(n) for n in range(2, max_n)]
    graphs += [complete_bipartite(m, n) for m in range(2, max_n) for n in range(m, max_n - m + 1)]
    graphs += [disjoint_union(path(a), path(b))
               for a in range(1, max_n) for b in range(a, max_n - a + 1)]
    graphs.append(diamond())
    return [g for g in graphs if g.n >= 2]


@cache
def _sweep(source: str, max_n: int) -> tuple[tuple[Graph, bool, bool, int, int], ...]:
    """(G, linear forest, F bipartite, chi(F), omega(F)) per graph of the sweep."""
    graphs = all_labeled_graphs(5) if source == "labeled" else characterization_families(max_n)
    records = []
    for g in graphs:
        f = f22(g).graph
        records.append((g, is_linear_forest(g), is_bipartite(f),
                        chromatic_number(f).value, clique_number(f).value))
    return tuple(records)


def _characterization(source: str, max_n: int, claim: str) -> Outcome:
    records = _sweep(source, max_n)
    if claim == "omega":
        mismatches = [r for r in records if (r[4] == 2) != r[1]]
        if mismatches:
            g = mismatches[0][0]
            return discrepancy(0, len(mismatches), g,
                               f"omega(F_2^2(G)) = {mismatches[0][4]} while G "
                               f"{'is' if mismatches[0][1] else 'is not'} a union of paths")
        return passed(0, 0)
    for g, forest, bipartite, chi, omega in records:
        holds = bipartite if claim == "bipartite" else chi <= 2
        if holds != forest:
            return failed(forest, holds, g, f"{claim} of F_2^2(G) disagrees with G being a union of paths")
    return passed(len(records), len(records))


@register("bipartite_characterization", "F_2^2(G) is bipartite iff G is a union of paths",
          {"source": ["labeled", "families"], "claim": ["bipartite", "chi", "omega"]})
def bipartite_characterization(ctx: CheckContext) -> Iterator[Case]:
    max_n = min(8, ctx.caps.max_n)
    sources = ["families"] + (["labeled"] if ctx.caps.max_n >= 5 else [])
    for source in sources:
        for claim in ("bipartite", "chi", "omega"):
            yield Case({"source": source, "claim": claim},
                       partial(_characterization, source, max_n, claim))


def _arcs_union(k: int, claim: str) -> Outcome:
    count = 0
    for g in all_labeled_graphs(5):
        literal = arcs_union_complete_condition(g, k, "literal")
        if claim == "theorem":
            complete_union = is_complete(build_move_union(g, k).graph)
            if literal != complete_union:
                return failed(literal, complete_union, g,
                              f"complement condition and completeness of the move union disagree (k={k})")
        else:
            derived = arcs_union_complete_condition(g, k, "derived")
            if literal != derived:
                return failed(literal, derived, g,
                              f"literal and disconnected-subset complement checks disagree (k={k})")
        count += 1
    return passed(count, count)


@register("arcs_union_complete", "the move union is complete iff G^c has no K_a+b or K_a,b, a+b > k",
          {"k": [2, 3], "claim": ["theorem", "derived"]})
def arcs_union_complete(ctx: CheckContext) -> Iterator[Case]:
    if ctx.caps.max_n < 5:
        return
    for k in (2, 3):
        for claim in ("theorem", "derived"):
            yield Case({"n": 5, "k": k, "claim": claim}, partial(_arcs_union, k, claim))


def _complement_host(host: Graph) -> Outcome:
    lhs = f22(host).graph
    rhs = complement(build_token_graph(host, 2, 1).graph)
    missing = [e for e in rhs.edges() if not lhs.has_edge(*e)]
    if missing:
        return failed(rhs.edge_count, lhs.edge_count, host,
                      f"edge {missing[0]} of F_2(G)^c is missing from F_2^2(G)")
    if lhs != rhs:
        return discrepancy(rhs.edge_count, lhs.edge_count, host,
                           "F_2^2(G) strictly contains F_2(G)^c; G has a triangle")
    return passed(rhs.edge_count, lhs.edge_count)


def _complement_corollary(n: int, j: int) -> Outcome:
    removed = [(2 * t, 2 * t + 1) for t in range(j)]
    return _complement_host(complement(from_edge_list(n, removed)))


def _complement_sweep(n: int) -> Outcome:
    hosts = [g for g in all_labeled_graphs(n) if complement(g).max_degree() <= 1]
    strict = []
    for host in hosts:
        outcome = _complement_host(host)
        if outcome.status == FAIL:
            return outcome
        if outcome.status == DISCREPANCY:
            strict.append(host)
    if strict:
        return discrepancy(0, len(strict), strict[0],
                           f"F_2^2(G) strictly contains F_2(G)^c on {len(strict)} of {len(hosts)} graphs")
    return passed(len(hosts), len(hosts))


@register("complement_corollary", "F_2^2(G) against F_2(G)^c when G^c is a matching",
          {"n": "2..8", "matching": "0..n/2", "labeled": 5})
def complement_corollary(ctx: CheckContext) -> Iterator[Case]:
    for n in ctx.sizes(range(2, 9)):
        for j in range(n // 2 + 1):
            yield Case({"n": n, "matching": j}, partial(_complement_corollary, n, j))
    if ctx.caps.max_n >= 5:
        yield Case({"n": 5, "source": "labeled"}, partial(_complement_sweep, 5))


def _aut_embedding(ctx: CheckContext, graphs: list[Graph]) -> Outcome:
    for g in graphs:
        budget = ctx.budget()
        group = automorphism_group(g, budget)
        tg = f22(g)
        token_order = automorphism_group(tg.graph, budget).order
        if token_order % group.order:
            return failed(f"{group.order} divides", str(token_order), g,
                          "|Aut(G)| does not divide |Aut(F_2^2(G))|")
        for f in group.elements():
            phi = induced_token_automorphism(g, f, tg)
            if not f.is_identity() and phi.is_identity():
                return failed("injective", f.to_json(), g, "a non-trivial automorphism induces the identity")
    return passed(len(graphs), len(graphs))


@register("aut_embedding", "Aut(G) embeds in Aut(F_2^2(G)) via induced maps", {"n": "3..7"})
def aut_embedding(ctx: CheckContext) -> Iterator[Case]:
    for n in ctx.sizes(range(3, 8)):
        graphs = [sample_graph(ctx.rng, n) for _ in range(20)]
        yield Case({"n": n, "graphs": len(graphs)}, partial(_aut_embedding, ctx, graphs))


def _aut_kmn(ctx: CheckContext, m: int, n: int) -> Outcome:
    host = complete_bipartite(m, n)
    formula = factorial(m * n) * factorial(comb(n, 2)) * factorial(comb(m, 2))
    actual = automorphism_group(f22(host).graph, ctx.budget()).order
    if actual == formula:
        return passed(str(formula), str(actual))
    if comb(m, 2) == comb(n, 2) and actual == 2 * formula:
        return discrepancy(str(formula), str(actual), host,
                           "the biclique component has equal sides, which can be swapped")
    return failed(str(formula), str(actual), host, "automorphism group order differs")


@register("aut_kmn", "|Aut(F_2^2(K_m,n))| against (mn)! C(n,2)! C(m,2)!",
          {"(m,n)": [[2, 2], [2, 3], [2, 4], [3, 3]]})
def aut_kmn(ctx: CheckContext) -> Iterator[Case]:
    for m, n in ((2, 2), (2, 3), (2, 4), (3, 3)):
        if m + n <= ctx.caps.max_n:
            yield Case({"m": m, "n": n}, partial(_aut_kmn, ctx, m, n))


def _aut_odd_cycle(ctx: CheckContext, n: int) -> Outcome:
    host = cycle(n)
    actual = automorphism_group(f22(host).graph, ctx.budget()).order
    return expect(str(4 * n), str(actual), host, f"|Aut(F_2^2(C_{n}))| is not 4n")


@register("aut_odd_cycle", "|Aut(F_2^2(C_n))| = 4n for odd n", {"n": [5, 7, 9]})
def aut_odd_cycle(ctx: CheckContext) -> Iterator[Case]:
    for n in ctx.sizes((5, 7, 9)):
        yield Case({"n": n}, partial(_aut_odd_cycle, ctx, n))


def _diamond(ctx: CheckContext) -> Outcome:
    host = diamond()
    g = f22(host).graph
    expected = {"degrees": [1, 4, 4, 4, 4, 5], "aut": "24"}
    actual = {
        "degrees": sorted(g.degrees()),
        "aut": str(automorphism_group(g, ctx.budget()).order),
    }
    return expect(expected, actual, host, "F_2^2(diamond) differs from the worked example")


@register("diamond_example", "F_2^2 of the diamond: degrees and automorphism group")
def diamond_example(ctx: CheckContext) -> Iterator[Case]:
    yield Case({}, partial(_diamond, ctx))


def _alpha_tensor_paths(ctx: CheckContext, m: int, n: int) -> Outcome:
    host = tensor_product(path(m), path(n))
    actual = independence_number(host, ctx.budget()).value
    cited = cited_alpha_direct_paths(m, n)
    if cited == actual:
        return passed(str(cited), actual)
    return discrepancy(str(cited), actual, host, f"closed form for alpha(P_{m} x P_{n}) does not match")


def _alpha_path_union(ctx: CheckContext, m: int, n: int) -> Outcome:
    host = disjoint_union(path(n), path(m))
    budget = ctx.budget()
    tensor_alpha = independence_number(tensor_product(path(n), path(m)), budget).value
    expected = (n // 2) * ((n + 1) // 2) + (m // 2) * ((m + 1) // 2) + tensor_alpha
    actual = independence_number(f22(host).graph, budget).value
    return expect(expected, actual, host, f"alpha(F_2^2(P_{n} + P_{m})) differs")


@register("alpha_direct_product_paths", "alpha(P_m x P_n) and alpha(F_2^2(P_n + P_m))",
          {"m": "2..6", "n": "2..6"})
def alpha_direct_product_paths(ctx: CheckContext) -> Iterator[Case]:
    for m in range(2, 7):
        for n in range(2, 7):
            yield Case({"m": m, "n": n, "claim": "cited"}, partial(_alpha_tensor_paths, ctx, m, n))
    for m in range(2, 6):
        for n in range(m, 6):
            if m + n <= ctx.caps.max_n:
                yield Case({"m": m, "n": n, "claim": "union"}, partial(_alpha_path_union, ctx, m, n))


def _conjecture(ctx: CheckContext, graphs: list[Graph]) -> Outcome:
    equal, different = [], []
    for g in graphs:
        budget = ctx.budget()
        base = automorphism_group(g, budget).order
        token = automorphism_group(f22(g).graph, budget).order
        row = {"graph6": g6(g), "aut": str(base), "aut_f22": str(token)}
        (equal if base == token else different).append(row)
    return passed(None, {"equal": equal, "different": different})


@register("conjecture_scan", "compare |Aut(G)| with |Aut(F_2^2(G))| on connected graphs",
          {"n": "3..7"})
def conjecture_scan(ctx: CheckContext) -> Iterator[Case]:
    for n in ctx.sizes(range(3, 8)):
        graphs = [sample_graph(ctx.rng, n, "connected") for _ in range(10)]
        yield Case({"n": n, "graphs": len(graphs)}, partial(_conjecture, ctx, graphs))

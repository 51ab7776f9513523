from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import graphs
from tokengraphs.errors import ParameterError
from tokengraphs.families import complete, cycle, diamond, path, star
from tokengraphs.graph import Graph
from tokengraphs.tokens import (
    arcs_union_complete_condition,
    build_move_union,
    build_token_graph,
    build_variant,
    complement_biclique_witness,
    config_adjacent,
    configurations,
    disconnected_subset_witness,
    is_complete,
    ordinary_token_graph,
    predicted_degree_f22,
)


@st.composite
def graphs_and_k(draw, max_n: int = 6):
    g = draw(graphs(min_n=1, max_n=max_n))
    k = draw(st.integers(1, g.n))
    return g, k


class TestAdjacency:
    def test_c4_two_token_moves(self, c4):
        assert config_adjacent(c4, (0, 1), (0, 3), 2)
        assert config_adjacent(c4, (0, 2), (1, 3), 2)
        assert not config_adjacent(c4, (0, 2), (1, 3), 1)

    def test_equal_configs_are_not_adjacent(self, c4):
        assert not config_adjacent(c4, (0, 1), (0, 1), 1)

    def test_p3_opposite_ends_isolated_in_f22(self, p3):
        assert not any(config_adjacent(p3, (0, 2), b, 2) for b in [(0, 1), (1, 2)])

    def test_size_mismatch(self, c4):
        with pytest.raises(ParameterError, match="differs"):
            config_adjacent(c4, (0, 1), (0, 1, 2), 1)

    @given(graphs_and_k(max_n=5), st.data())
    def test_symmetric(self, host, data):
        g, k = host
        m = data.draw(st.integers(1, k))
        configs = configurations(g.n, k)
        a = data.draw(st.sampled_from(configs))
        b = data.draw(st.sampled_from(configs))
        assert config_adjacent(g, a, b, m) == config_adjacent(g, b, a, m)


class TestBuild:
    def test_labels_are_lexicographic(self, c4):
        tg = build_token_graph(c4, 2, 2)
        assert tg.labels == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
        assert tg.index_of((3, 1)) == 4
        assert tg.describe() == "F_2^2"

    def test_unknown_config(self, c4):
        with pytest.raises(ParameterError, match="not a vertex"):
            build_token_graph(c4, 2, 2).index_of((0, 4))

    def test_f22_c4(self, c4):
        tg = build_token_graph(c4, 2, 2)
        assert tg.n == 6
        assert tg.graph.edge_count == 7
        assert sorted(tg.graph.degrees()) == [1, 1, 3, 3, 3, 3]

    def test_f22_p3(self, p3):
        assert build_token_graph(p3, 2, 2).graph.edges() == [(0, 2)]

    def test_f22_star(self):
        tg = build_token_graph(star(3), 2, 2)
        assert tg.graph.degrees() == [2, 2, 2, 0, 0, 0]

    def test_f2_p3_is_p3(self, p3):
        assert build_token_graph(p3, 2, 1).graph == p3

    def test_f1_is_host(self):
        g = diamond()
        assert build_token_graph(g, 1, 1).graph == g
        assert build_move_union(g, 1).graph == g

    @pytest.mark.parametrize("k, m", [(0, 1), (5, 1), (2, 3), (2, 0)])
    def test_parameter_ranges(self, c4, k, m):
        with pytest.raises(ParameterError):
            build_token_graph(c4, k, m)

    @settings(max_examples=60)
    @given(graphs_and_k())
    def test_m1_is_ordinary_token_graph(self, data):
        g, k = data
        assert build_token_graph(g, k, 1).graph == ordinary_token_graph(g, k).graph

    @settings(max_examples=60)
    @given(graphs_and_k(max_n=5), st.data())
    def test_edges_move_at_most_m_tokens(self, host, data):
        g, k = host
        m = data.draw(st.integers(1, k))
        tg = build_token_graph(g, k, m)
        for i, j in tg.graph.edges():
            moved = set(tg.labels[i]) - set(tg.labels[j])
            assert 1 <= len(moved) <= m


class TestVariants:
    def test_matching_variant_c4(self, c4):
        tg = build_variant(c4, 2, 2, "matching")
        assert tg.graph.edge_count == 3
        assert not tg.graph.has_edge(tg.index_of((0, 1)), tg.index_of((0, 3)))

    def test_all_edges_variant_c4(self, c4):
        tg = build_variant(c4, 2, 2, "all_edges")
        assert tg.graph.edges() == [(tg.index_of((0, 2)), tg.index_of((1, 3)))]

    def test_unknown_kind(self, c4):
        with pytest.raises(ParameterError, match="kind"):
            build_variant(c4, 2, 1, "some_edges")

    @settings(max_examples=60)
    @given(graphs_and_k())
    def test_r1_matching_is_ordinary_token_graph(self, data):
        g, k = data
        assert build_variant(g, k, 1, "matching").graph == ordinary_token_graph(g, k).graph

    @given(graphs_and_k(max_n=5))
    def test_all_edges_within_matching(self, data):
        g, k = data
        for r in range(1, k + 1):
            strict = build_variant(g, k, r, "all_edges").graph
            loose = build_variant(g, k, r, "matching").graph
            assert all(loose.has_edge(u, v) for u, v in strict.edges())

    def test_move_union_contains_every_layer(self):
        g = diamond()
        union = build_move_union(g, 2).graph
        for m in (1, 2):
            layer = build_token_graph(g, 2, m).graph
            assert all(union.has_edge(u, v) for u, v in layer.edges())


class TestDegreeFormula:
    def test_examples(self, c4):
        assert predicted_degree_f22(c4, 0, 2) == 1
        assert predicted_degree_f22(c4, 0, 1) == 3
        assert predicted_degree_f22(complete(3), 0, 1) == 2

    def test_same_vertex(self, c4):
        with pytest.raises(ParameterError):
            predicted_degree_f22(c4, 1, 1)

    @settings(max_examples=100)
    @given(graphs(min_n=2, max_n=7))
    def test_matches_built_graph(self, g):
        tg = build_token_graph(g, 2, 2)
        for v, w in combinations(range(g.n), 2):
            assert tg.graph.degree(tg.index_of((v, w))) == predicted_degree_f22(g, v, w)


class TestComplementCondition:
    def test_p4_has_biclique(self):
        kind, x, y = complement_biclique_witness(path(4), 2)
        assert kind == "biclique"
        assert len(x) + len(y) == 3
        assert not any(path(4).has_edge(a, b) for a in x for b in y)
        assert disconnected_subset_witness(path(4), 2) == (0, 1, 3)

    def test_empty_host_has_clique(self):
        assert complement_biclique_witness(Graph.empty(4), 2) == ("clique", (0, 1, 2), ())

    @pytest.mark.parametrize("g", [complete(4), cycle(4), path(3)])
    def test_condition_holds(self, g):
        assert arcs_union_complete_condition(g, 2)
        assert is_complete(build_move_union(g, 2).graph)

    def test_condition_fails_for_p4(self):
        assert not arcs_union_complete_condition(path(4), 2, method="literal")
        assert not is_complete(build_move_union(path(4), 2).graph)

    def test_unknown_method(self, c4):
        with pytest.raises(ParameterError, match="method"):
            arcs_union_complete_condition(c4, 2, method="guess")

    @settings(max_examples=150)
    @given(graphs_and_k(max_n=5))
    def test_literal_matches_derived(self, data):
        g, k = data
        assert arcs_union_complete_condition(g, k, "literal") == arcs_union_complete_condition(g, k, "derived")

    @settings(max_examples=100)
    @given(graphs_and_k(max_n=5))
    def test_condition_iff_union_complete(self, data):
        g, k = data
        assume(g.n >= 2)
        assert arcs_union_complete_condition(g, k) == is_complete(build_move_union(g, k).graph)

from __future__ import annotations

import pytest
from hypothesis import given

from conftest import graphs, graphs_with_permutation
from tokengraphs.errors import ParameterError
from tokengraphs.families import complete, cycle, path, star
from tokengraphs.graph import (
    Graph,
    cartesian_product,
    complement,
    disjoint_union,
    from_edge_list,
    induced_subgraph,
    is_linear_forest,
    leaf_stars,
    relabel,
    tensor_product,
)


class TestConstruction:
    def test_path_from_edges(self):
        g = from_edge_list(3, [(0, 1), (1, 2)])
        assert g.n == 3
        assert g.edges() == [(0, 1), (1, 2)]
        assert g.degrees() == [1, 2, 1]

    def test_duplicates_collapse(self):
        g = from_edge_list(4, [(0, 1), (1, 0)])
        assert g.edges() == [(0, 1)]
        assert g.edge_count == 1

    def test_self_loop_rejected_with_position(self):
        with pytest.raises(ParameterError, match=r"edges\[0\].*self-loop"):
            from_edge_list(2, [(0, 0)])

    def test_out_of_range_rejected_with_position(self):
        with pytest.raises(ParameterError, match=r"edges\[1\]"):
            from_edge_list(3, [(0, 1), (1, 3)])

    def test_asymmetric_masks_rejected(self):
        with pytest.raises(ParameterError, match="symmetric"):
            Graph(2, (0b10, 0b00))

    def test_empty_graph(self):
        g = Graph.empty(3)
        assert g.edge_count == 0
        assert g.max_degree() == 0


class TestOperations:
    def test_disjoint_union_single_vertices(self):
        g = disjoint_union(Graph.empty(1), Graph.empty(1))
        assert g.n == 2 and g.edge_count == 0

    def test_disjoint_union_shifts_second_graph(self):
        g = disjoint_union(path(2), path(3))
        assert g.n == 5
        assert g.edges() == [(0, 1), (2, 3), (3, 4)]

    def test_complement_of_triangle_is_edgeless(self):
        assert complement(complete(3)).edge_count == 0

    def test_complement_of_c4_is_matching(self):
        assert complement(cycle(4)).edges() == [(0, 2), (1, 3)]

    @given(graphs())
    def test_complement_is_involution(self, g):
        assert complement(complement(g)) == g

    def test_cartesian_c5_p2(self):
        g = cartesian_product(cycle(5), path(2))
        assert g.n == 10
        assert g.edge_count == 15

    def test_tensor_k2_k2(self):
        g = tensor_product(complete(2), complete(2))
        assert g.n == 4
        assert g.edges() == [(0, 3), (1, 2)]

    def test_cartesian_with_k1_is_identity(self):
        g = cycle(6)
        assert cartesian_product(g, Graph.empty(1)) == g

    @given(graphs(max_n=4), graphs(max_n=4))
    def test_product_edge_counts(self, g, h):
        box = cartesian_product(g, h)
        cross = tensor_product(g, h)
        assert box.n == cross.n == g.n * h.n
        assert box.edge_count == g.n * h.edge_count + h.n * g.edge_count
        assert cross.edge_count == 2 * g.edge_count * h.edge_count

    def test_induced_subgraph_renumbers(self):
        g = induced_subgraph(cycle(5), [4, 0, 1])
        assert g.edges() == [(0, 1), (1, 2)]

    @given(graphs_with_permutation())
    def test_relabel_preserves_degrees(self, data):
        g, images = data
        h = relabel(g, images)
        assert sorted(h.degrees()) == sorted(g.degrees())
        assert all(h.has_edge(images[u], images[v]) for u, v in g.edges())

    def test_relabel_rejects_non_permutation(self):
        with pytest.raises(ParameterError):
            relabel(path(3), [0, 0, 1])

    @given(graphs())
    def test_handshake(self, g):
        assert sum(g.degrees()) == 2 * g.edge_count


class TestLeaves:
    def test_star_has_one_leaf_star(self):
        assert leaf_stars(star(4)) == [(0, frozenset({1, 2, 3, 4}))]

    def test_cycle_has_no_leaves(self):
        assert leaf_stars(cycle(6)) == []

    def test_path_endpoints(self):
        assert leaf_stars(path(4)) == [(1, frozenset({0})), (2, frozenset({3}))]

    def test_single_edge(self):
        assert leaf_stars(path(2)) == [(0, frozenset({1})), (1, frozenset({0}))]


class TestLinearForest:
    @pytest.mark.parametrize(
        "g, expected",
        [
            (path(4), True),
            (Graph.empty(3), True),
            (disjoint_union(path(2), path(3)), True),
            (cycle(4), False),
            (star(3), False),
            (disjoint_union(path(3), cycle(3)), False),
        ],
    )
    def test_examples(self, g, expected):
        assert is_linear_forest(g) is expected

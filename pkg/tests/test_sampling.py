from __future__ import annotations

import pytest

from tokengraphs.budget import Budget
from tokengraphs.errors import BudgetExceeded, ParameterError
from tokengraphs.invariants import is_bipartite, is_connected
from tokengraphs.sampling import all_labeled_graphs, random_permutation, rng_for, sample_graph


def test_streams_depend_on_seed_and_name():
    first = [sample_graph(rng_for(4, "degree_formula"), 7) for _ in range(5)]
    again = [sample_graph(rng_for(4, "degree_formula"), 7) for _ in range(5)]
    other = [sample_graph(rng_for(4, "aut_embedding"), 7) for _ in range(5)]
    assert first == again
    assert first != other


@pytest.mark.parametrize("kind, check", [
    ("connected", is_connected),
    ("bipartite", is_bipartite),
    ("non_bipartite", lambda g: not is_bipartite(g)),
])
def test_classes(kind, check):
    rng = rng_for(0, kind)
    assert all(check(sample_graph(rng, 6, kind)) for _ in range(20))


def test_connected_bipartite():
    rng = rng_for(1, "bipartite")
    for _ in range(10):
        g = sample_graph(rng, 5, "bipartite", connected=True)
        assert is_bipartite(g) and is_connected(g)


def test_unknown_class():
    with pytest.raises(ParameterError):
        sample_graph(rng_for(0, "x"), 4, "planar")


def test_all_labeled_graphs():
    graphs = list(all_labeled_graphs(3))
    assert len(graphs) == 8
    assert len(set(graphs)) == 8
    assert sorted(g.edge_count for g in graphs) == [0, 1, 1, 1, 2, 2, 2, 3]


def test_random_permutation():
    images = random_permutation(9, rng_for(2, "perm"))
    assert sorted(images) == list(range(9))


class TestBudget:
    def test_node_limit(self):
        budget = Budget(node_limit=3)
        for _ in range(3):
            budget.tick()
        with pytest.raises(BudgetExceeded) as info:
            budget.tick()
        assert info.value.nodes == 4

    def test_unbounded(self):
        budget = Budget()
        budget.tick(10_000)
        assert budget.nodes == 10_000

    @pytest.mark.parametrize("kwargs", [{"node_limit": 0}, {"timeout": -1.0}])
    def test_invalid_limits(self, kwargs):
        with pytest.raises(ParameterError):
            Budget(**kwargs)

from __future__ import annotations

import pytest

from tokengraphs.colorings import coloring_conflicts, cycle_coloring, odd_distance_configs
from tokengraphs.errors import ParameterError
from tokengraphs.families import cycle
from tokengraphs.tokens import build_token_graph


def test_odd_distance_configs_c6():
    configs = odd_distance_configs(6)
    assert len(configs) == 9
    assert (0, 1) in configs and (0, 3) in configs and (0, 5) in configs
    assert (0, 2) not in configs


@pytest.mark.parametrize("n, variant", [(6, "c"), (8, "c"), (12, "c"), (10, "c_prime")])
def test_rules_cover_the_component(n, variant):
    coloring = cycle_coloring(n, variant)
    assert set(coloring) == set(odd_distance_configs(n))
    assert set(coloring.values()) <= {0, 1, 2}


def test_c_prime_on_labels_one_to_three():
    coloring = cycle_coloring(10, "c_prime")
    assert coloring[(0, 1)] == 2
    assert coloring[(1, 4)] == 1
    # label 3 falls through to the x mod 3 rule
    assert coloring[(2, 3)] == 0
    assert coloring[(2, 5)] == 0
    assert coloring[(3, 4)] == 1


def test_rule_c_on_c6_has_a_conflict():
    tg = build_token_graph(cycle(6), 2, 2)
    conflicts = coloring_conflicts(tg, cycle_coloring(6, "c"))
    assert ((0, 5), (4, 5)) in conflicts


def test_conflicts_ignore_uncoloured_vertices():
    tg = build_token_graph(cycle(6), 2, 2)
    assert coloring_conflicts(tg, {(0, 1): 0}) == []


@pytest.mark.parametrize(
    "n, variant, match",
    [
        (7, "c", "even"),
        (4, "c", "even"),
        (10, "c", "not congruent"),
        (8, "c_prime", "congruent to 1"),
        (6, "d", "expected one of"),
    ],
)
def test_invalid_arguments(n, variant, match):
    with pytest.raises(ParameterError, match=match):
        cycle_coloring(n, variant)
